// Copyright 2026 The gbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>

#include "gbit/state.hpp"

namespace gbit {

/// Hamilton quaternion w + x i + y j + z k, with i j = k.
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    /// Unit quaternion from hyperspherical angles:
    /// (cos a, sin a cos b, sin a sin b cos c, sin a sin b sin c).
    static Quaternion from_angles(double a, double b, double c);
    /// exp(theta u) for a unit pure-imaginary axis u = (ux, uy, uz).
    static Quaternion exp_axis(double theta, double ux, double uy, double uz);
    static Quaternion from_vector(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

    Eigen::Vector4d vector() const { return {w, x, y, z}; }
    double norm() const;
    bool is_unit(double tol = kNormTol) const;
    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Haar (uniform on S^3) unit quaternion.
Quaternion haar_quaternion(std::mt19937_64& rng);

/// Matrix of x -> q x on R^4 = H, basis (1, i, j, k). Requires |q| = 1.
OrthogonalTransform left_isoclinic(const Quaternion& q);
/// Matrix of x -> x q. Requires |q| = 1.
OrthogonalTransform right_isoclinic(const Quaternion& q);

/// Multiplication matrices without the unit-norm check.
Eigen::Matrix4d left_multiplication(const Quaternion& q);
Eigen::Matrix4d right_multiplication(const Quaternion& q);

/// Lift a 4x4 rotation to diag(1, M) acting on the equator of the 5-ball.
OrthogonalTransform embed_5(const OrthogonalTransform& m4);
/// Inverse of embed_5; throws unless the input has that block form.
OrthogonalTransform phase_block_5(const OrthogonalTransform& m5);

enum class IsoclinicKind { left, right, plus_minus_identity, general };

struct IsoclinicClass {
    IsoclinicKind kind = IsoclinicKind::general;
    /// Image of the quaternion 1 under the matrix.
    Quaternion q;
};

/// Decide whether a 4x4 rotation is left-isoclinic, right-isoclinic, both
/// (then it is +-identity) or neither, to 1e-10 entrywise.
IsoclinicClass isoclinic_classify(const OrthogonalTransform& m);

const char* to_string(IsoclinicKind kind);

}  // namespace gbit
