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

#include "gbit/quaternion.hpp"

#include <cmath>

#include "gbit/errors.hpp"

namespace gbit {

Quaternion Quaternion::from_angles(double a, double b, double c) {
    const double sa = std::sin(a);
    const double sb = std::sin(b);
    return {std::cos(a), sa * std::cos(b), sa * sb * std::cos(c), sa * sb * std::sin(c)};
}

Quaternion Quaternion::exp_axis(double theta, double ux, double uy, double uz) {
    const double s = std::sin(theta);
    return {std::cos(theta), s * ux, s * uy, s * uz};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

bool Quaternion::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion haar_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::Vector4d v;
    do {
        for (int i = 0; i < 4; ++i) v[i] = normal(rng);
    } while (v.norm() < 1e-6);
    return Quaternion::from_vector(v / v.norm());
}

Eigen::Matrix4d left_multiplication(const Quaternion& q) {
    const double a = q.w, b = q.x, c = q.y, d = q.z;
    Eigen::Matrix4d m;
    m << a, -b, -c, -d,
         b,  a, -d,  c,
         c,  d,  a, -b,
         d, -c,  b,  a;
    return m;
}

Eigen::Matrix4d right_multiplication(const Quaternion& q) {
    const double a = q.w, b = q.x, c = q.y, d = q.z;
    Eigen::Matrix4d m;
    m << a, -b, -c, -d,
         b,  a,  d, -c,
         c, -d,  a,  b,
         d,  c, -b,  a;
    return m;
}

namespace {

void require_unit(const Quaternion& q, const char* what) {
    if (!q.is_unit()) throw InvalidInput(std::string(what) + ": quaternion must have unit norm");
}

}  // namespace

OrthogonalTransform left_isoclinic(const Quaternion& q) {
    require_unit(q, "left_isoclinic");
    return OrthogonalTransform(left_multiplication(q));
}

OrthogonalTransform right_isoclinic(const Quaternion& q) {
    require_unit(q, "right_isoclinic");
    return OrthogonalTransform(right_multiplication(q));
}

OrthogonalTransform embed_5(const OrthogonalTransform& m4) {
    if (m4.dim() != 4) throw UnsupportedDimension("embed_5: expects a 4x4 matrix");
    Matrix m = Matrix::Identity(5, 5);
    m.bottomRightCorner(4, 4) = m4.matrix();
    return OrthogonalTransform(std::move(m));
}

OrthogonalTransform phase_block_5(const OrthogonalTransform& m5) {
    if (m5.dim() != 5) throw UnsupportedDimension("phase_block_5: expects a 5x5 matrix");
    const Matrix& m = m5.matrix();
    const double off = std::max(m.row(0).tail(4).cwiseAbs().maxCoeff(),
                                m.col(0).tail(4).cwiseAbs().maxCoeff());
    if (off > kOrthoTol || std::abs(m(0, 0) - 1.0) > kOrthoTol) {
        throw InvalidInput("phase_block_5: matrix does not fix the first axis");
    }
    return OrthogonalTransform(Matrix(m.bottomRightCorner(4, 4)));
}

IsoclinicClass isoclinic_classify(const OrthogonalTransform& m) {
    if (m.dim() != 4) throw UnsupportedDimension("isoclinic_classify: expects a 4x4 matrix");
    if (m.det_sign() < 0) throw InvalidInput("isoclinic_classify: determinant -1, not a rotation");
    const Eigen::Matrix4d mat = m.matrix();
    const Quaternion q = Quaternion::from_vector(mat.col(0));
    const bool is_left = (mat - left_multiplication(q)).cwiseAbs().maxCoeff() <= kOrthoTol;
    const bool is_right = (mat - right_multiplication(q)).cwiseAbs().maxCoeff() <= kOrthoTol;
    IsoclinicKind kind = IsoclinicKind::general;
    if (is_left && is_right) {
        kind = IsoclinicKind::plus_minus_identity;
    } else if (is_left) {
        kind = IsoclinicKind::left;
    } else if (is_right) {
        kind = IsoclinicKind::right;
    }
    return {kind, q};
}

const char* to_string(IsoclinicKind kind) {
    switch (kind) {
        case IsoclinicKind::left: return "left";
        case IsoclinicKind::right: return "right";
        case IsoclinicKind::plus_minus_identity: return "plus_minus_identity";
        case IsoclinicKind::general: return "general";
    }
    return "general";
}

}  // namespace gbit
