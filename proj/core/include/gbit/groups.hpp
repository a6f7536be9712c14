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

#include <cstdint>
#include <vector>

#include "gbit/state.hpp"

namespace gbit {

/// Rotation by `theta` in the coordinate plane (i, j), zero-based, mapping
/// e_i to cos(theta) e_i + sin(theta) e_j.
OrthogonalTransform plane_rotation(int dim, int i, int j, double theta);

/// Exact quarter turn e_i -> e_j, e_j -> -e_i (entries are exactly 0 and +-1).
OrthogonalTransform quarter_turn(int dim, int i, int j);

/// Haar-distributed element of SO(d), a deterministic function of (d, seed).
///
/// Gaussian d x d array -> QR -> columns scaled by sign(R_ii) -> last column
/// negated if the determinant is -1.
OrthogonalTransform haar_orthogonal(int dim, std::uint64_t seed);

struct StabilizerSample {
    OrthogonalTransform element;
    /// True when the phase group of the axis inside SO(d) is trivial (d <= 2);
    /// the element is then the identity.
    bool trivial_group = false;
};

/// Haar element of the subgroup of SO(d) fixing `axis`: identity on the axis,
/// Haar SO(d-1) on its orthogonal complement. For the first coordinate axis the
/// result is exactly diag(1, M).
StabilizerSample haar_stabilizer(int dim, const Effect& axis, std::uint64_t seed);

/// |T axis - axis|_2; zero certifies membership in the phase group of `axis`.
double stabilizer_residual(const OrthogonalTransform& t, const Effect& axis);

/// Frobenius norm of T_A T_B - T_B T_A.
double commutator_defect(const OrthogonalTransform& ta, const OrthogonalTransform& tb);

/// All elements of O(d) (or SO(d) when `special`) fixing e_1, for the dimensions
/// where that group is finite (d <= 2). Built by completing the first column
/// e_1 to an orthonormal frame.
std::vector<OrthogonalTransform> finite_stabilizer_elements(int dim, bool special);

/// Real 4x4 image [[Re U, Im U], [-Im U, Re U]] of a 2x2 unitary.
OrthogonalTransform u2_embed(const Matrix2c& u);

/// Phase group of e_1 inside the embedded U(2): fixes w1 and w3, rotates the
/// (w2, w4) plane. Equals u2_embed(diag(1, exp(i theta))).
OrthogonalTransform u2_phase(double theta);

}  // namespace gbit
