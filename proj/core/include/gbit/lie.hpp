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

#include <span>

#include "gbit/state.hpp"

namespace gbit {

/// Relative singular-value cutoff for the numerical rank.
inline constexpr double kLieRankTol = 1e-8;
inline constexpr int kLieMaxRounds = 10;

/// Principal logarithm of an orthogonal matrix, returned as an antisymmetric
/// matrix. Throws InvalidInput when -1 is an eigenvalue (the logarithm is not
/// unique there; pass algebra elements instead).
Matrix algebra_element(const OrthogonalTransform& t);

/// Dimension of the smallest bracket-closed linear span containing the given
/// antisymmetric matrices. Throws NotConverged after kLieMaxRounds rounds.
int lie_closure_dim(std::span<const Matrix> algebra);

/// Same, with each group element first mapped through algebra_element().
int lie_closure_dim(std::span<const OrthogonalTransform> generators);

}  // namespace gbit
