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

#include "gbit/lie.hpp"

#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gbit/errors.hpp"

namespace gbit {

namespace {

// Columns of `stack` are vectorized algebra elements. Returns an orthonormal
// basis of their numerical span.
Matrix span_basis(const Matrix& stack) {
    if (stack.cols() == 0) return Matrix(stack.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeThinU);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return Matrix(stack.rows(), 0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > kLieRankTol * sv[0]) ++rank;
    return svd.matrixU().leftCols(rank);
}

}  // namespace

Matrix algebra_element(const OrthogonalTransform& t) {
    const Matrix& m = t.matrix();
    Eigen::EigenSolver<Matrix> eig(m, false);
    for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
        if (std::abs(eig.eigenvalues()[k] + 1.0) < 1e-8) {
            throw InvalidInput(
                "algebra_element: -1 is an eigenvalue, logarithm undefined; "
                "pass antisymmetric algebra elements instead");
        }
    }
    const Matrix log = m.log();
    return (log - log.transpose()) / 2.0;
}

int lie_closure_dim(std::span<const Matrix> algebra) {
    if (algebra.empty()) return 0;
    const Eigen::Index d = algebra.front().rows();
    for (const Matrix& a : algebra) {
        if (a.rows() != d || a.cols() != d) throw InvalidInput("lie_closure_dim: mixed dimensions");
    }
    const Eigen::Index n = d * d;

    Matrix stack(n, static_cast<Eigen::Index>(algebra.size()));
    for (std::size_t k = 0; k < algebra.size(); ++k) {
        stack.col(static_cast<Eigen::Index>(k)) = algebra[k].reshaped();
    }
    Matrix basis = span_basis(stack);

    for (int round = 0; round < kLieMaxRounds; ++round) {
        const Eigen::Index k = basis.cols();
        std::vector<Matrix> elems;
        elems.reserve(static_cast<std::size_t>(k));
        for (Eigen::Index c = 0; c < k; ++c) elems.push_back(basis.col(c).reshaped(d, d));

        Matrix grown(n, k + k * (k - 1) / 2);
        grown.leftCols(k) = basis;
        Eigen::Index col = k;
        for (Eigen::Index a = 0; a < k; ++a) {
            for (Eigen::Index b = a + 1; b < k; ++b) {
                const Matrix bracket = elems[a] * elems[b] - elems[b] * elems[a];
                grown.col(col++) = bracket.reshaped();
            }
        }
        Matrix next = span_basis(grown);
        if (next.cols() == k) return static_cast<int>(k);
        basis = std::move(next);
    }
    throw NotConverged("lie_closure_dim: span did not stabilize within " +
                       std::to_string(kLieMaxRounds) + " rounds");
}

int lie_closure_dim(std::span<const OrthogonalTransform> generators) {
    std::vector<Matrix> algebra;
    algebra.reserve(generators.size());
    for (const auto& g : generators) {
        if (!algebra.empty() && g.dim() != algebra.front().rows()) {
            throw InvalidInput("lie_closure_dim: mixed dimensions");
        }
        algebra.push_back(algebra_element(g));
    }
    return lie_closure_dim(std::span<const Matrix>(algebra));
}

}  // namespace gbit
