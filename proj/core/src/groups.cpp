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

#include "gbit/groups.hpp"

#include <cmath>
#include <random>
#include <string>

#include "gbit/errors.hpp"
#include "gbit/random.hpp"

namespace gbit {

namespace {

void check_plane(int dim, int i, int j) {
    if (dim < 2 || i < 0 || j < 0 || i >= dim || j >= dim || i == j) {
        throw InvalidInput("plane rotation: invalid plane (" + std::to_string(i) + "," +
                           std::to_string(j) + ") in dimension " + std::to_string(dim));
    }
}

Matrix haar_special_orthogonal_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Matrix g(dim, dim);
    // Column-major fill order is part of the determinism contract.
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) g(r, c) = normal(rng);
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix& r = qr.matrixQR();
    for (int c = 0; c < dim; ++c) {
        if (r(c, c) < 0.0) q.col(c) = -q.col(c);
    }
    if (q.determinant() < 0.0) q.col(dim - 1) = -q.col(dim - 1);
    return q;
}

}  // namespace

OrthogonalTransform plane_rotation(int dim, int i, int j, double theta) {
    check_plane(dim, i, j);
    Matrix m = Matrix::Identity(dim, dim);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    m(i, i) = c;
    m(j, j) = c;
    m(j, i) = s;
    m(i, j) = -s;
    return OrthogonalTransform(std::move(m));
}

OrthogonalTransform quarter_turn(int dim, int i, int j) {
    check_plane(dim, i, j);
    Matrix m = Matrix::Identity(dim, dim);
    m(i, i) = 0.0;
    m(j, j) = 0.0;
    m(j, i) = 1.0;
    m(i, j) = -1.0;
    return OrthogonalTransform(std::move(m));
}

OrthogonalTransform haar_orthogonal(int dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidInput("haar_orthogonal: dimension must be at least 1");
    std::mt19937_64 rng(seed);
    return OrthogonalTransform(haar_special_orthogonal_matrix(dim, rng));
}

StabilizerSample haar_stabilizer(int dim, const Effect& axis, std::uint64_t seed) {
    if (axis.dim() != dim) throw InvalidInput("haar_stabilizer: axis dimension mismatch");
    if (dim <= 2) return {OrthogonalTransform::identity(dim), true};

    std::mt19937_64 rng(seed);
    Matrix block = Matrix::Identity(dim, dim);
    block.bottomRightCorner(dim - 1, dim - 1) = haar_special_orthogonal_matrix(dim - 1, rng);

    const Vector& a = axis.axis();
    const Vector e1 = Vector::Unit(dim, 0);
    if ((a - e1).cwiseAbs().maxCoeff() == 0.0) return {OrthogonalTransform(std::move(block)), false};

    // Householder reflection H with H e1 = a; H block H fixes a.
    Vector v = e1 - a;
    Matrix h = Matrix::Identity(dim, dim) - 2.0 * v * v.transpose() / v.squaredNorm();
    return {OrthogonalTransform(h * block * h), false};
}

double stabilizer_residual(const OrthogonalTransform& t, const Effect& axis) {
    if (t.dim() != axis.dim()) throw InvalidInput("stabilizer_residual: dimension mismatch");
    return (t.matrix() * axis.axis() - axis.axis()).norm();
}

double commutator_defect(const OrthogonalTransform& ta, const OrthogonalTransform& tb) {
    if (ta.dim() != tb.dim()) throw InvalidInput("commutator_defect: dimension mismatch");
    return (ta.matrix() * tb.matrix() - tb.matrix() * ta.matrix()).norm();
}

std::vector<OrthogonalTransform> finite_stabilizer_elements(int dim, bool special) {
    if (dim < 1 || dim > 2) {
        throw UnsupportedDimension("finite_stabilizer_elements: stabilizer is infinite for d >= 3");
    }
    if (dim == 1) return {OrthogonalTransform::identity(1)};
    // First column is forced to e1; the second is a unit vector orthogonal to it: +-e2.
    std::vector<OrthogonalTransform> out;
    for (double sign : {1.0, -1.0}) {
        Matrix m(2, 2);
        m << 1.0, 0.0, 0.0, sign;
        OrthogonalTransform t(std::move(m));
        if (!special || t.det_sign() > 0) out.push_back(std::move(t));
    }
    return out;
}

OrthogonalTransform u2_embed(const Matrix2c& u) {
    const double defect = (u.adjoint() * u - Matrix2c::Identity()).cwiseAbs().maxCoeff();
    if (!u.allFinite() || defect > kNormTol) throw InvalidInput("u2_embed: matrix is not unitary");
    Matrix g(4, 4);
    g.topLeftCorner(2, 2) = u.real();
    g.topRightCorner(2, 2) = u.imag();
    g.bottomLeftCorner(2, 2) = -u.imag();
    g.bottomRightCorner(2, 2) = u.real();
    return OrthogonalTransform(std::move(g));
}

OrthogonalTransform u2_phase(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Matrix g(4, 4);
    g << 1, 0, 0, 0,
         0, c, 0, s,
         0, 0, 1, 0,
         0, -s, 0, c;
    return OrthogonalTransform(std::move(g));
}

}  // namespace gbit
