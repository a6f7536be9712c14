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

#include "gbit/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gbit/errors.hpp"

namespace gbit {

namespace {

void require_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw InvalidInput(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                           " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

BlochState::BlochState(Vector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1) throw InvalidInput("BlochState: dimension must be positive");
    if (!coords_.allFinite()) throw InvalidInput("BlochState: non-finite coordinate");
    if (coords_.norm() > 1.0 + kNormTol) {
        throw InvalidInput("BlochState: norm " + std::to_string(coords_.norm()) +
                           " lies outside the unit ball");
    }
}

BlochState BlochState::pole(int dim, int axis) {
    if (dim < 1 || axis < 0 || axis >= dim) throw InvalidInput("BlochState::pole: bad axis");
    return BlochState(Vector::Unit(dim, axis));
}

BlochState BlochState::maximally_mixed(int dim) {
    if (dim < 1) throw InvalidInput("BlochState: dimension must be positive");
    return BlochState(Vector::Zero(dim));
}

bool BlochState::is_pure() const { return std::abs(coords_.norm() - 1.0) <= kNormTol; }

BlochState BlochState::renormalized() const {
    if (!is_pure()) return *this;
    return BlochState(coords_ / coords_.norm());
}

Effect::Effect(Vector axis) : axis_(std::move(axis)) {
    if (axis_.size() < 1) throw InvalidInput("Effect: dimension must be positive");
    if (!axis_.allFinite() || std::abs(axis_.norm() - 1.0) > kNormTol) {
        throw InvalidInput("Effect: axis must be a unit vector");
    }
}

Effect Effect::along(int dim, int axis) {
    if (dim < 1 || axis < 0 || axis >= dim) throw InvalidInput("Effect::along: bad axis");
    return Effect(Vector::Unit(dim, axis));
}

double orthogonality_defect(const Matrix& m) {
    const Matrix gram = m.transpose() * m - Matrix::Identity(m.cols(), m.cols());
    return gram.cwiseAbs().maxCoeff();
}

OrthogonalTransform::OrthogonalTransform(Matrix m) : m_(std::move(m)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        throw InvalidInput("OrthogonalTransform: matrix must be square and non-empty");
    }
    if (!m_.allFinite()) throw InvalidInput("OrthogonalTransform: non-finite entry");
    const double defect = gbit::orthogonality_defect(m_);
    if (defect >= kOrthoTol) {
        throw InvalidInput("OrthogonalTransform: orthogonality defect " + std::to_string(defect));
    }
    det_sign_ = m_.determinant() < 0.0 ? -1 : 1;
}

OrthogonalTransform OrthogonalTransform::identity(int dim) {
    return OrthogonalTransform(Matrix::Identity(dim, dim));
}

OrthogonalTransform OrthogonalTransform::inverse() const {
    return OrthogonalTransform(m_.transpose());
}

OrthogonalTransform OrthogonalTransform::operator*(const OrthogonalTransform& rhs) const {
    require_same_dim(dim(), rhs.dim(), "OrthogonalTransform product");
    return OrthogonalTransform(m_ * rhs.m_);
}

double OrthogonalTransform::orthogonality_defect() const { return gbit::orthogonality_defect(m_); }

DensityMatrix::DensityMatrix(Matrix2c entries) : rho_(entries) {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
        throw InvalidInput("DensityMatrix: not Hermitian");
    }
    if (std::abs(rho_.trace() - std::complex<double>(1.0, 0.0)) > kNormTol) {
        throw InvalidInput("DensityMatrix: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix2c> eig(rho_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kNormTol) {
        throw InvalidInput("DensityMatrix: negative eigenvalue");
    }
}

Matrix2c pauli(int index) {
    using C = std::complex<double>;
    Matrix2c s;
    switch (index) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, C(0, -1), C(0, 1), 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw InvalidInput("pauli: index must be 1, 2 or 3");
    }
    return s;
}

ClickStatistics outcome_probability(const Effect& e, const BlochState& w) {
    require_same_dim(e.dim(), w.dim(), "outcome_probability");
    // |e.w| may exceed 1 by rounding for pure states.
    const double overlap = std::clamp(e.axis().dot(w.coords()), -1.0, 1.0);
    return {(1.0 + overlap) / 2.0, (1.0 - overlap) / 2.0};
}

BlochState apply_transform(const OrthogonalTransform& t, const BlochState& w) {
    require_same_dim(t.dim(), w.dim(), "apply_transform");
    return BlochState(t.matrix() * w.coords());
}

BlochState mix(const BlochState& w1, const BlochState& w2, double lambda) {
    require_same_dim(w1.dim(), w2.dim(), "mix");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidInput("mix: weight outside [0,1]");
    if (lambda == 1.0) return w1;
    if (lambda == 0.0) return w2;
    return BlochState(lambda * w1.coords() + (1.0 - lambda) * w2.coords());
}

DensityMatrix qubit_bridge(const BlochState& w) {
    if (w.dim() != 3) throw UnsupportedDimension("qubit_bridge: requires d = 3");
    Matrix2c rho = Matrix2c::Identity();
    for (int i = 0; i < 3; ++i) rho += w[i] * pauli(i + 1);
    return DensityMatrix(rho / 2.0);
}

BlochState bloch_from_density(const DensityMatrix& rho) {
    Vector w(3);
    for (int i = 0; i < 3; ++i) w[i] = (rho.entries() * pauli(i + 1)).trace().real();
    return BlochState(w);
}

ClickStatistics quantum_mzi_oracle(double phi_a, double phi_b) {
    using C = std::complex<double>;
    const double h = 1.0 / std::sqrt(2.0);
    Matrix2c hadamard;
    hadamard << h, h, h, -h;
    Matrix2c phases = Matrix2c::Zero();
    phases(0, 0) = std::polar(1.0, phi_a);
    phases(1, 1) = std::polar(1.0, phi_b);
    const Eigen::Vector2cd in(C(1, 0), C(0, 0));
    const Eigen::Vector2cd out = hadamard.adjoint() * phases * hadamard * in;
    const double p0 = std::norm(out[0]);
    const double p1 = std::norm(out[1]);
    const double total = p0 + p1;
    return {p0 / total, p1 / total};
}

}  // namespace gbit
