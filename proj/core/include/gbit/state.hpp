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

#include <complex>

#include <Eigen/Dense>

namespace gbit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Matrix2c = Eigen::Matrix2cd;

/// Norm tolerance used for states and effects.
inline constexpr double kNormTol = 1e-12;
/// Max-entry tolerance on |M^T M - I| for orthogonal matrices.
inline constexpr double kOrthoTol = 1e-10;

/// A point of the d-dimensional Bloch ball.
///
/// Construction rejects coordinates outside the ball (norm > 1 + 1e-12).
/// Inputs inside the tolerance band are kept as given; call `renormalized()`
/// to project explicitly.
class BlochState {
  public:
    explicit BlochState(Vector coords);

    static BlochState pole(int dim, int axis = 0);
    static BlochState maximally_mixed(int dim);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Vector& coords() const { return coords_; }
    double operator[](int i) const { return coords_[i]; }
    double norm() const { return coords_.norm(); }
    bool is_pure() const;

    /// Pure states are scaled to unit norm; mixed states are returned as is.
    BlochState renormalized() const;

  private:
    Vector coords_;
};

/// Two-outcome measurement along a unit axis.
class Effect {
  public:
    explicit Effect(Vector axis);

    static Effect along(int dim, int axis = 0);

    int dim() const { return static_cast<int>(axis_.size()); }
    const Vector& axis() const { return axis_; }

  private:
    Vector axis_;
};

/// A reversible transformation: a real orthogonal d x d matrix.
class OrthogonalTransform {
  public:
    /// Throws InvalidInput unless the matrix is square and orthogonal to 1e-10.
    explicit OrthogonalTransform(Matrix m);

    static OrthogonalTransform identity(int dim);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    int det_sign() const { return det_sign_; }

    OrthogonalTransform inverse() const;
    OrthogonalTransform operator*(const OrthogonalTransform& rhs) const;

    /// Largest entry of |M^T M - I|.
    double orthogonality_defect() const;

  private:
    Matrix m_;
    int det_sign_ = 1;
};

double orthogonality_defect(const Matrix& m);

struct ClickStatistics {
    double p_detector1 = 1.0;
    double p_detector2 = 0.0;
};

/// 2x2 complex density matrix (Hermitian, unit trace, positive semidefinite).
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix2c entries);

    const Matrix2c& entries() const { return rho_; }
    std::complex<double> operator()(int r, int c) const { return rho_(r, c); }

  private:
    Matrix2c rho_;
};

/// Pauli matrices with sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
Matrix2c pauli(int index);

/// (1 + e.w)/2 and (1 - e.w)/2.
ClickStatistics outcome_probability(const Effect& e, const BlochState& w);

BlochState apply_transform(const OrthogonalTransform& t, const BlochState& w);

/// lambda * w1 + (1 - lambda) * w2.
BlochState mix(const BlochState& w1, const BlochState& w2, double lambda);

/// rho = (I + sum_i w_i sigma_i) / 2 for a d = 3 state.
DensityMatrix qubit_bridge(const BlochState& w);

/// Inverse of qubit_bridge: w_i = tr(rho sigma_i).
BlochState bloch_from_density(const DensityMatrix& rho);

/// Standard quantum Mach-Zehnder run: Hadamard beamsplitter, phase exp(i phi_a)
/// on |0>, exp(i phi_b) on |1>, Hadamard recombiner, then a Z measurement.
ClickStatistics quantum_mzi_oracle(double phi_a, double phi_b);

}  // namespace gbit
