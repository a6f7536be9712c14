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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "gbit/errors.hpp"
#include "gbit/groups.hpp"
#include "oracles.hpp"

using namespace gbit;

namespace {

Matrix2c random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Matrix2c g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = {n(rng), n(rng)};
    Eigen::HouseholderQR<Matrix2c> qr(g);
    return qr.householderQ() * Matrix2c::Identity();
}

}  // namespace

TEST(PlaneRotation, quarter_turn_examples) {
    const auto r = plane_rotation(3, 0, 1, std::numbers::pi / 2);
    EXPECT_NEAR((r.matrix().col(0) - Vector::Unit(3, 1)).norm(), 0.0, 1e-15);
    const auto q = quarter_turn(4, 0, 1);
    EXPECT_EQ(q.matrix()(1, 0), 1.0);
    EXPECT_EQ(q.matrix()(0, 1), -1.0);
    EXPECT_EQ(q.matrix()(0, 0), 0.0);
    EXPECT_NEAR(oracle::frobenius_diff(oracle::to_dense(plane_rotation(5, 2, 4, 0.37).matrix()),
                                       oracle::rot(5, 2, 4, 0.37)),
                0.0, 1e-15);
    EXPECT_THROW(plane_rotation(3, 1, 1, 0.1), InvalidInput);
    EXPECT_THROW(plane_rotation(3, 0, 3, 0.1), InvalidInput);
}

TEST(HaarOrthogonal, deterministic_and_special) {
    for (int d : {1, 2, 3, 6, 12}) {
        const auto a = haar_orthogonal(d, 99);
        const auto b = haar_orthogonal(d, 99);
        EXPECT_EQ(a.matrix(), b.matrix());
        EXPECT_LT(a.orthogonality_defect(), 1e-12);
        EXPECT_EQ(a.det_sign(), 1);
    }
    EXPECT_NE(haar_orthogonal(4, 1).matrix(), haar_orthogonal(4, 2).matrix());
    EXPECT_THROW(haar_orthogonal(0, 1), InvalidInput);
}

TEST(HaarOrthogonal, first_column_mean_is_near_zero) {
    // Uniform on SO(d) => first column uniform on the sphere.
    Vector sum = Vector::Zero(3);
    const int n = 4000;
    for (int k = 0; k < n; ++k) sum += haar_orthogonal(3, 1000 + k).matrix().col(0);
    EXPECT_LT((sum / n).norm(), 0.05);
}

TEST(HaarStabilizer, fixes_axis) {
    const auto s = haar_stabilizer(4, Effect::along(4), 7);
    EXPECT_FALSE(s.trivial_group);
    EXPECT_LT(stabilizer_residual(s.element, Effect::along(4)), 1e-12);
    EXPECT_EQ(s.element.det_sign(), 1);

    Vector axis(5);
    axis << 0.2, -0.4, 0.1, 0.8, 0.0;
    axis /= axis.norm();
    const auto t = haar_stabilizer(5, Effect(axis), 3);
    EXPECT_LT(stabilizer_residual(t.element, Effect(axis)), 1e-12);
    EXPECT_EQ(t.element.det_sign(), 1);

    for (int d : {1, 2}) {
        const auto triv = haar_stabilizer(d, Effect::along(d), 5);
        EXPECT_TRUE(triv.trivial_group);
        EXPECT_EQ(triv.element.matrix(), Matrix::Identity(d, d));
    }
    EXPECT_THROW(haar_stabilizer(3, Effect::along(4), 1), InvalidInput);
}

TEST(StabilizerResidual, examples) {
    EXPECT_EQ(stabilizer_residual(OrthogonalTransform::identity(4), Effect::along(4)), 0.0);
    EXPECT_NEAR(stabilizer_residual(plane_rotation(3, 0, 1, std::numbers::pi / 2), Effect::along(3)),
                std::sqrt(2.0), 1e-15);
}

TEST(CommutatorDefect, examples_with_triple_loop_oracle) {
    const auto ta = plane_rotation(4, 1, 2, std::numbers::pi / 2);
    const auto tb = plane_rotation(4, 2, 3, std::numbers::pi / 2);
    const auto da = oracle::to_dense(ta.matrix()), db = oracle::to_dense(tb.matrix());
    const double reference = oracle::frobenius_diff(oracle::multiply(da, db), oracle::multiply(db, da));
    EXPECT_NEAR(reference, std::sqrt(6.0), 1e-12);
    EXPECT_NEAR(commutator_defect(ta, tb), std::sqrt(6.0), 1e-12);

    const auto c1 = plane_rotation(4, 1, 2, 0.3), c2 = plane_rotation(4, 1, 2, 1.1);
    EXPECT_LT(commutator_defect(c1, c2), 1e-15);
    EXPECT_THROW(commutator_defect(ta, OrthogonalTransform::identity(3)), InvalidInput);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const auto a = haar_orthogonal(5, rng()), b = haar_orthogonal(5, rng());
        const auto x = oracle::to_dense(a.matrix()), y = oracle::to_dense(b.matrix());
        EXPECT_NEAR(commutator_defect(a, b), oracle::frobenius_diff(oracle::multiply(x, y), oracle::multiply(y, x)),
                    1e-12);
    }
}

TEST(FiniteStabilizer, orders_match_grid_enumeration) {
    const auto o2 = finite_stabilizer_elements(2, false);
    const auto so2 = finite_stabilizer_elements(2, true);
    EXPECT_EQ(o2.size(), 2u);
    EXPECT_EQ(so2.size(), 1u);
    // Independent enumeration: every O(2) element is a rotation or a reflection
    // parameterized by an angle; count those fixing e1 on a grid containing 0.
    int fixed_rot = 0, fixed_refl = 0;
    for (int k = 0; k < 3600; ++k) {
        const double t = 2 * std::numbers::pi * k / 3600;
        const oracle::Dense rotation{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
        const oracle::Dense reflection{{std::cos(t), std::sin(t)}, {std::sin(t), -std::cos(t)}};
        const auto fixes = [](const oracle::Dense& m) {
            const auto v = oracle::act(m, {1.0, 0.0});
            return std::abs(v[0] - 1.0) < 1e-12 && std::abs(v[1]) < 1e-12;
        };
        fixed_rot += fixes(rotation);
        fixed_refl += fixes(reflection);
    }
    EXPECT_EQ(static_cast<std::size_t>(fixed_rot + fixed_refl), o2.size());
    EXPECT_EQ(static_cast<std::size_t>(fixed_rot), so2.size());
    for (const auto& t : o2) EXPECT_LT(stabilizer_residual(t, Effect::along(2)), 1e-15);
    EXPECT_EQ(finite_stabilizer_elements(1, false).size(), 1u);
    EXPECT_THROW(finite_stabilizer_elements(3, true), InvalidInput);
}

TEST(FullStabilizer, is_non_abelian_from_d4) {
    std::mt19937_64 rng(17);
    for (int d = 4; d <= 8; ++d) {
        const auto a = haar_stabilizer(d, Effect::along(d), rng());
        const auto b = haar_stabilizer(d, Effect::along(d), rng());
        EXPECT_GT(commutator_defect(a.element, b.element), 1e-3) << "d=" << d;
    }
    const auto a = haar_stabilizer(3, Effect::along(3), 1), b = haar_stabilizer(3, Effect::along(3), 2);
    EXPECT_LT(commutator_defect(a.element, b.element), 1e-12);
}

TEST(U2Embed, examples) {
    using C = std::complex<double>;
    EXPECT_EQ(u2_embed(Matrix2c::Identity()).matrix(), Matrix::Identity(4, 4));

    const auto ii = u2_embed(C(0, 1) * Matrix2c::Identity());
    Matrix expected = Matrix::Zero(4, 4);
    expected.block(0, 2, 2, 2) = Matrix::Identity(2, 2);
    expected.block(2, 0, 2, 2) = -Matrix::Identity(2, 2);
    EXPECT_EQ(ii.matrix(), expected);
    EXPECT_LT((ii.matrix() * ii.matrix() + Matrix::Identity(4, 4)).norm(), 1e-15);

    Matrix2c bad;
    bad << 1, 1, 0, 1;
    EXPECT_THROW(u2_embed(bad), InvalidInput);
}

TEST(U2Embed, phase_eigenvalues) {
    using C = std::complex<double>;
    const double theta = 0.83;
    Matrix2c u = Matrix2c::Identity();
    u(0, 0) = std::exp(C(0, theta));
    const auto t = u2_embed(u);
    Eigen::EigenSolver<Matrix> es(t.matrix());
    int ones = 0, plus = 0, minus = 0;
    for (int k = 0; k < 4; ++k) {
        const C ev = es.eigenvalues()[k];
        if (std::abs(ev - C(1, 0)) < 1e-12) ++ones;
        if (std::abs(ev - std::exp(C(0, theta))) < 1e-12) ++plus;
        if (std::abs(ev - std::exp(C(0, -theta))) < 1e-12) ++minus;
    }
    EXPECT_EQ(ones, 2);
    EXPECT_EQ(plus, 1);
    EXPECT_EQ(minus, 1);
}

TEST(U2Embed, homomorphism_and_orthogonality) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        const Matrix2c u = random_unitary(rng), v = random_unitary(rng);
        const auto eu = u2_embed(u), ev = u2_embed(v);
        EXPECT_LT(eu.orthogonality_defect(), 1e-12);
        EXPECT_EQ(eu.det_sign(), 1);
        EXPECT_LT((u2_embed(u * v).matrix() - eu.matrix() * ev.matrix()).norm(), 1e-12);
    }
}

TEST(U2Phase, fixes_detector_and_composes) {
    EXPECT_NEAR((u2_phase(0.0).matrix() - Matrix::Identity(4, 4)).norm(), 0.0, 1e-15);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ang(-7, 7);
    for (int k = 0; k < 100; ++k) {
        const double a = ang(rng), b = ang(rng);
        EXPECT_LT(stabilizer_residual(u2_phase(a), Effect::along(4)), 1e-15);
        EXPECT_LT((u2_phase(a).matrix() * u2_phase(b).matrix() - u2_phase(a + b).matrix()).norm(), 1e-12);
        EXPECT_LT(commutator_defect(u2_phase(a), u2_phase(b)), 1e-12);
    }
}
