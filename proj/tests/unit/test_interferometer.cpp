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
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gbit/errors.hpp"
#include "gbit/groups.hpp"
#include "gbit/interferometer.hpp"
#include "gbit/model.hpp"
#include "gbit/quaternion.hpp"
#include "oracles.hpp"

using namespace gbit;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(Mzi, identity_arms_always_click_first_detector) {
    for (const char* name : {"classical-d1", "real-d2", "complex-d3", "u2-d4", "quaternion-d5"}) {
        const ModelSpec spec = make_model(name);
        const auto id = OrthogonalTransform::identity(spec.dim);
        const auto cfg = build_mzi(spec, id, id);
        for (Order o : {Order::a_then_b, Order::b_then_a}) {
            const auto p = run_order(cfg, o);
            EXPECT_NEAR(p.p_detector1, 1.0, 1e-15) << name;
            EXPECT_NEAR(p.p_detector2, 0.0, 1e-15) << name;
        }
        EXPECT_EQ(order_discrepancy(cfg), 0.0);
    }
}

TEST(Mzi, canonical_witness_in_d4) {
    const ModelSpec spec = make_fullstab(4);
    const auto a = plane_rotation(4, 1, 2, kPi / 2);
    const auto b = plane_rotation(4, 2, 3, kPi / 2) * plane_rotation(4, 1, 2, kPi / 2);
    const auto cfg = build_mzi(spec, a, b);

    const auto da = oracle::to_dense(a.matrix()), db = oracle::to_dense(b.matrix());
    EXPECT_NEAR(oracle::mzi_p1(da, db), 0.0, 1e-12);
    EXPECT_NEAR(oracle::mzi_p1(db, da), 0.5, 1e-12);

    const auto ab = run_order(cfg, Order::a_then_b);
    const auto ba = run_order(cfg, Order::b_then_a);
    EXPECT_NEAR(ab.p_detector1, 0.0, 1e-12);
    EXPECT_NEAR(ab.p_detector2, 1.0, 1e-12);
    EXPECT_NEAR(ba.p_detector1, 0.5, 1e-12);
    EXPECT_NEAR(ba.p_detector2, 0.5, 1e-12);
    EXPECT_NEAR(order_discrepancy(cfg), 0.5, 1e-12);
}

TEST(Mzi, rejects_arm_that_moves_detector) {
    const ModelSpec spec = make_model("complex-d3");
    try {
        build_mzi(spec, plane_rotation(3, 0, 1, 0.3), OrthogonalTransform::identity(3));
        FAIL() << "expected StabilizerViolation";
    } catch (const StabilizerViolation& e) {
        EXPECT_GT(e.residual(), 0.1);
    }
    EXPECT_THROW(build_mzi(spec, OrthogonalTransform::identity(4), OrthogonalTransform::identity(3)), InvalidInput);
}

TEST(Mzi, matches_dense_oracle_on_random_stabilizer_pairs) {
    std::mt19937_64 rng(51);
    for (int d = 3; d <= 7; ++d) {
        const ModelSpec spec = make_fullstab(d);
        for (int t = 0; t < 30; ++t) {
            const auto a = haar_stabilizer(d, spec.detector_axis, rng()).element;
            const auto b = haar_stabilizer(d, spec.detector_axis, rng()).element;
            const auto cfg = build_mzi(spec, a, b);
            const auto da = oracle::to_dense(a.matrix()), db = oracle::to_dense(b.matrix());
            EXPECT_NEAR(run_order(cfg, Order::a_then_b).p_detector1, oracle::mzi_p1(da, db), 1e-12);
            EXPECT_NEAR(run_order(cfg, Order::b_then_a).p_detector1, oracle::mzi_p1(db, da), 1e-12);
        }
    }
}

TEST(Mzi, complex_d3_equals_qubit_interferometer) {
    const ModelSpec spec = make_model("complex-d3");
    auto model_p1 = [&](double phi_a, double phi_b) {
        const auto cfg = build_mzi(spec, plane_rotation(3, 1, 2, phi_a), plane_rotation(3, 1, 2, -phi_b));
        return run_order(cfg, Order::a_then_b).p_detector1;
    };
    for (int k = 0; k < 64; ++k) {
        const double phi = 2 * kPi * k / 64;
        EXPECT_NEAR(model_p1(phi, 0.0), oracle::qubit_mzi_p1(phi, 0.0), 1e-12) << k;
    }
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    for (int k = 0; k < 100; ++k) {
        const double a = ang(rng), b = ang(rng);
        EXPECT_NEAR(model_p1(a, b), oracle::qubit_mzi_p1(a, b), 1e-12);
    }
}

TEST(Mzi, branch_probabilities_conserved) {
    std::mt19937_64 rng(53);
    for (int d = 2; d <= 8; ++d) {
        const ModelSpec spec = make_fullstab(d);
        for (int t = 0; t < 20; ++t) {
            const auto a = haar_stabilizer(d, spec.detector_axis, rng()).element;
            const auto b = haar_stabilizer(d, spec.detector_axis, rng()).element;
            const auto cfg = build_mzi(spec, a, b);
            for (Order o : {Order::a_then_b, Order::b_then_a}) {
                const BlochState w = final_state(cfg, o);
                EXPECT_NEAR(w.norm(), 1.0, 1e-12);
                const auto p = run_order(cfg, o);
                EXPECT_NEAR(p.p_detector1 + p.p_detector2, 1.0, 1e-12);
            }
        }
    }
}

TEST(Mzi, commuting_arms_are_order_independent) {
    std::mt19937_64 rng(54);
    const ModelSpec quat = make_model("quaternion-d5");
    for (int t = 0; t < 100; ++t) {
        const auto a = embed_5(left_isoclinic(haar_quaternion(rng)));
        const auto b = embed_5(right_isoclinic(haar_quaternion(rng)));
        EXPECT_LT(order_discrepancy(build_mzi(quat, a, b)), 1e-12);
    }
    const ModelSpec u2 = make_model("u2-d4");
    std::uniform_real_distribution<double> ang(-5, 5);
    for (int t = 0; t < 100; ++t)
        EXPECT_LT(order_discrepancy(build_mzi(u2, u2_phase(ang(rng)), u2_phase(ang(rng)))), 1e-12);
}

TEST(Mzi, d1_uses_identity_beamsplitter) {
    EXPECT_EQ(default_beamsplitter(1).matrix()(0, 0), 1.0);
    const auto q = default_beamsplitter(3);
    EXPECT_EQ(q.matrix()(1, 0), 1.0);
}

TEST(Fringe, complex_d3_examples) {
    const ModelSpec spec = make_model("complex-d3");
    const auto table = fringe_scan(spec, [&](double t) { return circle_element(spec, Arm::a, t); }, 4);
    ASSERT_EQ(table.rows.size(), 4u);
    const double expected[] = {1.0, 0.5, 0.0, 0.5};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(table.rows[k].theta, kPi * k / 2, 1e-15);
        EXPECT_NEAR(table.rows[k].p1, expected[k], 1e-12);
        EXPECT_NEAR(table.rows[k].p1 + table.rows[k].p2, 1.0, 1e-12);
    }
}

TEST(Fringe, u2_matches_complex_and_quaternion_cosine) {
    const ModelSpec complex = make_model("complex-d3"), u2 = make_model("u2-d4"), quat = make_model("quaternion-d5");
    const std::size_t n = 64;
    const auto fc = fringe_scan(complex, [&](double t) { return circle_element(complex, Arm::a, t); }, n);
    const auto fu = fringe_scan(u2, [&](double t) { return circle_element(u2, Arm::a, t); }, n);
    const auto fq =
        fringe_scan(quat, [](double t) { return embed_5(left_isoclinic(Quaternion::exp_axis(t, 1, 0, 0))); }, n);
    for (std::size_t k = 0; k < n; ++k) {
        EXPECT_NEAR(fu.rows[k].p1, fc.rows[k].p1, 1e-12);
        EXPECT_NEAR(fc.rows[k].p1, (1 + std::cos(fc.rows[k].theta)) / 2, 1e-12);
        EXPECT_NEAR(fq.rows[k].p1, (1 + std::cos(fq.rows[k].theta)) / 2, 1e-12);
    }
}

TEST(Fringe, deterministic_across_threads_and_validated) {
    const ModelSpec spec = make_model("complex-d3");
    const PhaseFamily fam = [&](double t) { return circle_element(spec, Arm::a, t); };
    EXPECT_EQ(fringe_to_csv(fringe_scan(spec, fam, 33, 1)), fringe_to_csv(fringe_scan(spec, fam, 33, 4)));
    EXPECT_THROW(fringe_scan(spec, fam, 1), InvalidInput);
    const PhaseFamily bad = [&](double t) { return plane_rotation(3, 0, 1, t); };
    EXPECT_THROW(fringe_scan(spec, bad, 8), StabilizerViolation);
}

TEST(Fringe, csv_layout) {
    FringeTable t;
    t.rows = {{0.0, 1.0, 0.0}, {0.5, 0.25, 0.75}};
    const std::string csv = fringe_to_csv(t, {"manifest {}"});
    EXPECT_EQ(csv, "# manifest {}\ntheta,p1,p2\n0.0,1.0,0.0\n0.5,0.25,0.75\n");
}
