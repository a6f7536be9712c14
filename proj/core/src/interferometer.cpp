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

#include "gbit/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "gbit/groups.hpp"
#include "gbit/json_io.hpp"
#include "gbit/parallel.hpp"

namespace gbit {

namespace {

void check_arm(const OrthogonalTransform& t, const Effect& detector, const char* which, std::size_t index = 0) {
    if (t.dim() != detector.dim()) {
        throw InvalidInput(std::string("build_mzi: ") + which + " dimension differs from the model");
    }
    const double residual = stabilizer_residual(t, detector);
    if (!(residual < kOrthoTol)) {
        throw StabilizerViolation(std::string("build_mzi: ") + which +
                                      " moves the which-path axis (residual " + format_double(residual) + ")",
                                  residual, index);
    }
}

}  // namespace

OrthogonalTransform default_beamsplitter(int dim) {
    if (dim == 1) return OrthogonalTransform::identity(1);
    return quarter_turn(dim, 0, 1);
}

MziConfig build_mzi(const ModelSpec& spec, const OrthogonalTransform& arm_a, const OrthogonalTransform& arm_b,
                    const std::optional<OrthogonalTransform>& beamsplitter) {
    const Effect detector = Effect::along(spec.dim);
    check_arm(arm_a, detector, "arm_a");
    check_arm(arm_b, detector, "arm_b");
    OrthogonalTransform bs = beamsplitter.value_or(default_beamsplitter(spec.dim));
    if (bs.dim() != spec.dim) throw InvalidInput("build_mzi: beamsplitter dimension differs from the model");
    OrthogonalTransform rec = bs.inverse();
    return MziConfig{spec, std::move(bs), std::move(rec), arm_a, arm_b, BlochState::pole(spec.dim), detector};
}

BlochState final_state(const MziConfig& c, Order order) {
    const OrthogonalTransform& first = order == Order::a_then_b ? c.arm_a : c.arm_b;
    const OrthogonalTransform& second = order == Order::a_then_b ? c.arm_b : c.arm_a;
    BlochState w = apply_transform(c.beamsplitter, c.input);
    w = apply_transform(first, w);
    w = apply_transform(second, w);
    return apply_transform(c.recombiner, w);
}

ClickStatistics run_order(const MziConfig& config, Order order) {
    return outcome_probability(config.detector, final_state(config, order));
}

double order_discrepancy(const MziConfig& config) {
    return std::abs(run_order(config, Order::a_then_b).p_detector1 -
                    run_order(config, Order::b_then_a).p_detector1);
}

FringeTable fringe_scan(const ModelSpec& spec, const PhaseFamily& family, std::size_t n_points, int threads) {
    if (n_points < 2) throw InvalidInput("fringe_scan: need at least 2 points");
    FringeTable table;
    table.rows.resize(n_points);
    const Effect detector = Effect::along(spec.dim);
    const OrthogonalTransform identity = OrthogonalTransform::identity(spec.dim);
    parallel_for(n_points, threads, [&](std::size_t k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_points);
        const OrthogonalTransform arm = family(theta);
        check_arm(arm, detector, "phase family member", k);
        const ClickStatistics s = run_order(build_mzi(spec, arm, identity), Order::a_then_b);
        table.rows[k] = {theta, s.p_detector1, s.p_detector2};
    });
    return table;
}

std::string fringe_to_csv(const FringeTable& table, const std::vector<std::string>& comment_lines) {
    std::string out;
    for (const std::string& line : comment_lines) out += "# " + line + "\n";
    out += table.parameter + ",p1,p2\n";
    for (const FringeRow& r : table.rows) {
        out += format_double(r.theta) + "," + format_double(r.p1) + "," + format_double(r.p2) + "\n";
    }
    return out;
}

}  // namespace gbit
