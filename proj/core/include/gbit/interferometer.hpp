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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gbit/errors.hpp"
#include "gbit/model.hpp"
#include "gbit/state.hpp"

namespace gbit {

/// An arm transform moved the which-path axis.
class StabilizerViolation : public InvalidInput {
  public:
    StabilizerViolation(const std::string& what, double residual, std::size_t index = 0)
        : InvalidInput(what), residual_(residual), index_(index) {}
    double residual() const { return residual_; }
    /// Grid index for fringe scans, 0 otherwise.
    std::size_t index() const { return index_; }

  private:
    double residual_;
    std::size_t index_;
};

/// Two-arm Mach-Zehnder interferometer on a Bloch ball.
struct MziConfig {
    ModelSpec spec;
    OrthogonalTransform beamsplitter;
    OrthogonalTransform recombiner;
    OrthogonalTransform arm_a;
    OrthogonalTransform arm_b;
    BlochState input;
    Effect detector;
};

enum class Order { a_then_b, b_then_a };

/// Default beamsplitter: exact quarter turn e_1 -> e_2 (identity for d = 1,
/// where no delocalized pure state exists). The recombiner is its inverse.
OrthogonalTransform default_beamsplitter(int dim);

/// Input state e_1, detector e_1. Throws StabilizerViolation if an arm moves
/// the detector axis by 1e-10 or more.
MziConfig build_mzi(const ModelSpec& spec, const OrthogonalTransform& arm_a, const OrthogonalTransform& arm_b,
                    const std::optional<OrthogonalTransform>& beamsplitter = std::nullopt);

/// Final state recombiner * T_second * T_first * beamsplitter * input.
BlochState final_state(const MziConfig& config, Order order);

ClickStatistics run_order(const MziConfig& config, Order order);

/// |p1(A then B) - p1(B then A)|.
double order_discrepancy(const MziConfig& config);

struct FringeRow {
    double theta = 0.0;
    double p1 = 1.0;
    double p2 = 0.0;
};

struct FringeTable {
    std::string parameter = "theta";
    std::vector<FringeRow> rows;
};

using PhaseFamily = std::function<OrthogonalTransform(double)>;

/// p1/p2 at theta_k = 2 pi k / n for k < n, with arm_a = family(theta_k) and
/// arm_b = identity. A family member that moves the detector axis aborts the
/// scan with a StabilizerViolation carrying the grid index.
FringeTable fringe_scan(const ModelSpec& spec, const PhaseFamily& family, std::size_t n_points, int threads = 1);

/// Header `theta,p1,p2`, 17 significant digits, LF endings. Each manifest line
/// is emitted first as a `# ` comment.
std::string fringe_to_csv(const FringeTable& table, const std::vector<std::string>& comment_lines = {});

}  // namespace gbit
