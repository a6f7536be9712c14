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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbit/json_io.hpp"
#include "gbit/model.hpp"
#include "gbit/quaternion.hpp"

namespace gbit {

/// Order discrepancies above this are genuine order dependence.
inline constexpr double kViolationTol = 1e-9;
/// Commutation and fringe-equality checks for the Abelian/commuting cases.
inline constexpr double kExactTol = 1e-12;
/// A d >= 4 full-stabilizer scan must find a witness at least this strong.
inline constexpr double kWitnessFloor = 0.05;

enum class Verdict { consistent, violating };
const char* to_string(Verdict v);

struct Witness {
    std::uint64_t index = 0;
    OrthogonalTransform arm_a = OrthogonalTransform::identity(1);
    OrthogonalTransform arm_b = OrthogonalTransform::identity(1);
    double p_ab = 0.0;
    double p_ba = 0.0;
    double discrepancy = 0.0;
};

struct ViolationReport {
    ModelSpec spec;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double max_discrepancy = 0.0;
    double tolerance = kViolationTol;
    Verdict verdict = Verdict::consistent;
    /// Present iff verdict is violating.
    std::optional<Witness> witness;
    /// Per-sample discrepancies in index order (sample k is at position k - 1).
    std::vector<double> discrepancies;
};

struct LabOptions {
    int threads = 1;
    double tolerance = kViolationTol;
};

/// For k = 1..samples draws arm_a, arm_b from the model's arm groups with the
/// (seed, k) derivation and records the order discrepancy of the default MZI.
/// Max and argmax use a lowest-index tie-break, so the report is independent
/// of `threads`.
ViolationReport scan_violation(const ModelSpec& spec, std::size_t samples, std::uint64_t seed,
                               const LabOptions& options = {});

/// Order discrepancy of the witness pair, recomputed from scratch.
double replay_witness(const ModelSpec& spec, const Witness& witness);

struct Theorem1Row {
    int dim = 1;
    ViolationReport report;
    bool phase_group_trivial = false;
    Verdict expected = Verdict::consistent;
    bool pass = false;
};

struct Theorem1Report {
    int d_max = 3;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<Theorem1Row> rows;
    bool pass = false;
};

struct VerifyOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    /// Haar stabilizer draws used to certify that the phase group is trivial.
    std::size_t triviality_probes = 100;
    int threads = 1;
};

/// Full-stabilizer scans for d = 1..d_max: consistent for d <= 3, violating
/// (with a witness above kWitnessFloor) for d >= 4, phase group trivial exactly
/// for d <= 2.
Theorem1Report verify_theorem1(int d_max, const VerifyOptions& options = {});

enum class Comparison { less, greater, equal };

struct Check {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    Comparison comparison = Comparison::less;
    bool pass = false;
};

struct CaseReport {
    std::string case_id;
    std::vector<Check> checks;
    bool overall = false;
};

/// Theorem2 cases: real-d2, complex-d3, u2-d4, quaternion-d5. Throws InvalidInput
/// for anything else.
CaseReport verify_theorem2(std::string_view case_id, const VerifyOptions& options = {});

struct CancellationResult {
    double residual = 0.0;
    OrthogonalTransform best_tb = OrthogonalTransform::identity(1);
    std::optional<double> closed_form;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// min over T_B in the arm-B group of |T_B T_A - I|_F on the phase block
/// (the complement of the detector axis). Finite groups are enumerated;
/// continuous ones use `trials` seeded multistarts refined by coordinate-wise
/// golden-section descent.
CancellationResult cancellation_residual(const OrthogonalTransform& ta, const ModelSpec& spec, std::size_t trials,
                                         std::uint64_t seed);

/// sqrt(8 - 8 |Re q|): optimum of the residual for T_A = embed_5(left_isoclinic(q)).
double isoclinic_cancellation_closed_form(const Quaternion& q);

Json to_json(const Witness& w);
Json to_json(const ViolationReport& r, bool include_discrepancies = true);
Json to_json(const Theorem1Report& r);
Json to_json(const CaseReport& r);
Json to_json(const CancellationResult& r);

}  // namespace gbit
