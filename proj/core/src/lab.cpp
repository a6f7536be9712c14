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

#include "gbit/lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "gbit/errors.hpp"
#include "gbit/groups.hpp"
#include "gbit/interferometer.hpp"
#include "gbit/lie.hpp"
#include "gbit/parallel.hpp"
#include "gbit/random.hpp"

namespace gbit {

const char* to_string(Verdict v) { return v == Verdict::violating ? "violating" : "consistent"; }

namespace {

struct SamplePair {
    OrthogonalTransform arm_a;
    OrthogonalTransform arm_b;
};

// Sample indices are 1-based.
SamplePair draw_pair(const ModelSpec& spec, std::uint64_t seed, std::uint64_t k) {
    return {sample_group(spec, SampleSource::arm_a, seed, k).element,
            sample_group(spec, SampleSource::arm_b, seed, k).element};
}

Check make_check(std::string name, double measured, double threshold, Comparison cmp) {
    bool pass = false;
    switch (cmp) {
        case Comparison::less: pass = measured < threshold; break;
        case Comparison::greater: pass = measured > threshold; break;
        case Comparison::equal: pass = measured == threshold; break;
    }
    return {std::move(name), measured, threshold, cmp, pass};
}

const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::less: return "<";
        case Comparison::greater: return ">";
        case Comparison::equal: return "==";
    }
    return "<";
}

std::vector<Matrix> arm_algebra(const ArmGroup& arm) {
    std::vector<Matrix> out;
    for (const Matrix& g : arm.generators) out.push_back(algebra_element(OrthogonalTransform(g)));
    return out;
}

// Largest |p1(family) - p1(reference)| over an n-point grid.
double fringe_gap(const FringeTable& a, const FringeTable& b) {
    double gap = 0.0;
    for (std::size_t k = 0; k < a.rows.size(); ++k) gap = std::max(gap, std::abs(a.rows[k].p1 - b.rows[k].p1));
    return gap;
}

FringeTable model_fringe(const ModelSpec& spec, std::size_t n, int threads) {
    return fringe_scan(spec, [&](double t) { return circle_element(spec, Arm::a, t); }, n, threads);
}

// Largest commutator defect over `count` independently drawn arm pairs.
double max_pair_defect(const ModelSpec& spec, std::size_t count, std::uint64_t seed, int threads) {
    std::vector<double> defects(count);
    parallel_for(count, threads, [&](std::size_t k) {
        const SamplePair p = draw_pair(spec, seed, k + 1);
        defects[k] = commutator_defect(p.arm_a, p.arm_b);
    });
    return defects.empty() ? 0.0 : *std::max_element(defects.begin(), defects.end());
}

constexpr std::size_t kFringePoints = 64;
constexpr std::size_t kTransportTargets = 100;

CaseReport verify_real_d2(const VerifyOptions& opt) {
    const ModelSpec spec = make_model("real-d2");
    CaseReport r{"real-d2", {}, false};
    r.checks.push_back(make_check("stabilizer_order_in_O2",
                                  static_cast<double>(finite_stabilizer_elements(2, false).size()), 2.0,
                                  Comparison::equal));
    r.checks.push_back(make_check("stabilizer_order_in_SO2",
                                  static_cast<double>(finite_stabilizer_elements(2, true).size()), 1.0,
                                  Comparison::equal));
    double worst = 0.0;
    for (const auto& ta : finite_arm_elements(spec, Arm::a)) {
        for (const auto& tb : finite_arm_elements(spec, Arm::b)) {
            worst = std::max(worst, order_discrepancy(build_mzi(spec, ta, tb)));
        }
    }
    r.checks.push_back(make_check("max_order_discrepancy_all_pairs", worst, kExactTol, Comparison::less));
    const ViolationReport scan = scan_violation(spec, opt.samples, opt.seed, {opt.threads, kViolationTol});
    r.checks.push_back(make_check("scan_max_discrepancy", scan.max_discrepancy, kViolationTol, Comparison::less));
    return r;
}

CaseReport verify_complex_d3(const VerifyOptions& opt) {
    const ModelSpec spec = make_model("complex-d3");
    CaseReport r{"complex-d3", {}, false};
    const auto algebra = arm_algebra(spec.arm_a);
    r.checks.push_back(make_check("phase_group_lie_closure_dim",
                                  lie_closure_dim(std::span<const Matrix>(algebra)), 1.0, Comparison::equal));
    const ViolationReport scan = scan_violation(spec, opt.samples, opt.seed, {opt.threads, kViolationTol});
    r.checks.push_back(make_check("scan_max_discrepancy", scan.max_discrepancy, kViolationTol, Comparison::less));
    const FringeTable fringe = model_fringe(spec, kFringePoints, opt.threads);
    double gap = 0.0;
    for (const FringeRow& row : fringe.rows) {
        gap = std::max(gap, std::abs(row.p1 - quantum_mzi_oracle(row.theta, 0.0).p_detector1));
    }
    r.checks.push_back(make_check("fringe_vs_quantum_oracle", gap, kExactTol, Comparison::less));
    return r;
}

double max_transport_residual(const ModelSpec& spec, std::uint64_t seed) {
    double worst = 0.0;
    for (std::size_t k = 1; k <= kTransportTargets; ++k) {
        auto rng = sample_engine(seed, k, Stream::probe);
        std::normal_distribution<double> normal;
        Vector t(spec.dim);
        for (int i = 0; i < spec.dim; ++i) t[i] = normal(rng);
        t /= t.norm();
        const OrthogonalTransform g = transport_to(spec, t);
        worst = std::max(worst, (g.matrix().col(0) - t).norm());
    }
    return worst;
}

CaseReport verify_u2_d4(const VerifyOptions& opt) {
    const ModelSpec spec = make_model("u2-d4");
    CaseReport r{"u2-d4", {}, false};
    r.checks.push_back(make_check("family_pairwise_commutator_defect",
                                  max_pair_defect(spec, opt.samples, opt.seed, opt.threads), kExactTol,
                                  Comparison::less));
    const ViolationReport scan = scan_violation(spec, opt.samples, opt.seed, {opt.threads, kViolationTol});
    r.checks.push_back(make_check("scan_max_discrepancy", scan.max_discrepancy, kViolationTol, Comparison::less));
    const FringeTable u2 = model_fringe(spec, kFringePoints, opt.threads);
    const FringeTable qubit = model_fringe(make_model("complex-d3"), kFringePoints, opt.threads);
    r.checks.push_back(make_check("fringe_vs_complex_d3", fringe_gap(u2, qubit), kExactTol, Comparison::less));
    const auto algebra = arm_algebra(spec.arm_a);
    r.checks.push_back(make_check("phase_group_lie_closure_dim",
                                  lie_closure_dim(std::span<const Matrix>(algebra)), 1.0, Comparison::equal));
    r.checks.push_back(make_check("transport_residual", max_transport_residual(spec, opt.seed), 1e-9,
                                  Comparison::less));
    return r;
}

CaseReport verify_quaternion_d5(const VerifyOptions& opt) {
    const ModelSpec spec = make_model("quaternion-d5");
    CaseReport r{"quaternion-d5", {}, false};
    r.checks.push_back(make_check("left_right_commutator_defect",
                                  max_pair_defect(spec, opt.samples, opt.seed, opt.threads), kExactTol,
                                  Comparison::less));

    const auto left = arm_algebra(spec.arm_a);
    const auto right = arm_algebra(spec.arm_b);
    std::vector<Matrix> both = left;
    both.insert(both.end(), right.begin(), right.end());
    r.checks.push_back(make_check("lie_closure_dim_left_union_right",
                                  lie_closure_dim(std::span<const Matrix>(both)), 6.0, Comparison::equal));
    r.checks.push_back(make_check("lie_closure_dim_left", lie_closure_dim(std::span<const Matrix>(left)), 3.0,
                                  Comparison::equal));
    r.checks.push_back(make_check("lie_closure_dim_right", lie_closure_dim(std::span<const Matrix>(right)), 3.0,
                                  Comparison::equal));

    // Arm samples classified into the opposite family, plus misclassified +-identity.
    std::vector<int> wrong(opt.samples, 0);
    parallel_for(opt.samples, opt.threads, [&](std::size_t k) {
        const SamplePair p = draw_pair(spec, opt.seed, k + 1);
        const IsoclinicClass ca = isoclinic_classify(phase_block_5(p.arm_a));
        const IsoclinicClass cb = isoclinic_classify(phase_block_5(p.arm_b));
        const bool a_ok = ca.kind == IsoclinicKind::left || ca.kind == IsoclinicKind::plus_minus_identity;
        const bool b_ok = cb.kind == IsoclinicKind::right || cb.kind == IsoclinicKind::plus_minus_identity;
        // A shared element must be real, i.e. +-1.
        const bool a_shared_ok = ca.kind != IsoclinicKind::plus_minus_identity || std::abs(std::abs(ca.q.w) - 1.0) < kOrthoTol;
        wrong[k] = (a_ok ? 0 : 1) + (b_ok ? 0 : 1) + (a_shared_ok ? 0 : 1);
    });
    int misclassified = 0;
    for (int w : wrong) misclassified += w;
    for (double sign : {1.0, -1.0}) {
        const OrthogonalTransform pm(sign * Matrix::Identity(4, 4));
        if (isoclinic_classify(pm).kind != IsoclinicKind::plus_minus_identity) ++misclassified;
    }
    r.checks.push_back(make_check("intersection_misclassified", misclassified, 0.0, Comparison::equal));

    const ViolationReport scan = scan_violation(spec, opt.samples, opt.seed, {opt.threads, kViolationTol});
    r.checks.push_back(make_check("scan_max_discrepancy", scan.max_discrepancy, kViolationTol, Comparison::less));
    return r;
}

// Residual of T_B T_A on the complement of the detector axis.
double phase_block_residual(const Matrix& tb_ta, const Effect& detector) {
    const int d = static_cast<int>(tb_ta.rows());
    if (d == 1) return std::abs(tb_ta(0, 0) - 1.0);
    // Orthonormal basis of the complement: Householder frame of the detector axis.
    const Vector& a = detector.axis();
    const Vector e1 = Vector::Unit(d, 0);
    Matrix frame = Matrix::Identity(d, d);
    if ((a - e1).norm() > 0.0) {
        const Vector v = e1 - a;
        frame -= 2.0 * v * v.transpose() / v.squaredNorm();
    }
    const Matrix comp = frame.rightCols(d - 1);
    const Matrix block = comp.transpose() * tb_ta * comp - Matrix::Identity(d - 1, d - 1);
    return block.norm();
}

// Golden-section minimization of f on [lo, hi]; returns (argmin, min).
template <typename F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

constexpr int kMaxSweeps = 60;
constexpr double kGoldenTol = 1e-13;

}  // namespace

ViolationReport scan_violation(const ModelSpec& spec, std::size_t samples, std::uint64_t seed,
                               const LabOptions& options) {
    if (samples < 1) throw InvalidInput("scan_violation: need at least one sample");
    ViolationReport report;
    report.spec = spec;
    report.samples = samples;
    report.seed = seed;
    report.tolerance = options.tolerance;
    report.discrepancies.assign(samples, 0.0);
    parallel_for(samples, options.threads, [&](std::size_t k) {
        const SamplePair p = draw_pair(spec, seed, k + 1);
        report.discrepancies[k] = order_discrepancy(build_mzi(spec, p.arm_a, p.arm_b));
    });

    std::size_t best = 0;
    for (std::size_t k = 1; k < samples; ++k) {
        if (report.discrepancies[k] > report.discrepancies[best]) best = k;
    }
    report.max_discrepancy = report.discrepancies[best];
    report.verdict = report.max_discrepancy > options.tolerance ? Verdict::violating : Verdict::consistent;
    if (report.verdict == Verdict::violating) {
        const std::uint64_t index = best + 1;
        SamplePair p = draw_pair(spec, seed, index);
        const MziConfig cfg = build_mzi(spec, p.arm_a, p.arm_b);
        const double p_ab = run_order(cfg, Order::a_then_b).p_detector1;
        const double p_ba = run_order(cfg, Order::b_then_a).p_detector1;
        report.witness = Witness{index, std::move(p.arm_a), std::move(p.arm_b), p_ab, p_ba, report.max_discrepancy};
    }
    return report;
}

double replay_witness(const ModelSpec& spec, const Witness& witness) {
    return order_discrepancy(build_mzi(spec, witness.arm_a, witness.arm_b));
}

Theorem1Report verify_theorem1(int d_max, const VerifyOptions& options) {
    if (d_max < 3) throw InvalidInput("verify_theorem1: d_max must be at least 3");
    Theorem1Report out;
    out.d_max = d_max;
    out.samples = options.samples;
    out.seed = options.seed;
    out.pass = true;
    for (int d = 1; d <= d_max; ++d) {
        Theorem1Row row;
        row.dim = d;
        const ModelSpec spec = make_fullstab(d);
        row.report = scan_violation(spec, options.samples, options.seed, {options.threads, kViolationTol});
        row.expected = d <= 3 ? Verdict::consistent : Verdict::violating;

        bool trivial = true;
        for (std::size_t k = 1; k <= options.triviality_probes; ++k) {
            const StabilizerSample s =
                haar_stabilizer(d, spec.detector_axis, derive_seed(options.seed, k, Stream::probe));
            const double off = (s.element.matrix() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
            if (!s.trivial_group || off > 0.0) {
                trivial = false;
                break;
            }
        }
        row.phase_group_trivial = trivial;

        row.pass = row.report.verdict == row.expected && row.phase_group_trivial == (d <= 2);
        if (d >= 4) row.pass = row.pass && row.report.max_discrepancy > kWitnessFloor;
        out.pass = out.pass && row.pass;
        out.rows.push_back(std::move(row));
    }
    return out;
}

CaseReport verify_theorem2(std::string_view case_id, const VerifyOptions& options) {
    CaseReport r;
    if (case_id == "real-d2") {
        r = verify_real_d2(options);
    } else if (case_id == "complex-d3") {
        r = verify_complex_d3(options);
    } else if (case_id == "u2-d4") {
        r = verify_u2_d4(options);
    } else if (case_id == "quaternion-d5") {
        r = verify_quaternion_d5(options);
    } else {
        throw InvalidInput("verify_theorem2: unknown case '" + std::string(case_id) + "'");
    }
    r.overall = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    return r;
}

double isoclinic_cancellation_closed_form(const Quaternion& q) {
    return std::sqrt(std::max(0.0, 8.0 - 8.0 * std::abs(q.w)));
}

CancellationResult cancellation_residual(const OrthogonalTransform& ta, const ModelSpec& spec, std::size_t trials,
                                         std::uint64_t seed) {
    if (trials == 0) throw InvalidInput("cancellation_residual: trials must be positive");
    if (!arm_contains(spec, Arm::a, ta)) {
        throw InvalidInput("cancellation_residual: T_A is not an element of the arm-A group " + spec.arm_a.name);
    }
    const Effect& detector = spec.detector_axis;
    auto objective = [&](const OrthogonalTransform& tb) {
        return phase_block_residual(tb.matrix() * ta.matrix(), detector);
    };

    CancellationResult result;
    result.trials = trials;
    result.seed = seed;
    if (spec.arm_a.family == ArmFamily::left_isoclinic) {
        result.closed_form = isoclinic_cancellation_closed_form(isoclinic_classify(phase_block_5(ta)).q);
    } else if (spec.case_id == CaseId::complex_d3 || spec.case_id == CaseId::u2_d4) {
        result.closed_form = 0.0;
    }

    const int n_params = parameter_count(spec, Arm::b);
    if (n_params == 0) {
        bool first = true;
        for (const auto& tb : finite_arm_elements(spec, Arm::b)) {
            const double f = objective(tb);
            if (first || f < result.residual) {
                result.residual = f;
                result.best_tb = tb;
                first = false;
            }
        }
        return result;
    }

    auto eval = [&](const std::vector<double>& params) { return objective(arm_element(spec, Arm::b, params)); };

    bool have_best = false;
    std::vector<double> best_params;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = sample_engine(seed, t + 1, Stream::multistart);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::vector<double> x(static_cast<std::size_t>(n_params));
        for (double& v : x) v = angle(rng);
        double fx = eval(x);

        double half_width = std::numbers::pi;
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            const double before = fx;
            for (std::size_t c = 0; c < x.size(); ++c) {
                std::vector<double> probe = x;
                auto along = [&](double v) {
                    probe[c] = v;
                    return eval(probe);
                };
                const auto [arg, val] = golden_section(along, x[c] - half_width, x[c] + half_width, kGoldenTol);
                if (val < fx) {
                    x[c] = arg;
                    fx = val;
                }
            }
            if (sweep >= 2 && before - fx <= 1e-15) break;
            half_width = std::max(half_width / 2.0, 1e-3);
        }
        if (!have_best || fx < result.residual) {
            have_best = true;
            result.residual = fx;
            best_params = x;
        }
    }
    result.best_tb = arm_element(spec, Arm::b, best_params);
    return result;
}

Json to_json(const Witness& w) {
    return Json{{"index", w.index},
                {"arm_a", matrix_to_json(w.arm_a.matrix())},
                {"arm_b", matrix_to_json(w.arm_b.matrix())},
                {"p_ab", w.p_ab},
                {"p_ba", w.p_ba},
                {"discrepancy", w.discrepancy}};
}

Json to_json(const ViolationReport& r, bool include_discrepancies) {
    Json j{{"case", r.spec.name()},
           {"dim", r.spec.dim},
           {"verdict", to_string(r.verdict)},
           {"max_discrepancy", r.max_discrepancy},
           {"tolerance", r.tolerance},
           {"samples", r.samples},
           {"seed", r.seed},
           {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
    if (include_discrepancies) j["discrepancies"] = r.discrepancies;
    return j;
}

Json to_json(const Theorem1Report& r) {
    Json rows = Json::array();
    for (const Theorem1Row& row : r.rows) {
        Json jr = to_json(row.report, false);
        jr["expected"] = to_string(row.expected);
        jr["phase_group_trivial"] = row.phase_group_trivial;
        jr["pass"] = row.pass;
        rows.push_back(std::move(jr));
    }
    return Json{{"target", "theorem1"}, {"d_max", r.d_max}, {"samples", r.samples},
                {"seed", r.seed},       {"rows", rows},      {"pass", r.pass}};
}

Json to_json(const CaseReport& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"measured", c.measured},
                              {"threshold", c.threshold},
                              {"comparison", to_string(c.comparison)},
                              {"pass", c.pass}});
    }
    return Json{{"target", "theorem2-" + r.case_id}, {"case", r.case_id}, {"checks", checks}, {"pass", r.overall}};
}

Json to_json(const CancellationResult& r) {
    return Json{{"residual", r.residual},
                {"best_tb", matrix_to_json(r.best_tb.matrix())},
                {"closed_form", r.closed_form ? Json(*r.closed_form) : Json(nullptr)},
                {"trials", r.trials},
                {"seed", r.seed}};
}

}  // namespace gbit
