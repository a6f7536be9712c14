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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gbit/errors.hpp"
#include "gbit/groups.hpp"
#include "gbit/interferometer.hpp"
#include "gbit/json_io.hpp"
#include "gbit/lab.hpp"
#include "gbit/model.hpp"
#include "gbit/parallel.hpp"
#include "gbit/quaternion.hpp"

#ifndef GBIT_VERSION
#define GBIT_VERSION "0.0.0"
#endif

namespace gbit::cli {

namespace {

/// Usage error raised after parsing (unknown model, bad parameter, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Command name, parameters, seed, version and output path of one run.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string out_path;

    Json to_json() const {
        return Json{{"command", command},
                    {"parameters", parameters},
                    {"seed", seed},
                    {"version", GBIT_VERSION},
                    {"outputs", Json::array({out_path.empty() ? "-" : out_path})}};
    }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

void emit_json(Json doc, const RunManifest& manifest, std::ostream& out) {
    doc["manifest"] = manifest.to_json();
    emit(dump_canonical(doc), manifest.out_path, out);
}

ModelSpec model_or_usage(const std::string& name) {
    try {
        return make_model(name);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
}

std::string fmt(double v) { return format_double(v); }

PhaseFamily fringe_family(const ModelSpec& spec) {
    switch (spec.case_id) {
        case CaseId::complex_d3:
        case CaseId::u2_d4:
            return [spec](double t) { return circle_element(spec, Arm::a, t); };
        case CaseId::quaternion_d5:
            return [](double t) { return embed_5(left_isoclinic(Quaternion::exp_axis(t, 1, 0, 0))); };
        case CaseId::fullstab:
            if (spec.dim >= 3) {
                return [d = spec.dim](double t) { return plane_rotation(d, 1, 2, t); };
            }
            break;
        default: break;
    }
    throw UsageError("model " + spec.name() + " has no continuous phase family to scan");
}

Quaternion parse_quaternion(const std::string& text) {
    static const std::map<std::string, Quaternion> named{
        {"1", Quaternion::one()}, {"-1", -Quaternion::one()}, {"i", Quaternion::i()}, {"-i", -Quaternion::i()},
        {"j", Quaternion::j()},   {"-j", -Quaternion::j()},   {"k", Quaternion::k()}, {"-k", -Quaternion::k()}};
    if (auto it = named.find(text); it != named.end()) return it->second;
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw UsageError("");
        } catch (const std::exception&) {
            throw UsageError("--q expects w,x,y,z or one of 1,-1,i,j,k; got '" + text + "'");
        }
    }
    if (parts.size() != 4) throw UsageError("--q expects four comma-separated components");
    const Quaternion q{parts[0], parts[1], parts[2], parts[3]};
    if (!q.is_unit()) throw UsageError("--q must be a unit quaternion (|q| = 1 within 1e-12)");
    return q;
}

struct Options {
    std::string model;
    std::string target;
    std::string out;
    std::size_t points = 64;
    std::optional<std::size_t> samples;
    std::size_t trials = 32;
    int dmax = 8;
    std::uint64_t seed = 42;
    std::optional<double> angle;
    std::optional<std::string> q;
};

std::size_t samples_or_usage(const std::optional<std::size_t>& given, std::size_t fallback) {
    if (!given) return fallback;
    if (*given < 1) throw UsageError("--samples must be at least 1");
    return *given;
}

int cmd_fringe(const Options& o, std::ostream& out, std::ostream& err) {
    const ModelSpec spec = model_or_usage(o.model);
    if (o.points < 2) throw UsageError("--points must be at least 2");
    const FringeTable table = fringe_scan(spec, fringe_family(spec), o.points, worker_count_from_env());
    RunManifest m{"fringe", {{"model", spec.name()}, {"points", std::to_string(o.points)}}, o.seed, o.out};
    emit(fringe_to_csv(table, {"manifest " + m.to_json().dump()}), o.out, out);
    err << "fringe: " << table.rows.size() << " rows\n";
    return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const ModelSpec spec = model_or_usage(o.model);
    const std::size_t samples = samples_or_usage(o.samples, 1000);
    const ViolationReport r = scan_violation(spec, samples, o.seed, {worker_count_from_env(), kViolationTol});
    RunManifest m{"scan", {{"model", spec.name()}, {"samples", std::to_string(samples)}}, o.seed, o.out};
    emit_json(to_json(r), m, out);
    return r.verdict == Verdict::violating ? kViolation : kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyOptions v;
    v.seed = o.seed;
    v.threads = worker_count_from_env();
    RunManifest m{"verify", {{"target", o.target}}, o.seed, o.out};
    if (o.target == "theorem1") {
        if (o.dmax < 3) throw UsageError("--dmax must be at least 3");
        v.samples = samples_or_usage(o.samples, 1000);
        m.parameters["dmax"] = std::to_string(o.dmax);
        m.parameters["samples"] = std::to_string(v.samples);
        const Theorem1Report r = verify_theorem1(o.dmax, v);
        emit_json(to_json(r), m, out);
        return r.pass ? kOk : kCheckFailed;
    }
    constexpr std::string_view prefix = "theorem2-";
    if (o.target.starts_with(prefix)) {
        const std::string case_id = o.target.substr(prefix.size());
        if (case_id != "real-d2" && case_id != "complex-d3" && case_id != "u2-d4" && case_id != "quaternion-d5") {
            throw UsageError("unknown verify target '" + o.target + "'");
        }
        v.samples = samples_or_usage(o.samples, 10000);
        m.parameters["samples"] = std::to_string(v.samples);
        const CaseReport r = verify_theorem2(case_id, v);
        emit_json(to_json(r), m, out);
        return r.overall ? kOk : kCheckFailed;
    }
    throw UsageError("unknown verify target '" + o.target + "'");
}

int cmd_cancel(const Options& o, std::ostream& out) {
    const ModelSpec spec = model_or_usage(o.model);
    RunManifest m{"cancel", {{"model", spec.name()}, {"trials", std::to_string(o.trials)}}, o.seed, o.out};
    if (o.trials == 0) throw UsageError("--trials must be positive");

    std::optional<OrthogonalTransform> ta;
    if (spec.arm_a.family == ArmFamily::left_isoclinic) {
        if (!o.q) throw UsageError("model " + spec.name() + " takes its arm-A element as --q");
        ta = embed_5(left_isoclinic(parse_quaternion(*o.q)));
        m.parameters["q"] = *o.q;
    } else if (spec.arm_a.family == ArmFamily::circle) {
        if (!o.angle) throw UsageError("model " + spec.name() + " takes its arm-A element as --angle");
        ta = circle_element(spec, Arm::a, *o.angle);
        m.parameters["angle"] = fmt(*o.angle);
    } else if (spec.arm_a.family == ArmFamily::stabilizer && spec.dim >= 3) {
        if (!o.angle) throw UsageError("model " + spec.name() + " takes its arm-A element as --angle");
        ta = plane_rotation(spec.dim, 1, 2, *o.angle);
        m.parameters["angle"] = fmt(*o.angle);
    } else {
        throw UsageError("model " + spec.name() + " has no parameterized arm-A element to cancel");
    }
    if (!arm_contains(spec, Arm::a, *ta)) throw UsageError("parameter lies outside the arm-A group");

    const CancellationResult r = cancellation_residual(*ta, spec, o.trials, o.seed);
    Json doc = to_json(r);
    doc["case"] = spec.name();
    doc["ta"] = matrix_to_json(ta->matrix());
    emit_json(std::move(doc), m, out);
    return kOk;
}

int cmd_model_dump(const Options& o, std::ostream& out) {
    const ModelSpec spec = model_or_usage(o.model);
    RunManifest m{"model-dump", {{"model", spec.name()}}, o.seed, o.out};
    emit_json(to_json(spec), m, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bloch-ball interferometer laboratory", "gbit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GBIT_VERSION);

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Base seed for all sampling")->capture_default_str();
        sub->add_option("--out", o.out, "Output path (stdout when omitted)");
    };

    auto* fringe = app.add_subcommand("fringe", "Fringe scan of one arm's phase family (CSV)");
    fringe->add_option("--model", o.model, "Model case")->required();
    fringe->add_option("--points", o.points, "Grid points on [0, 2pi)")->capture_default_str();
    add_common(fringe);

    auto* scan = app.add_subcommand("scan", "Order-discrepancy scan over sampled arm pairs (JSON)");
    scan->add_option("--model", o.model, "Model case")->required();
    scan->add_option("--samples", o.samples, "Number of sampled pairs (default 1000)");
    add_common(scan);

    auto* verify = app.add_subcommand("verify", "Run a theorem check suite (JSON)");
    verify->add_option("target", o.target, "theorem1 or theorem2-<case>")->required();
    verify->add_option("--dmax", o.dmax, "Largest dimension for theorem1")->capture_default_str();
    verify->add_option("--samples", o.samples, "Samples per scan (default 1000 / 10000)");
    add_common(verify);

    auto* cancel = app.add_subcommand("cancel", "Cancellation residual of an arm-A element (JSON)");
    cancel->add_option("--model", o.model, "Model case")->required();
    auto* angle = cancel->add_option("--angle", o.angle, "Arm-A phase angle (circle models)");
    auto* q = cancel->add_option("--q", o.q, "Arm-A unit quaternion: w,x,y,z or 1,-1,i,j,k");
    angle->excludes(q);
    cancel->add_option("--trials", o.trials, "Multistarts")->capture_default_str();
    add_common(cancel);

    auto* dump = app.add_subcommand("model-dump", "Print a model's generators (JSON)");
    dump->add_option("--model", o.model, "Model case")->required();
    add_common(dump);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << GBIT_VERSION << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "gbit: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (fringe->parsed()) return cmd_fringe(o, out, err);
        if (scan->parsed()) return cmd_scan(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (cancel->parsed()) return cmd_cancel(o, out);
        if (dump->parsed()) return cmd_model_dump(o, out);
    } catch (const UsageError& e) {
        err << "gbit: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "gbit: " << e.what() << "\n";
        return kIo;
    } catch (const InvalidInput& e) {
        err << "gbit: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace gbit::cli
