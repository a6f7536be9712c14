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

#include "gbit/model.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

#include "gbit/errors.hpp"
#include "gbit/groups.hpp"
#include "gbit/quaternion.hpp"
#include "gbit/random.hpp"

namespace gbit {

namespace {

// Angle of the generators listed in ModelSpec. An irrational multiple of pi,
// so each generator topologically generates its one-parameter subgroup.
constexpr double kGeneratorAngle = 1.0;

std::vector<Matrix> all_plane_generators(int dim, int first) {
    std::vector<Matrix> gens;
    for (int i = first; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) gens.push_back(plane_rotation(dim, i, j, kGeneratorAngle).matrix());
    }
    return gens;
}

std::vector<int> identity_permutation(int dim) {
    std::vector<int> p(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) p[static_cast<std::size_t>(k)] = k;
    return p;
}

Matrix2c complex_exp_hermitian(const Matrix2c& h, double t) {
    // exp(i t H) for H with H^2 = I (Pauli matrices).
    using C = std::complex<double>;
    return std::cos(t) * Matrix2c::Identity() + C(0, std::sin(t)) * h;
}

Matrix2c haar_unitary_2(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Matrix2c z;
    for (int c = 0; c < 2; ++c) {
        for (int r = 0; r < 2; ++r) z(r, c) = {normal(rng), normal(rng)};
    }
    Eigen::HouseholderQR<Matrix2c> qr(z);
    Matrix2c q = qr.householderQ() * Matrix2c::Identity();
    const Matrix2c& rr = qr.matrixQR();
    for (int c = 0; c < 2; ++c) {
        const double mag = std::abs(rr(c, c));
        if (mag > 0.0) q.col(c) *= rr(c, c) / mag;
    }
    return q;
}

ModelSpec base(CaseId id, int dim) {
    ModelSpec s;
    s.case_id = id;
    s.dim = dim;
    s.detector_axis = Effect::along(dim);
    s.coordinate_permutation = identity_permutation(dim);
    return s;
}

ModelSpec make_classical() {
    ModelSpec s = base(CaseId::classical_d1, 1);
    s.global_group = {"Z2", {-Matrix::Identity(1, 1)}};
    s.arm_a = {"trivial", ArmFamily::trivial, {}, std::nullopt};
    s.arm_b = s.arm_a;
    return s;
}

ModelSpec make_real() {
    ModelSpec s = base(CaseId::real_d2, 2);
    Matrix flip(2, 2);
    flip << 1, 0, 0, -1;
    s.global_group = {"O(2)", {plane_rotation(2, 0, 1, kGeneratorAngle).matrix(), flip}};
    s.arm_a = {"Z2", ArmFamily::reflection_z2, {flip}, std::nullopt};
    s.arm_b = s.arm_a;
    return s;
}

ModelSpec make_complex() {
    ModelSpec s = base(CaseId::complex_d3, 3);
    s.global_group = {"SO(3)", all_plane_generators(3, 0)};
    s.arm_a = {"SO(2)", ArmFamily::circle, {plane_rotation(3, 1, 2, kGeneratorAngle).matrix()},
               CirclePlane{1, 2, 1}};
    s.arm_b = s.arm_a;
    return s;
}

ModelSpec make_u2() {
    ModelSpec s = base(CaseId::u2_d4, 4);
    using C = std::complex<double>;
    Matrix2c d1 = Matrix2c::Identity();
    d1(0, 0) = std::polar(1.0, kGeneratorAngle);
    Matrix2c d2 = Matrix2c::Identity();
    d2(1, 1) = std::polar(1.0, kGeneratorAngle);
    Matrix2c x;
    x << 0, 1, 1, 0;
    Matrix2c y;
    y << 0, C(0, -1), C(0, 1), 0;
    s.global_group = {"U(2)",
                      {u2_embed(d1).matrix(), u2_embed(d2).matrix(),
                       u2_embed(complex_exp_hermitian(x, kGeneratorAngle)).matrix(),
                       u2_embed(complex_exp_hermitian(y, kGeneratorAngle)).matrix()}};
    // u2_phase(theta) rotates e_2 towards -e_4: plane (1, 3) with negative sign.
    s.arm_a = {"U(1)", ArmFamily::circle, {u2_phase(kGeneratorAngle).matrix()}, CirclePlane{1, 3, -1}};
    s.arm_b = s.arm_a;
    return s;
}

ModelSpec make_quaternion() {
    ModelSpec s = base(CaseId::quaternion_d5, 5);
    s.global_group = {"SO(5)", all_plane_generators(5, 0)};
    const Quaternion qi = Quaternion::exp_axis(kGeneratorAngle, 1, 0, 0);
    const Quaternion qj = Quaternion::exp_axis(kGeneratorAngle, 0, 1, 0);
    s.arm_a = {"SU(2)_L",
               ArmFamily::left_isoclinic,
               {embed_5(left_isoclinic(qi)).matrix(), embed_5(left_isoclinic(qj)).matrix()},
               std::nullopt};
    s.arm_b = {"SU(2)_R",
               ArmFamily::right_isoclinic,
               {embed_5(right_isoclinic(qi)).matrix(), embed_5(right_isoclinic(qj)).matrix()},
               std::nullopt};
    return s;
}

std::string group_name_so(int n) { return "SO(" + std::to_string(n) + ")"; }

Quaternion quaternion_from_params(std::span<const double> p) {
    if (p.size() != 3) throw InvalidInput("isoclinic arm element: expected 3 parameters");
    return Quaternion::from_angles(p[0], p[1], p[2]);
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

std::string ModelSpec::name() const {
    switch (case_id) {
        case CaseId::classical_d1: return "classical-d1";
        case CaseId::real_d2: return "real-d2";
        case CaseId::complex_d3: return "complex-d3";
        case CaseId::u2_d4: return "u2-d4";
        case CaseId::fullstab: return "fullstab-d" + std::to_string(dim);
        case CaseId::quaternion_d5: return "quaternion-d5";
    }
    return "unknown";
}

ModelSpec make_fullstab(int dim) {
    if (dim < 1) throw InvalidInput("fullstab: dimension must be at least 1");
    ModelSpec s = base(CaseId::fullstab, dim);
    s.global_group = {group_name_so(dim), all_plane_generators(dim, 0)};
    s.arm_a = {group_name_so(std::max(dim - 1, 1)), ArmFamily::stabilizer, all_plane_generators(dim, 1),
               std::nullopt};
    s.arm_b = s.arm_a;
    return s;
}

ModelSpec make_model(std::string_view name) {
    if (name == "classical-d1") return make_classical();
    if (name == "real-d2") return make_real();
    if (name == "complex-d3") return make_complex();
    if (name == "u2-d4") return make_u2();
    if (name == "quaternion-d5") return make_quaternion();
    constexpr std::string_view prefix = "fullstab-d";
    if (name.starts_with(prefix)) {
        const std::string_view digits = name.substr(prefix.size());
        int dim = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && dim >= 1 &&
            dim <= 64) {
            return make_fullstab(dim);
        }
    }
    throw InvalidInput("unknown model '" + std::string(name) + "'");
}

void validate(const ModelSpec& spec) {
    if (spec.dim < 1 || spec.detector_axis.dim() != spec.dim) {
        throw InvalidInput("ModelSpec: detector axis dimension differs from model dimension");
    }
    if (static_cast<int>(spec.coordinate_permutation.size()) != spec.dim) {
        throw InvalidInput("ModelSpec: coordinate permutation has wrong length");
    }
    for (const Matrix& g : spec.global_group.generators) {
        if (g.rows() != spec.dim || g.cols() != spec.dim || orthogonality_defect(g) >= kOrthoTol) {
            throw InvalidInput("ModelSpec: global generator is not an orthogonal " +
                               std::to_string(spec.dim) + "x" + std::to_string(spec.dim) + " matrix");
        }
    }
    for (const ArmGroup* arm : {&spec.arm_a, &spec.arm_b}) {
        for (const Matrix& g : arm->generators) {
            if (g.rows() != spec.dim || g.cols() != spec.dim || orthogonality_defect(g) >= kOrthoTol) {
                throw InvalidInput("ModelSpec: arm generator of " + arm->name + " is not orthogonal");
            }
            const double residual = (g * spec.detector_axis.axis() - spec.detector_axis.axis()).norm();
            if (residual >= kOrthoTol) {
                throw InvalidInput("ModelSpec: arm generator of " + arm->name +
                                   " moves the detector axis (residual " + std::to_string(residual) + ")");
            }
        }
    }
}

int parameter_count(const ModelSpec& spec, Arm which) {
    switch (spec.arm(which).family) {
        case ArmFamily::trivial:
        case ArmFamily::reflection_z2: return 0;
        case ArmFamily::circle: return 1;
        case ArmFamily::stabilizer: return (spec.dim - 1) * (spec.dim - 2) / 2;
        case ArmFamily::left_isoclinic:
        case ArmFamily::right_isoclinic: return 3;
    }
    return 0;
}

OrthogonalTransform circle_element(const ModelSpec& spec, Arm which, double theta) {
    const ArmGroup& arm = spec.arm(which);
    if (arm.family != ArmFamily::circle || !arm.plane) {
        throw InvalidInput("circle_element: arm group " + arm.name + " is not a circle family");
    }
    if (spec.case_id == CaseId::u2_d4) return u2_phase(theta);
    return plane_rotation(spec.dim, arm.plane->i, arm.plane->j, arm.plane->sign * theta);
}

OrthogonalTransform arm_element(const ModelSpec& spec, Arm which, std::span<const double> params) {
    const ArmGroup& arm = spec.arm(which);
    switch (arm.family) {
        case ArmFamily::trivial: return OrthogonalTransform::identity(spec.dim);
        case ArmFamily::reflection_z2: {
            const bool flip = !params.empty() && std::lround(params[0]) % 2 != 0;
            return finite_arm_elements(spec, which)[flip ? 1 : 0];
        }
        case ArmFamily::circle:
            if (params.size() != 1) throw InvalidInput("circle arm element: expected 1 parameter");
            return circle_element(spec, which, params[0]);
        case ArmFamily::stabilizer: {
            if (static_cast<int>(params.size()) != parameter_count(spec, which)) {
                throw InvalidInput("stabilizer arm element: wrong parameter count");
            }
            Matrix m = Matrix::Identity(spec.dim, spec.dim);
            std::size_t k = 0;
            for (int i = 1; i < spec.dim; ++i) {
                for (int j = i + 1; j < spec.dim; ++j) {
                    m = m * plane_rotation(spec.dim, i, j, params[k++]).matrix();
                }
            }
            return OrthogonalTransform(std::move(m));
        }
        case ArmFamily::left_isoclinic: return embed_5(left_isoclinic(quaternion_from_params(params)));
        case ArmFamily::right_isoclinic: return embed_5(right_isoclinic(quaternion_from_params(params)));
    }
    throw InvalidInput("arm_element: unknown family");
}

std::vector<OrthogonalTransform> finite_arm_elements(const ModelSpec& spec, Arm which) {
    switch (spec.arm(which).family) {
        case ArmFamily::trivial: return {OrthogonalTransform::identity(spec.dim)};
        case ArmFamily::reflection_z2: {
            Matrix flip(2, 2);
            flip << 1, 0, 0, -1;
            return {OrthogonalTransform::identity(2), OrthogonalTransform(flip)};
        }
        case ArmFamily::stabilizer:
            // SO(d-1) with d <= 2 has no continuous part.
            if (spec.dim <= 2) return {OrthogonalTransform::identity(spec.dim)};
            return {};
        default: return {};
    }
}

bool arm_contains(const ModelSpec& spec, Arm which, const OrthogonalTransform& t, double tol) {
    if (t.dim() != spec.dim) return false;
    const ArmGroup& arm = spec.arm(which);
    const Matrix& m = t.matrix();
    switch (arm.family) {
        case ArmFamily::trivial:
        case ArmFamily::reflection_z2: {
            for (const auto& e : finite_arm_elements(spec, which)) {
                if (max_abs_diff(m, e.matrix()) <= tol) return true;
            }
            return false;
        }
        case ArmFamily::circle: {
            const CirclePlane& p = *arm.plane;
            const double theta = std::atan2(p.sign * m(p.j, p.i), m(p.i, p.i));
            return max_abs_diff(m, circle_element(spec, which, theta).matrix()) <= tol;
        }
        case ArmFamily::stabilizer:
            return t.det_sign() > 0 && stabilizer_residual(t, spec.detector_axis) <= tol;
        case ArmFamily::left_isoclinic:
        case ArmFamily::right_isoclinic: {
            if (spec.dim != 5 || t.det_sign() < 0) return false;
            const Matrix& a = spec.detector_axis.axis();
            if ((m * a - a).norm() > tol || (m.transpose() * a - a).norm() > tol) return false;
            const IsoclinicClass c = isoclinic_classify(OrthogonalTransform(Matrix(m.bottomRightCorner(4, 4))));
            const IsoclinicKind wanted =
                arm.family == ArmFamily::left_isoclinic ? IsoclinicKind::left : IsoclinicKind::right;
            return c.kind == wanted || c.kind == IsoclinicKind::plus_minus_identity;
        }
    }
    return false;
}

GroupElementSample sample_group(const ModelSpec& spec, SampleSource source, std::uint64_t seed,
                                std::uint64_t index) {
    auto finish = [&](OrthogonalTransform t) { return GroupElementSample{std::move(t), source, seed, index}; };
    const int d = spec.dim;

    if (source == SampleSource::arm_a || source == SampleSource::arm_b) {
        const Arm which = source == SampleSource::arm_a ? Arm::a : Arm::b;
        const Stream stream = which == Arm::a ? Stream::arm_a : Stream::arm_b;
        auto rng = sample_engine(seed, index, stream);
        const ArmGroup& arm = spec.arm(which);
        switch (arm.family) {
            case ArmFamily::trivial: return finish(OrthogonalTransform::identity(d));
            case ArmFamily::reflection_z2:
                return finish(finite_arm_elements(spec, which)[static_cast<std::size_t>(rng() & 1U)]);
            case ArmFamily::circle: {
                std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
                return finish(circle_element(spec, which, angle(rng)));
            }
            case ArmFamily::stabilizer:
                return finish(haar_stabilizer(d, spec.detector_axis, rng()).element);
            case ArmFamily::left_isoclinic: return finish(embed_5(left_isoclinic(haar_quaternion(rng))));
            case ArmFamily::right_isoclinic: return finish(embed_5(right_isoclinic(haar_quaternion(rng))));
        }
    }

    if (source == SampleSource::phase) {
        auto rng = sample_engine(seed, index, Stream::probe);
        switch (spec.case_id) {
            case CaseId::real_d2:
                return finish(finite_arm_elements(spec, Arm::a)[static_cast<std::size_t>(rng() & 1U)]);
            case CaseId::u2_d4: {
                std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
                return finish(u2_phase(angle(rng)));
            }
            case CaseId::classical_d1: return finish(OrthogonalTransform::identity(1));
            default: return finish(haar_stabilizer(d, spec.detector_axis, rng()).element);
        }
    }

    auto rng = sample_engine(seed, index, Stream::haar);
    switch (spec.case_id) {
        case CaseId::classical_d1: {
            Matrix m(1, 1);
            m(0, 0) = (rng() & 1U) ? -1.0 : 1.0;
            return finish(OrthogonalTransform(std::move(m)));
        }
        case CaseId::real_d2: {
            Matrix m = haar_orthogonal(2, rng()).matrix();
            if (rng() & 1U) m.col(1) = -m.col(1);
            return finish(OrthogonalTransform(std::move(m)));
        }
        case CaseId::u2_d4: return finish(u2_embed(haar_unitary_2(rng)));
        default: return finish(haar_orthogonal(d, rng()));
    }
}

OrthogonalTransform transport_to(const ModelSpec& spec, const Vector& target) {
    if (target.size() != spec.dim) throw InvalidInput("transport_to: target dimension mismatch");
    if (!target.allFinite() || std::abs(target.norm() - 1.0) > kNormTol) {
        throw InvalidInput("transport_to: target must be a unit vector");
    }
    const int d = spec.dim;
    if (spec.case_id == CaseId::u2_d4) {
        // First column of u2_embed(U) is (Re U11, Re U21, -Im U11, -Im U21).
        using C = std::complex<double>;
        const C u11(target[0], -target[2]);
        const C u21(target[1], -target[3]);
        Matrix2c u;
        u << u11, -std::conj(u21), u21, std::conj(u11);
        return u2_embed(u);
    }
    if (d == 1) {
        if (target[0] > 0.0) return OrthogonalTransform::identity(1);
        if (spec.case_id == CaseId::classical_d1) return OrthogonalTransform(-Matrix::Identity(1, 1));
        throw InvalidInput("transport_to: SO(1) cannot reach the antipode");
    }

    const Vector e1 = Vector::Unit(d, 0);
    Vector perp = target - target[0] * e1;
    const double perp_norm = perp.norm();
    if (perp_norm == 0.0) {
        if (target[0] > 0.0) return OrthogonalTransform::identity(d);
        return plane_rotation(d, 0, 1, std::numbers::pi);
    }
    const Vector u = perp / perp_norm;
    const double theta = std::atan2(perp_norm, target[0]);
    const Matrix m = Matrix::Identity(d, d) + std::sin(theta) * (u * e1.transpose() - e1 * u.transpose()) +
                     (std::cos(theta) - 1.0) * (e1 * e1.transpose() + u * u.transpose());
    return OrthogonalTransform(m);
}

namespace {

Json arm_to_json(const ArmGroup& arm) {
    Json gens = Json::array();
    for (const Matrix& g : arm.generators) gens.push_back(matrix_to_json(g));
    Json j{{"name", arm.name}, {"family", to_string(arm.family)}, {"generators", gens}, {"plane", nullptr}};
    if (arm.plane) j["plane"] = Json{{"i", arm.plane->i}, {"j", arm.plane->j}, {"sign", arm.plane->sign}};
    return j;
}

ArmGroup arm_from_json(const Json& j, const ArmGroup& reference) {
    ArmGroup arm = reference;
    if (j.at("family").get<std::string>() != to_string(reference.family)) {
        throw InvalidInput("model_from_json: arm family does not match the case");
    }
    arm.name = j.at("name").get<std::string>();
    arm.generators.clear();
    for (const Json& g : j.at("generators")) arm.generators.push_back(matrix_from_json(g));
    if (j.at("plane").is_null()) {
        arm.plane.reset();
    } else {
        const Json& p = j.at("plane");
        arm.plane = CirclePlane{p.at("i").get<int>(), p.at("j").get<int>(), p.at("sign").get<int>()};
    }
    return arm;
}

}  // namespace

Json to_json(const ModelSpec& spec) {
    Json globals = Json::array();
    for (const Matrix& g : spec.global_group.generators) globals.push_back(matrix_to_json(g));
    return Json{{"case", spec.name()},
                {"dim", spec.dim},
                {"global_group", Json{{"name", spec.global_group.name}, {"generators", globals}}},
                {"arm_a", arm_to_json(spec.arm_a)},
                {"arm_b", arm_to_json(spec.arm_b)},
                {"detector_axis", vector_to_json(spec.detector_axis.axis())},
                {"coordinate_permutation", spec.coordinate_permutation}};
}

ModelSpec model_from_json(const Json& doc) {
    try {
        ModelSpec spec = make_model(doc.at("case").get<std::string>());
        if (doc.at("dim").get<int>() != spec.dim) throw InvalidInput("model_from_json: dimension mismatch");
        spec.global_group.name = doc.at("global_group").at("name").get<std::string>();
        spec.global_group.generators.clear();
        for (const Json& g : doc.at("global_group").at("generators")) {
            spec.global_group.generators.push_back(matrix_from_json(g));
        }
        spec.arm_a = arm_from_json(doc.at("arm_a"), spec.arm_a);
        spec.arm_b = arm_from_json(doc.at("arm_b"), spec.arm_b);
        spec.detector_axis = Effect(vector_from_json(doc.at("detector_axis")));
        spec.coordinate_permutation = doc.at("coordinate_permutation").get<std::vector<int>>();
        validate(spec);
        return spec;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("model_from_json: malformed document: ") + e.what());
    }
}

const char* to_string(ArmFamily family) {
    switch (family) {
        case ArmFamily::trivial: return "trivial";
        case ArmFamily::reflection_z2: return "reflection_z2";
        case ArmFamily::circle: return "circle";
        case ArmFamily::stabilizer: return "stabilizer";
        case ArmFamily::left_isoclinic: return "left_isoclinic";
        case ArmFamily::right_isoclinic: return "right_isoclinic";
    }
    return "trivial";
}

const char* to_string(SampleSource source) {
    switch (source) {
        case SampleSource::arm_a: return "armA";
        case SampleSource::arm_b: return "armB";
        case SampleSource::phase: return "phase";
        case SampleSource::global: return "global";
    }
    return "global";
}

}  // namespace gbit
