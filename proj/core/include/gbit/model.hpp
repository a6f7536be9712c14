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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbit/json_io.hpp"
#include "gbit/state.hpp"

namespace gbit {

enum class CaseId { classical_d1, real_d2, complex_d3, u2_d4, fullstab, quaternion_d5 };

/// How an arm group is parameterized and sampled.
enum class ArmFamily {
    trivial,          // {I}
    reflection_z2,    // {I, diag(1, -1)} in d = 2
    circle,           // one-parameter rotation group in a fixed plane
    stabilizer,       // full SO(d-1) stabilizer of the detector axis
    left_isoclinic,   // embed_5(left multiplication by unit quaternions)
    right_isoclinic,  // embed_5(right multiplication by unit quaternions)
};

/// Rotation plane of a circle family: element(theta) = plane_rotation(i, j, sign * theta).
struct CirclePlane {
    int i = 0;
    int j = 1;
    int sign = 1;
};

struct ArmGroup {
    std::string name;
    ArmFamily family = ArmFamily::trivial;
    std::vector<Matrix> generators;
    std::optional<CirclePlane> plane;
};

struct GlobalGroup {
    std::string name;
    std::vector<Matrix> generators;
};

enum class Arm { a, b };

/// One of the model cases: dimension, transformation group, arm groups.
///
/// The group generated by both arms is represented only implicitly, through the
/// union of the two generator lists.
struct ModelSpec {
    CaseId case_id = CaseId::complex_d3;
    int dim = 3;
    GlobalGroup global_group;
    ArmGroup arm_a;
    ArmGroup arm_b;
    Effect detector_axis = Effect::along(3);
    /// Maps model coordinates to the natural order of the underlying
    /// construction. Identity for every shipped case (for u2-d4 the block order
    /// of the U(2) embedding already puts the phase group in the stated form).
    std::vector<int> coordinate_permutation;

    std::string name() const;
    const ArmGroup& arm(Arm which) const { return which == Arm::a ? arm_a : arm_b; }
};

/// Parse a case name: classical-d1, real-d2, complex-d3, u2-d4, quaternion-d5,
/// fullstab-d<N> (N >= 1). Throws InvalidInput for unknown names.
ModelSpec make_model(std::string_view name);
ModelSpec make_fullstab(int dim);

/// Checks the ModelSpec invariants (generator orthogonality, arm generators
/// fixing the detector axis). Throws InvalidInput with the offending item.
void validate(const ModelSpec& spec);

/// Number of real parameters of an arm family (0 for the finite families).
int parameter_count(const ModelSpec& spec, Arm which);

/// Element of an arm group from its parameters. Circle: {theta}; isoclinic:
/// hyperspherical angles of the unit quaternion; stabilizer: one angle per
/// coordinate plane of the complement (Givens product); reflection_z2: {k}
/// selects diag(1, (-1)^k).
OrthogonalTransform arm_element(const ModelSpec& spec, Arm which, std::span<const double> params);

/// Finite arm groups listed exhaustively; empty for continuous families.
std::vector<OrthogonalTransform> finite_arm_elements(const ModelSpec& spec, Arm which);

/// Circle family member at angle theta (u2-d4 gives exactly u2_phase(theta)).
OrthogonalTransform circle_element(const ModelSpec& spec, Arm which, double theta);

bool arm_contains(const ModelSpec& spec, Arm which, const OrthogonalTransform& t,
                  double tol = kOrthoTol);

enum class SampleSource { arm_a, arm_b, phase, global };

struct GroupElementSample {
    OrthogonalTransform element;
    SampleSource source;
    std::uint64_t seed;
    std::uint64_t index;
};

/// Haar sample from the requested group, a pure function of (seed, index).
GroupElementSample sample_group(const ModelSpec& spec, SampleSource source, std::uint64_t seed,
                                std::uint64_t index);

/// Element g of the global group with g e_1 = target (to 1e-9).
OrthogonalTransform transport_to(const ModelSpec& spec, const Vector& target);

Json to_json(const ModelSpec& spec);
ModelSpec model_from_json(const Json& doc);

const char* to_string(ArmFamily family);
const char* to_string(SampleSource source);

}  // namespace gbit
