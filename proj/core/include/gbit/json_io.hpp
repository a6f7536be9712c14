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

#include <string>

#include <nlohmann/json.hpp>

#include "gbit/state.hpp"

namespace gbit {

using Json = nlohmann::json;

/// Canonical text form: sorted keys, floats with 17 significant digits,
/// two-space indent, trailing LF. Identical trees give identical bytes.
std::string dump_canonical(const Json& doc);

/// Decimal text of a double with 17 significant digits ("%.17g"); integral
/// values get a trailing ".0" so they reload as floats (keeps -0.0).
std::string format_double(double v);

/// Row-major nested arrays.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

}  // namespace gbit
