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

#include "gbit/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gbit/errors.hpp"

namespace gbit {

namespace {

void write(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            // nlohmann's default object_t is a std::map: iteration is key-sorted.
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                write(it.value(), out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line (matrix rows, vectors).
            const bool flat = std::all_of(j.begin(), j.end(),
                                          [](const Json& e) { return e.is_primitive(); });
            if (flat) {
                out += "[";
                for (std::size_t k = 0; k < j.size(); ++k) {
                    if (k) out += ", ";
                    write(j[k], out, depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ",\n";
                out += pad;
                write(j[k], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string text(buf);
    // Keep integral values typed as floats so that -0.0 survives a reload.
    if (text.find_first_of(".e") == std::string::npos) text += ".0";
    return text;
}

std::string dump_canonical(const Json& doc) {
    std::string out;
    write(doc, out, 0);
    out += "\n";
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw InvalidInput("matrix_from_json: expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw InvalidInput("matrix_from_json: ragged rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
    return m;
}

Json vector_to_json(const Vector& v) {
    Json a = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v[k]);
    return a;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("vector_from_json: expected an array");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<Eigen::Index>(k)] = j[k].get<double>();
    return v;
}

}  // namespace gbit
