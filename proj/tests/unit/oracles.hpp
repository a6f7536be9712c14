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

// Reference computations that deliberately avoid the library's code paths:
// plain nested vectors, explicit loops, vector-form quaternion products.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "gbit/state.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const gbit::Matrix& m) {
    Dense d(static_cast<std::size_t>(m.rows()), std::vector<double>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
    return d;
}

inline Dense identity(std::size_t n) {
    Dense d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 1.0;
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Dense out(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
    return out;
}

inline std::vector<double> act(const Dense& a, const std::vector<double>& v) {
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t t = 0; t < v.size(); ++t) out[i] += a[i][t] * v[t];
    return out;
}

inline double frobenius_diff(const Dense& a, const Dense& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) s += (a[i][j] - b[i][j]) * (a[i][j] - b[i][j]);
    return std::sqrt(s);
}

// Rotation by theta in plane (i, j), e_i -> cos e_i + sin e_j, written out by hand.
inline Dense rot(std::size_t n, std::size_t i, std::size_t j, double theta) {
    Dense d = identity(n);
    d[i][i] = std::cos(theta);
    d[j][j] = std::cos(theta);
    d[j][i] = std::sin(theta);
    d[i][j] = -std::sin(theta);
    return d;
}

// Mach-Zehnder p1 from dense products: input e1, exact quarter-turn
// beamsplitter in (1,2), arms, inverse beamsplitter, detector e1.
inline double mzi_p1(const Dense& first, const Dense& second) {
    const std::size_t n = first.size();
    Dense bs = identity(n);
    bs[0][0] = 0.0;
    bs[1][1] = 0.0;
    bs[1][0] = 1.0;
    bs[0][1] = -1.0;
    Dense rec = identity(n);
    rec[0][0] = 0.0;
    rec[1][1] = 0.0;
    rec[1][0] = -1.0;
    rec[0][1] = 1.0;
    std::vector<double> w(n, 0.0);
    w[0] = 1.0;
    w = act(rec, act(second, act(first, act(bs, w))));
    return (1.0 + w[0]) / 2.0;
}

// Quaternion product in scalar/vector form:
// (a0, a)(b0, b) = (a0 b0 - a.b, a0 b + b0 a + a x b).
inline std::array<double, 4> qmul(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    const double dot = a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    const std::array<double, 3> cross{a[2] * b[3] - a[3] * b[2], a[3] * b[1] - a[1] * b[3],
                                      a[1] * b[2] - a[2] * b[1]};
    return {a[0] * b[0] - dot, a[0] * b[1] + b[0] * a[1] + cross[0], a[0] * b[2] + b[0] * a[2] + cross[1],
            a[0] * b[3] + b[0] * a[3] + cross[2]};
}

// Click probability of the standard qubit MZI from explicit 2x2 products:
// H, diag(e^{i a}, e^{i b}), H, then |<0|psi>|^2.
inline double qubit_mzi_p1(double phi_a, double phi_b) {
    using C = std::complex<double>;
    const double h = 1.0 / std::sqrt(2.0);
    const C in0 = 1.0, in1 = 0.0;
    const C s0 = h * in0 + h * in1;
    const C s1 = h * in0 - h * in1;
    const C t0 = std::exp(C(0, phi_a)) * s0;
    const C t1 = std::exp(C(0, phi_b)) * s1;
    const C out0 = h * t0 + h * t1;
    return std::norm(out0);
}

}  // namespace oracle
