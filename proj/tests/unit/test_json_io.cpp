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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "gbit/errors.hpp"
#include "gbit/json_io.hpp"

using namespace gbit;

TEST(JsonIo, doubles_round_trip_bit_exact) {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> n(0, 1e3);
    for (int t = 0; t < 2000; ++t) {
        const double x = n(rng);
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
    EXPECT_EQ(format_double(1.0), "1.0");
    EXPECT_EQ(format_double(-0.0), "-0.0");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(JsonIo, canonical_dump_sorts_keys) {
    const Json doc = Json::parse(R"({"b": 1.5, "a": [1, 2.5], "c": {"z": null, "y": "s"}})");
    const std::string text = dump_canonical(doc);
    EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
    EXPECT_LT(text.find("\"y\""), text.find("\"z\""));
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(dump_canonical(Json::parse(text)), text);
}

TEST(JsonIo, negative_zero_survives) {
    Matrix m(1, 2);
    m << -0.0, 0.5;
    const Matrix back = matrix_from_json(Json::parse(dump_canonical(matrix_to_json(m))));
    EXPECT_TRUE(std::signbit(back(0, 0)));
    EXPECT_EQ(back(0, 1), 0.5);
}

TEST(JsonIo, matrix_and_vector_round_trip) {
    std::mt19937_64 rng(72);
    std::normal_distribution<double> n;
    Matrix m(3, 4);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = n(rng);
    EXPECT_EQ(matrix_from_json(Json::parse(dump_canonical(matrix_to_json(m)))), m);
    Vector v(5);
    for (int i = 0; i < 5; ++i) v[i] = n(rng);
    EXPECT_EQ(vector_from_json(Json::parse(dump_canonical(vector_to_json(v)))), v);
    EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2], [3]]")), InvalidInput);
}
