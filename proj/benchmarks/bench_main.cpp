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

#include <vector>

#include <benchmark/benchmark.h>

#include "gbit/groups.hpp"
#include "gbit/interferometer.hpp"
#include "gbit/lab.hpp"
#include "gbit/lie.hpp"
#include "gbit/model.hpp"
#include "gbit/quaternion.hpp"

namespace {

void BM_HaarOrthogonal(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gbit::haar_orthogonal(d, ++seed));
}
BENCHMARK(BM_HaarOrthogonal)->Arg(3)->Arg(8)->Arg(32);

void BM_ScanViolation(benchmark::State& state) {
    const gbit::ModelSpec spec = gbit::make_fullstab(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gbit::scan_violation(spec, 1000, 42).max_discrepancy);
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_ScanViolation)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LieClosure(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::vector<gbit::OrthogonalTransform> gens;
    for (int i = 0; i + 1 < d; ++i) gens.push_back(gbit::plane_rotation(d, i, i + 1, 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(gbit::lie_closure_dim(gens));
}
BENCHMARK(BM_LieClosure)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_QuaternionCancellation(benchmark::State& state) {
    const gbit::ModelSpec spec = gbit::make_model("quaternion-d5");
    const auto ta = gbit::embed_5(gbit::left_isoclinic(gbit::Quaternion::i()));
    for (auto _ : state) benchmark::DoNotOptimize(gbit::cancellation_residual(ta, spec, 32, 42).residual);
}
BENCHMARK(BM_QuaternionCancellation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
