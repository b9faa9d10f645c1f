// Copyright 2026 The blochdense Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "blochdense/channel.hpp"
#include "blochdense/coding.hpp"
#include "blochdense/jacobi.hpp"
#include "blochdense/presets.hpp"
#include "blochdense/runner.hpp"

namespace {

namespace bd = blochdense;

bd::MatXc random_hermitian(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  bd::MatXc a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = bd::Complex(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

void BM_EigHermitian(benchmark::State& state) {
  const bd::MatXc a = random_hermitian(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(bd::eig_hermitian(a));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

const bd::ChannelParams kParams{{100.0, 0.5, 1.0}, {100.0, 0.5, 0.9}, bd::EvolutionMode::kConsistent, true};

void BM_Evolve(benchmark::State& state) {
  const bd::BlochPair b = bd::bell_state(bd::BellKind::kPsiMinus);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bd::evolve(b, kParams, t));
    t += 0.25;
  }
}
BENCHMARK(BM_Evolve);

void BM_KrausApply(benchmark::State& state) {
  const bd::DensityMatrix m = bd::to_density(bd::bell_state(bd::BellKind::kPsiMinus));
  const auto ka = bd::kraus_set(kParams.qubit_a, 50.0), kb = bd::kraus_set(kParams.qubit_b, 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(bd::kraus_apply(m, ka, kb));
}
BENCHMARK(BM_KrausApply);

void BM_DecodedInfo(benchmark::State& state) {
  const bd::BlochPair b = bd::partial_entangled(0.5);
  const auto order = static_cast<bd::ProtocolOrder>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bd::decoded_info(b, kParams, bd::EncodingSpec::pauli(), order, 42.0));
  }
}
BENCHMARK(BM_DecodedInfo)->Arg(0)->Arg(1);

void BM_PresetRun(benchmark::State& state) {
  const bd::Preset p = bd::preset(state.range(0) == 0 ? "fig1a" : "fig3a");
  for (auto _ : state) {
    for (const auto& c : p.curves) benchmark::DoNotOptimize(bd::run(c.config));
  }
}
BENCHMARK(BM_PresetRun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
