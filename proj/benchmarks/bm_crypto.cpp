// Copyright 2026 The pqcbdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/crypto/hybrid.hpp"
#include "pqcbdc/crypto/signature.hpp"

namespace {

using namespace pqcbdc;
using crypto::SchemeId;

crypto::SchemeConfig mss_config(int height) {
    crypto::SchemeConfig c;
    c.mss_height = height;
    return c;
}

void BM_Hash(benchmark::State& state) {
    Bytes data(static_cast<std::size_t>(state.range(0)), 0x5a);
    for (auto _ : state) benchmark::DoNotOptimize(crypto::hash(data, "tx"));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Hash)->Arg(32)->Arg(1024)->Arg(65536);

void BM_Keygen(benchmark::State& state) {
    const auto scheme = static_cast<SchemeId>(state.range(0));
    auto rng = crypto::Drbg::from_label("bm-keygen");
    const auto config = mss_config(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(crypto::keygen(scheme, rng, config));
}
BENCHMARK(BM_Keygen)
    ->Args({static_cast<int>(SchemeId::ClassicalSchnorr), 0})
    ->Args({static_cast<int>(SchemeId::PqWots), 0})
    ->Args({static_cast<int>(SchemeId::PqMss), 4})
    ->Args({static_cast<int>(SchemeId::PqMss), 8})
    ->Unit(benchmark::kMillisecond);

void BM_SchnorrSign(benchmark::State& state) {
    auto rng = crypto::Drbg::from_label("bm-schnorr");
    auto key = crypto::keygen(SchemeId::ClassicalSchnorr, rng);
    const Bytes msg(64, 1);
    for (auto _ : state) benchmark::DoNotOptimize(crypto::sign(key, msg));
}
BENCHMARK(BM_SchnorrSign)->Unit(benchmark::kMicrosecond);

void BM_WotsSign(benchmark::State& state) {
    auto rng = crypto::Drbg::from_label("bm-wots");
    const Bytes msg(64, 1);
    for (auto _ : state) {
        state.PauseTiming();
        auto key = crypto::keygen(SchemeId::PqWots, rng);
        state.ResumeTiming();
        benchmark::DoNotOptimize(crypto::sign(key, msg));
    }
}
BENCHMARK(BM_WotsSign)->Unit(benchmark::kMicrosecond);

void BM_MssSign(benchmark::State& state) {
    const auto config = mss_config(static_cast<int>(state.range(0)));
    auto rng = crypto::Drbg::from_label("bm-mss");
    auto key = crypto::keygen(SchemeId::PqMss, rng, config);
    const Bytes msg(64, 1);
    for (auto _ : state) {
        if (key.signatures_remaining() == 0) {
            state.PauseTiming();
            key = crypto::keygen(SchemeId::PqMss, rng, config);
            state.ResumeTiming();
        }
        benchmark::DoNotOptimize(crypto::sign(key, msg, config));
    }
}
BENCHMARK(BM_MssSign)->Arg(4)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
    const auto scheme = static_cast<SchemeId>(state.range(0));
    const auto config = mss_config(8);
    auto rng = crypto::Drbg::from_label("bm-verify");
    auto key = crypto::keygen(scheme, rng, config);
    const Bytes msg(64, 1);
    const auto sig = crypto::sign(key, msg, config);
    for (auto _ : state) benchmark::DoNotOptimize(crypto::verify(key.public_key, scheme, msg, sig, config));
}
BENCHMARK(BM_Verify)
    ->Arg(static_cast<int>(SchemeId::ClassicalSchnorr))
    ->Arg(static_cast<int>(SchemeId::PqWots))
    ->Arg(static_cast<int>(SchemeId::PqMss))
    ->Unit(benchmark::kMicrosecond);

void BM_HybridVerify(benchmark::State& state) {
    const auto policy = crypto::kAllPolicies[static_cast<std::size_t>(state.range(0))];
    auto rng = crypto::Drbg::from_label("bm-hybrid");
    auto keys = crypto::hybrid_keygen(rng);
    const Bytes msg(64, 1);
    const auto sig = crypto::hybrid_sign(keys.classical, keys.pq, msg);
    const auto pub = keys.public_key();
    for (auto _ : state) benchmark::DoNotOptimize(crypto::hybrid_verify(pub, msg, sig, policy));
    state.SetLabel(std::string(crypto::to_string(policy)));
}
BENCHMARK(BM_HybridVerify)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
