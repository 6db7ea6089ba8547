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

#include <memory>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/signature.hpp"
#include "pqcbdc/ledger/register.hpp"

namespace {

using namespace pqcbdc;
using crypto::SchemeId;

constexpr int kRegisterHeight = 12;

// A register with one token that moves back and forth between two Schnorr keys.
struct PingPong {
    crypto::Drbg rng = crypto::Drbg::from_label("bm-ledger");
    std::unique_ptr<ledger::Register> reg;
    crypto::KeyPair keys[2];
    ledger::TokenId token{};
    ledger::Tick now = 1;
    int holder = 0;

    PingPong() {
        keys[0] = crypto::keygen(SchemeId::ClassicalSchnorr, rng);
        keys[1] = crypto::keygen(SchemeId::ClassicalSchnorr, rng);
        reset();
    }

    void reset() {
        crypto::SchemeConfig mss;
        mss.mss_height = kRegisterHeight;
        ledger::RegisterConfig config;
        config.receipt_tree_height = kRegisterHeight;
        reg = std::make_unique<ledger::Register>(crypto::keygen(SchemeId::PqMss, rng, mss), rng.fork("register"),
                                                 config);
        token = reg->mint(1000, ledger::address_of(keys[0].public_key), ledger::kClassicalVersion).id;
        holder = 0;
        now = 1;
    }

    ledger::TransferRequest next_request() {
        ledger::TransferRequest req;
        req.inputs.push_back({token, keys[holder].public_key, {}});
        req.outputs.push_back({1000, ledger::address_of(keys[1 - holder].public_key), ledger::kClassicalVersion});
        req.inputs[0].signature = crypto::sign(keys[holder], req.digest());
        return req;
    }
};

void BM_CheckTransfer(benchmark::State& state) {
    PingPong p;
    const auto req = p.next_request();
    for (auto _ : state) p.reg->check_transfer(req, p.now);
}
BENCHMARK(BM_CheckTransfer)->Unit(benchmark::kMicrosecond);

void BM_ValidateTransfer(benchmark::State& state) {
    PingPong p;
    for (auto _ : state) {
        state.PauseTiming();
        if (p.reg->signatures_remaining() < 2) p.reset();
        auto req = p.next_request();
        state.ResumeTiming();
        auto receipt = p.reg->validate_transfer(req, ++p.now);
        p.token = receipt.new_token_ids.front();
        p.holder = 1 - p.holder;
    }
}
BENCHMARK(BM_ValidateTransfer)->Unit(benchmark::kMicrosecond);

void BM_Mint(benchmark::State& state) {
    PingPong p;
    const auto owner = ledger::address_of(p.keys[0].public_key);
    for (auto _ : state) {
        if (p.reg->signatures_remaining() < 1) {
            state.PauseTiming();
            p.reset();
            state.ResumeTiming();
        }
        benchmark::DoNotOptimize(p.reg->mint(10, owner, ledger::kClassicalVersion));
    }
}
BENCHMARK(BM_Mint)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
