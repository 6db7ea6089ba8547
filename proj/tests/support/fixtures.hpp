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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/signature.hpp"
#include "pqcbdc/ledger/register.hpp"
#include "pqcbdc/pki/pki.hpp"
#include "pqcbdc/wallet/wallet.hpp"

namespace pqcbdc::testing {

inline crypto::Drbg rng(std::string_view label) { return crypto::Drbg::from_label(label); }

inline crypto::SchemeConfig mss_config(int height) {
    crypto::SchemeConfig config;
    config.mss_height = height;
    return config;
}

// Tree building dominates setup time, so each height is built once per process
// and handed out as independent duplicates.
inline const crypto::KeyPair& cached_mss(int height) {
    static std::map<int, crypto::KeyPair> cache;
    auto it = cache.find(height);
    if (it == cache.end()) {
        auto r = rng("cached-mss-" + std::to_string(height));
        it = cache.emplace(height, crypto::keygen(crypto::SchemeId::PqMss, r, mss_config(height))).first;
    }
    return it->second;
}

inline ledger::Register make_register(std::string_view label, int height = 10) {
    ledger::RegisterConfig config;
    config.receipt_tree_height = height;
    return ledger::Register(cached_mss(height).duplicate(), rng(label), config);
}

struct Authority {
    crypto::KeyPair classical;
    crypto::KeyPair pq;
    pki::Certificate root;

    pki::IssuerKeys keys() { return {&classical, &pq}; }
};

inline Authority make_authority(std::string_view label, int pq_height = 8, pki::Validity validity = {0, 1'000'000}) {
    auto r = rng(label);
    Authority a;
    a.classical = crypto::keygen(crypto::SchemeId::ClassicalSchnorr, r);
    a.pq = crypto::keygen(crypto::SchemeId::PqMss, r, mss_config(pq_height));
    a.root = pki::issue_root(std::string(label), a.keys(), validity, r);
    return a;
}

inline wallet::Wallet make_wallet(Authority& ca, crypto::Drbg& r, wallet::Generation generation,
                                  wallet::Kind kind = wallet::Kind::Software,
                                  wallet::RotationPolicy rotation = wallet::RotationPolicy::FreshAddress,
                                  int mss_height = 4) {
    wallet::WalletOptions options;
    options.mss_height = mss_height;
    return wallet::Wallet::create({kind, generation, true}, rotation, ca.root, ca.keys(), r, options);
}

// Fills in owner keys and signatures; the digest covers ids and outputs only.
inline void sign_inputs(ledger::TransferRequest& request, const std::vector<crypto::KeyPair*>& keys) {
    const auto digest = request.digest();
    for (std::size_t i = 0; i < request.inputs.size(); ++i) {
        request.inputs[i].owner_public_key = keys[i]->public_key;
        request.inputs[i].signature = crypto::sign(*keys[i], digest);
    }
}

}  // namespace pqcbdc::testing
