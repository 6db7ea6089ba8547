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

#include "pqcbdc/crypto/signature.hpp"

#include "pqcbdc/crypto/hybrid.hpp"
#include "pqcbdc/crypto/schnorr.hpp"
#include "pqcbdc/crypto/wots.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto {

Bytes Signature::encode() const {
    Bytes out;
    out.reserve(1 + payload.size());
    out.push_back(static_cast<std::uint8_t>(scheme));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Signature Signature::decode(ByteView data) {
    if (data.empty()) throw Error(ErrorCode::MalformedSignature, "empty signature");
    Signature sig;
    try {
        sig.scheme = scheme_from_code(data[0]);
    } catch (const Error&) {
        throw Error(ErrorCode::MalformedSignature, "unknown scheme code");
    }
    sig.payload.assign(data.begin() + 1, data.end());
    if (sig.scheme == SchemeId::PqMss && sig.payload.size() >= 4) {
        sig.leaf_index = (std::uint32_t{sig.payload[0]} << 24) | (std::uint32_t{sig.payload[1]} << 16) |
                         (std::uint32_t{sig.payload[2]} << 8) | sig.payload[3];
    }
    return sig;
}

KeyPair KeyPair::duplicate() const {
    KeyPair out;
    out.scheme = scheme;
    out.public_key = public_key;
    out.private_key = private_key;
    out.ots_state = ots_state;
    out.tree = tree;
    return out;
}

std::uint64_t KeyPair::signatures_remaining() const {
    if (!ots_state) return std::numeric_limits<std::uint64_t>::max();
    return ots_state->capacity() - std::min<std::uint64_t>(ots_state->next_leaf, ots_state->capacity());
}

KeyPair keygen(SchemeId scheme, Drbg& rng, const SchemeConfig& config) {
    KeyPair key;
    key.scheme = scheme;
    switch (scheme) {
        case SchemeId::ClassicalSchnorr: {
            auto raw = schnorr::keygen(rng, config.group_params());
            key.public_key = std::move(raw.public_key);
            key.private_key = std::move(raw.private_key);
            return key;
        }
        case SchemeId::PqWots: {
            key.private_key = rng.bytes(wots::kPrivateBytes);
            key.public_key = wots::public_key(key.private_key);
            key.ots_state = MerkleKeyState{0, 0, {}};
            return key;
        }
        case SchemeId::PqMss: {
            if (config.mss_height < mss::kMinHeight || config.mss_height > mss::kMaxHeight) {
                throw Error(ErrorCode::UnsupportedHeight, "MSS height " + std::to_string(config.mss_height));
            }
            key.private_key = rng.bytes(32);
            key.tree = std::make_shared<const mss::Tree>(key.private_key, config.mss_height);
            key.public_key.assign(key.tree->root().begin(), key.tree->root().end());
            key.ots_state = MerkleKeyState{config.mss_height, 0, {}};
            return key;
        }
        case SchemeId::HybridCm:
            break;
    }
    throw Error(ErrorCode::UnsupportedScheme, "hybrid keys are generated with hybrid_keygen");
}

void restore_tree(KeyPair& key) {
    if (key.scheme != SchemeId::PqMss || !key.ots_state) return;
    key.tree = std::make_shared<const mss::Tree>(key.private_key, key.ots_state->height);
    if (!std::equal(key.tree->root().begin(), key.tree->root().end(), key.public_key.begin(), key.public_key.end())) {
        throw Error(ErrorCode::KeyMismatch, "MSS private seed does not match public root");
    }
}

Signature sign(KeyPair& key, ByteView msg, const SchemeConfig& config) {
    Signature sig;
    sig.scheme = key.scheme;
    switch (key.scheme) {
        case SchemeId::ClassicalSchnorr:
            sig.payload = schnorr::sign(key.private_key, msg, config.group_params());
            return sig;
        case SchemeId::PqWots: {
            auto& state = key.ots_state.value();
            if (state.next_leaf != 0) throw Error(ErrorCode::OtsReuse);
            sig.payload = wots::sign(key.private_key, msg);
            state.used_leaves.push_back(0);
            state.next_leaf = 1;
            return sig;
        }
        case SchemeId::PqMss: {
            auto& state = key.ots_state.value();
            if (state.exhausted()) throw Error(ErrorCode::MssExhausted);
            if (!key.tree) restore_tree(key);
            const auto leaf = state.next_leaf;
            sig.payload = mss::sign(*key.tree, key.private_key, leaf, msg);
            sig.leaf_index = leaf;
            state.used_leaves.push_back(leaf);
            state.next_leaf = leaf + 1;
            return sig;
        }
        case SchemeId::HybridCm:
            break;
    }
    throw Error(ErrorCode::UnsupportedScheme, "hybrid signatures are produced with hybrid_sign");
}

bool verify(ByteView public_key, SchemeId scheme, ByteView msg, const Signature& sig, const SchemeConfig& config) {
    if (sig.scheme != scheme) return false;
    switch (scheme) {
        case SchemeId::ClassicalSchnorr:
            return schnorr::verify(public_key, msg, sig.payload, config.group_params());
        case SchemeId::PqWots:
            return wots::verify(public_key, msg, sig.payload);
        case SchemeId::PqMss:
            return mss::verify(public_key, msg, sig.payload);
        case SchemeId::HybridCm: {
            HybridPublicKey keys;
            try {
                keys = HybridPublicKey::decode(public_key);
            } catch (const Error&) {
                return false;
            }
            return hybrid_verify(keys, msg, sig, VerificationPolicy::Both, config);
        }
    }
    return false;
}

}  // namespace pqcbdc::crypto
