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

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "pqcbdc/bytes.hpp"
#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/mss.hpp"
#include "pqcbdc/crypto/scheme.hpp"

namespace pqcbdc::crypto {

/// Signing state of a stateful key. PQ_WOTS keys carry height 0 (one leaf).
struct MerkleKeyState {
    int height = 0;
    std::uint32_t next_leaf = 0;
    std::vector<std::uint32_t> used_leaves;

    std::uint64_t capacity() const { return std::uint64_t{1} << height; }
    bool exhausted() const { return next_leaf >= capacity(); }

    friend bool operator==(const MerkleKeyState&, const MerkleKeyState&) = default;
};

struct Signature {
    SchemeId scheme = SchemeId::ClassicalSchnorr;
    Bytes payload;
    std::optional<std::uint32_t> leaf_index;  // PQ_MSS only

    // scheme byte || payload
    Bytes encode() const;
    static Signature decode(ByteView data);

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Key material plus one-time/many-time signing state.
///
/// Move-only: a copied stateful key could sign the same leaf twice. Use
/// duplicate() where an independent branch of history is really wanted.
struct KeyPair {
    SchemeId scheme = SchemeId::ClassicalSchnorr;
    Bytes public_key;
    Bytes private_key;
    std::optional<MerkleKeyState> ots_state;
    std::shared_ptr<const mss::Tree> tree;

    KeyPair() = default;
    KeyPair(KeyPair&&) noexcept = default;
    KeyPair& operator=(KeyPair&&) noexcept = default;
    KeyPair(const KeyPair&) = delete;
    KeyPair& operator=(const KeyPair&) = delete;

    KeyPair duplicate() const;

    std::uint64_t signatures_remaining() const;
};

// PQ_MSS height comes from config.mss_height. HYBRID_CM is not a single key;
// use hybrid_keygen. Throws UNSUPPORTED_HEIGHT / UNSUPPORTED_SCHEME.
KeyPair keygen(SchemeId scheme, Drbg& rng, const SchemeConfig& config = {});

// Rebuilds the signing cache for a key loaded from storage.
void restore_tree(KeyPair& key);

// Throws OTS_REUSE (second PQ_WOTS signature) or MSS_EXHAUSTED.
Signature sign(KeyPair& key, ByteView msg, const SchemeConfig& config = {});

// For HYBRID_CM the public key is an encoded HybridPublicKey and the policy
// is BOTH. A signature of another scheme is simply invalid.
// Throws MALFORMED_SIGNATURE on undecodable payloads.
bool verify(ByteView public_key, SchemeId scheme, ByteView msg, const Signature& sig,
            const SchemeConfig& config = {});

}  // namespace pqcbdc::crypto
