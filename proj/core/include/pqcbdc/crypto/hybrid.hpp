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

#include <array>
#include <cstdint>
#include <string_view>

#include "pqcbdc/crypto/signature.hpp"

namespace pqcbdc::crypto {

// Which signature families a relying party insists on. Runtime-switchable:
// it is a call parameter everywhere, never baked into issued artifacts.
enum class VerificationPolicy : std::uint8_t {
    ClassicalOnly = 1,
    PqOnly = 2,
    Both = 3,
    Either = 4,
};

inline constexpr std::array<VerificationPolicy, 4> kAllPolicies{
    VerificationPolicy::ClassicalOnly, VerificationPolicy::PqOnly, VerificationPolicy::Both,
    VerificationPolicy::Either};

std::string_view to_string(VerificationPolicy policy);
// "classical-only", "pq-only", "both", "either"
VerificationPolicy parse_policy(std::string_view name);

constexpr bool policy_accepts(VerificationPolicy policy, bool classical_ok, bool pq_ok) {
    switch (policy) {
        case VerificationPolicy::ClassicalOnly: return classical_ok;
        case VerificationPolicy::PqOnly: return pq_ok;
        case VerificationPolicy::Both: return classical_ok && pq_ok;
        case VerificationPolicy::Either: return classical_ok || pq_ok;
    }
    return false;
}

constexpr bool policy_needs_classical(VerificationPolicy p) {
    return p != VerificationPolicy::PqOnly;
}
constexpr bool policy_needs_pq(VerificationPolicy p) {
    return p != VerificationPolicy::ClassicalOnly;
}

struct HybridPublicKey {
    Bytes classical;
    SchemeId pq_scheme = SchemeId::PqWots;
    Bytes pq;

    // var(classical) || pq scheme byte || var(pq)
    Bytes encode() const;
    static HybridPublicKey decode(ByteView data);
};

struct HybridKeyPair {
    KeyPair classical;
    KeyPair pq;

    HybridPublicKey public_key() const;
};

// PQ component scheme from config.hybrid_pq.
HybridKeyPair hybrid_keygen(Drbg& rng, const SchemeConfig& config = {});

/// Composite signature: both components over the same message.
/// Payload = var(classical.encode()) || var(pq.encode()).
Signature hybrid_sign(const KeyPair& classical, KeyPair& pq, ByteView msg,
                      const SchemeConfig& config = {});

struct HybridComponents {
    Signature classical;
    Signature pq;
};

// Throws MALFORMED_SIGNATURE if the payload does not split cleanly.
HybridComponents split_hybrid(const Signature& sig);
Signature combine_hybrid(const Signature& classical, const Signature& pq);

struct HybridCheck {
    bool classical_ok;
    bool pq_ok;
};

// Evaluates both components independently.
HybridCheck hybrid_check(const HybridPublicKey& keys, ByteView msg, const Signature& sig,
                         const SchemeConfig& config = {});

bool hybrid_verify(const HybridPublicKey& keys, ByteView msg, const Signature& sig,
                   VerificationPolicy policy, const SchemeConfig& config = {});

}  // namespace pqcbdc::crypto
