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

#include "pqcbdc/crypto/hybrid.hpp"

#include <string>

#include "pqcbdc/crypto/schnorr.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto {

std::string_view to_string(VerificationPolicy policy) {
    switch (policy) {
        case VerificationPolicy::ClassicalOnly: return "classical-only";
        case VerificationPolicy::PqOnly: return "pq-only";
        case VerificationPolicy::Both: return "both";
        case VerificationPolicy::Either: return "either";
    }
    return "unknown";
}

VerificationPolicy parse_policy(std::string_view name) {
    for (auto p : kAllPolicies) {
        if (to_string(p) == name) return p;
    }
    throw Error(ErrorCode::MalformedEncoding, "unknown policy '" + std::string(name) + "'");
}

Bytes HybridPublicKey::encode() const {
    ByteWriter w;
    w.var(classical).u8(static_cast<std::uint8_t>(pq_scheme)).var(pq);
    return w.take();
}

HybridPublicKey HybridPublicKey::decode(ByteView data) {
    ByteReader r(data);
    HybridPublicKey out;
    out.classical = r.var();
    out.pq_scheme = scheme_from_code(r.u8());
    out.pq = r.var();
    r.expect_done();
    if (!is_post_quantum(out.pq_scheme)) throw Error(ErrorCode::MalformedEncoding, "hybrid PQ component scheme");
    return out;
}

HybridPublicKey HybridKeyPair::public_key() const { return {classical.public_key, pq.scheme, pq.public_key}; }

HybridKeyPair hybrid_keygen(Drbg& rng, const SchemeConfig& config) {
    if (!is_post_quantum(config.hybrid_pq)) throw Error(ErrorCode::UnsupportedScheme, "hybrid PQ component");
    auto classical = keygen(SchemeId::ClassicalSchnorr, rng, config);
    auto pq = keygen(config.hybrid_pq, rng, config);
    return {std::move(classical), std::move(pq)};
}

Signature combine_hybrid(const Signature& classical, const Signature& pq) {
    ByteWriter w;
    w.var(classical.encode()).var(pq.encode());
    return Signature{SchemeId::HybridCm, w.take(), std::nullopt};
}

Signature hybrid_sign(const KeyPair& classical, KeyPair& pq, ByteView msg, const SchemeConfig& config) {
    if (classical.scheme != SchemeId::ClassicalSchnorr || !is_post_quantum(pq.scheme)) {
        throw Error(ErrorCode::UnsupportedScheme, "hybrid needs a classical and a post-quantum key");
    }
    // PQ first: it is the component that can fail on key state.
    auto pq_sig = sign(pq, msg, config);
    Signature c_sig{SchemeId::ClassicalSchnorr, schnorr::sign(classical.private_key, msg, config.group_params()),
                    std::nullopt};
    return combine_hybrid(c_sig, pq_sig);
}

HybridComponents split_hybrid(const Signature& sig) {
    if (sig.scheme != SchemeId::HybridCm) throw Error(ErrorCode::MalformedSignature, "not a hybrid signature");
    try {
        ByteReader r(sig.payload);
        auto c = Signature::decode(r.var());
        auto p = Signature::decode(r.var());
        r.expect_done();
        if (c.scheme != SchemeId::ClassicalSchnorr || !is_post_quantum(p.scheme)) {
            throw Error(ErrorCode::MalformedSignature, "hybrid component schemes");
        }
        return {std::move(c), std::move(p)};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedSignature) throw;
        throw Error(ErrorCode::MalformedSignature, e.what());
    }
}

HybridCheck hybrid_check(const HybridPublicKey& keys, ByteView msg, const Signature& sig, const SchemeConfig& config) {
    auto parts = split_hybrid(sig);
    HybridCheck out{};
    out.classical_ok = verify(keys.classical, SchemeId::ClassicalSchnorr, msg, parts.classical, config);
    out.pq_ok = verify(keys.pq, keys.pq_scheme, msg, parts.pq, config);
    return out;
}

bool hybrid_verify(const HybridPublicKey& keys, ByteView msg, const Signature& sig, VerificationPolicy policy,
                   const SchemeConfig& config) {
    auto check = hybrid_check(keys, msg, sig, config);
    return policy_accepts(policy, check.classical_ok, check.pq_ok);
}

}  // namespace pqcbdc::crypto
