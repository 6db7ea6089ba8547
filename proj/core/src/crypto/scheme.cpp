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

#include "pqcbdc/crypto/scheme.hpp"

#include <array>
#include <string>

#include "pqcbdc/crypto/mss.hpp"
#include "pqcbdc/crypto/wots.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto {

namespace {

constexpr std::array<SchemeInfo, 4> kRegistry{{
    {SchemeId::ClassicalSchnorr, "classical-schnorr", "discrete-log", false, false, "ECDSA / RSA"},
    {SchemeId::PqWots, "pq-wots", "hash-based", true, true, "FALCON / Dilithium token keys"},
    {SchemeId::PqMss, "pq-mss", "hash-based", true, true, "Dilithium / SPHINCS+ long-lived keys"},
    {SchemeId::HybridCm, "hybrid-cm", "composite", true, true, "composite classical + post-quantum"},
}};

constexpr std::array<RoleRecommendation, 4> kRoles{{
    {KeyRole::RootCa, "root-ca", "FALCON (Dilithium viable)", "SPHINCS+", SchemeId::HybridCm},
    {KeyRole::WalletIdentity, "wallet", "FALCON", "SPHINCS+", SchemeId::HybridCm},
    {KeyRole::Token, "token", "FALCON or Dilithium", "SPHINCS+", SchemeId::PqWots},
    {KeyRole::RegisterReceipts, "register-receipts", "Dilithium", "SPHINCS+", SchemeId::PqMss},
}};

}  // namespace

std::string_view to_string(SchemeId id) { return scheme_info(id).name; }

SchemeId parse_scheme(std::string_view name) {
    for (const auto& info : kRegistry) {
        if (info.name == name) return info.id;
    }
    throw Error(ErrorCode::UnsupportedScheme, std::string(name));
}

SchemeId scheme_from_code(std::uint8_t code) {
    if (code < 1 || code > 4) throw Error(ErrorCode::MalformedEncoding, "unknown scheme code " + std::to_string(code));
    return static_cast<SchemeId>(code);
}

std::span<const SchemeInfo> scheme_registry() { return kRegistry; }

const SchemeInfo& scheme_info(SchemeId id) {
    for (const auto& info : kRegistry) {
        if (info.id == id) return info;
    }
    throw Error(ErrorCode::UnsupportedScheme);
}

std::span<const RoleRecommendation> role_recommendations() { return kRoles; }

SizeReport scheme_sizes(SchemeId id, const SchemeConfig& config) {
    const auto& group = config.group_params();
    switch (id) {
        case SchemeId::ClassicalSchnorr:
            return {group.p_bytes(), group.q_bytes(), 2 * group.q_bytes()};
        case SchemeId::PqWots:
            return {wots::kPublicBytes, wots::kPrivateBytes, wots::kSignatureBytes};
        case SchemeId::PqMss:
            return {32, 32, mss::signature_bytes(config.mss_height)};
        case SchemeId::HybridCm: {
            if (!is_post_quantum(config.hybrid_pq)) throw Error(ErrorCode::UnsupportedScheme, "hybrid PQ component");
            auto c = scheme_sizes(SchemeId::ClassicalSchnorr, config);
            auto p = scheme_sizes(config.hybrid_pq, config);
            // Components are full signature encodings (scheme byte + payload),
            // each behind a 2-byte length prefix.
            return {2 + c.public_key_bytes + 1 + 2 + p.public_key_bytes,
                    c.private_key_bytes + p.private_key_bytes,
                    2 + (1 + c.signature_bytes) + 2 + (1 + p.signature_bytes)};
        }
    }
    throw Error(ErrorCode::UnsupportedScheme);
}

}  // namespace pqcbdc::crypto
