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
#include <span>
#include <string_view>

#include "pqcbdc/crypto/group.hpp"

namespace pqcbdc::crypto {

// Wire codes are stable and serialized as a single byte.
enum class SchemeId : std::uint8_t {
    ClassicalSchnorr = 1,
    PqWots = 2,
    PqMss = 3,
    HybridCm = 4,
};

std::string_view to_string(SchemeId id);
// Accepts the names produced by to_string, e.g. "pq-wots".
SchemeId parse_scheme(std::string_view name);
// Throws MALFORMED_ENCODING for unknown codes.
SchemeId scheme_from_code(std::uint8_t code);

constexpr bool is_post_quantum(SchemeId id) {
    return id == SchemeId::PqWots || id == SchemeId::PqMss;
}

struct SchemeConfig {
    const GroupParams* group = nullptr;  // nullptr selects default_group()
    int mss_height = 8;
    SchemeId hybrid_pq = SchemeId::PqWots;

    const GroupParams& group_params() const { return group ? *group : default_group(); }
};

struct SizeReport {
    std::size_t public_key_bytes;
    std::size_t private_key_bytes;
    std::size_t signature_bytes;
};

/// Exact byte counts of the encodings produced by keygen/sign.
SizeReport scheme_sizes(SchemeId id, const SchemeConfig& config = {});

// Registry metadata. `stands_in_for` names the production algorithms a scheme
// plays the role of in the simulation.
struct SchemeInfo {
    SchemeId id;
    std::string_view name;
    std::string_view family;
    bool quantum_safe;
    bool stateful;
    std::string_view stands_in_for;
};

std::span<const SchemeInfo> scheme_registry();
const SchemeInfo& scheme_info(SchemeId id);

enum class KeyRole { RootCa, WalletIdentity, Token, RegisterReceipts };

// Per-role algorithm guidance for a deployment, alongside the scheme this
// library uses for that role by default.
struct RoleRecommendation {
    KeyRole role;
    std::string_view role_name;
    std::string_view recommended;
    std::string_view not_recommended;
    SchemeId default_scheme;
};

std::span<const RoleRecommendation> role_recommendations();

}  // namespace pqcbdc::crypto
