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
#include <optional>
#include <string>
#include <string_view>

#include "pqcbdc/bytes.hpp"
#include "pqcbdc/crypto/signature.hpp"

namespace pqcbdc::pki {

using Serial = Id16;
using Tick = std::int64_t;

enum class Role : std::uint8_t {
    RootCa = 1,
    SubCa = 2,
    Wallet = 3,
    Register = 4,
};

std::string_view to_string(Role role);
// "root-ca", "sub-ca", "wallet", "register"
Role parse_role(std::string_view name);

constexpr bool is_ca(Role role) { return role == Role::RootCa || role == Role::SubCa; }

struct Validity {
    Tick not_before = 0;
    Tick not_after = 0;

    bool contains(Tick t) const { return not_before <= t && t <= not_after; }
    bool within(const Validity& outer) const {
        return outer.not_before <= not_before && not_after <= outer.not_after;
    }
    friend bool operator==(const Validity&, const Validity&) = default;
};

/// Post-quantum key carried as an extension field. Verifiers that do not
/// understand it still hash it as part of the signed content.
struct PqExtension {
    crypto::SchemeId scheme = crypto::SchemeId::PqMss;
    Bytes public_key;

    friend bool operator==(const PqExtension&, const PqExtension&) = default;
};

struct Certificate {
    Serial serial{};
    std::string subject;
    Role role = Role::Wallet;
    std::optional<Bytes> classical_pub;
    std::optional<PqExtension> pq;
    std::optional<Serial> linked_serial;  // non-composite PQ half -> classical half
    Validity validity;
    Serial issuer_serial{};
    std::optional<crypto::Signature> issuer_sig_classical;
    std::optional<crypto::Signature> issuer_sig_pq;

    bool self_signed() const { return issuer_serial == serial; }
    bool has_any_key() const { return classical_pub.has_value() || pq.has_value(); }

    /// Canonical signed content: every field except the issuer signatures,
    /// fixed order, length-prefixed.
    Bytes tbs() const;
    // The message issuers actually sign: hash(tbs, "cert").
    Digest tbs_digest() const;

    Bytes encode() const;
    static Certificate decode(ByteView data);

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace pqcbdc::pki
