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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/signature.hpp"
#include "pqcbdc/ledger/event_log.hpp"
#include "pqcbdc/ledger/token.hpp"

namespace pqcbdc::ledger {

using VersionSet = std::set<Version>;

struct RegisterConfig {
    int receipt_tree_height = 16;  // MSS height of the receipt/mint key
    int value_scale = 2;           // decimal digits per unit
    crypto::SchemeConfig scheme;
};

struct RevealEntry {
    Bytes public_key;
    crypto::SchemeId scheme = crypto::SchemeId::ClassicalSchnorr;
    Tick tick = 0;
};

/// The central bank register: mints tokens, validates transfers, signs
/// receipts with a many-time PQ_MSS key and enforces token versions.
///
/// Every mutating operation either succeeds completely or throws without
/// touching state. Token ids are drawn from the register's own Drbg and only
/// on success.
class Register {
public:
    Register(crypto::Drbg rng, RegisterConfig config = {});
    // Uses an existing PQ_MSS key; tests share one tree across many registers.
    Register(crypto::KeyPair receipt_key, crypto::Drbg rng, RegisterConfig config = {});

    Register(Register&&) noexcept = default;
    Register& operator=(Register&&) noexcept = default;

    Register clone() const;

    // Rebuilds state from an event log; the key's leaf counter must already
    // reflect the signatures recorded there.
    static Register replay(crypto::KeyPair receipt_key, std::span<const Event> events, crypto::Drbg rng,
                           RegisterConfig config = {});

    const Bytes& public_key() const { return key_.public_key; }
    const crypto::KeyPair& receipt_key() const { return key_; }
    const RegisterConfig& config() const { return config_; }
    std::uint64_t signatures_remaining() const { return key_.signatures_remaining(); }
    const crypto::Drbg& id_stream() const { return rng_; }

    void set_migration(Tick v2_activation, Tick soft_deadline, Tick hard_deadline, bool downgrade_allowed);
    const std::optional<MigrationSchedule>& migration() const { return migration_; }
    VersionSet supported_versions(Tick t) const;
    bool version_supported(Version v, Tick t) const;

    void advance_clock(Tick now);
    Tick clock() const { return clock_; }

    Token mint(Value value, const Address& owner, Version version);

    // Throws the first failure validate_transfer would raise, without changing state.
    void check_transfer(const TransferRequest& request, Tick now) const;
    Receipt validate_transfer(const TransferRequest& request, Tick now);

    // Unsigned 1-in/1-out request the owner signs before calling convert_version.
    TransferRequest conversion_request(const TokenId& token_id, Version new_version,
                                       const Address& new_owner) const;
    Token convert_version(const TokenId& token_id, const Bytes& owner_public_key, const crypto::Signature& signature,
                          Version new_version, const Address& new_owner, Tick now);

    Value stranded_value(Tick now) const;

    const Token* find(const TokenId& id) const;
    bool is_spent(const TokenId& id) const { return spent_.count(id) != 0; }
    const std::map<TokenId, Token>& live() const { return live_; }
    const std::set<TokenId>& spent() const { return spent_; }

    Value minted_value() const { return minted_; }
    Value live_value() const;
    Value live_value(Version version) const;

    const std::vector<RevealEntry>& reveal_log() const { return reveal_log_; }
    const std::vector<Event>& events() const { return events_; }
    const std::optional<Receipt>& last_receipt() const { return last_receipt_; }
    std::uint64_t premature_conversions() const { return premature_conversions_; }

    // Canonical serialization of the full state, for byte-level comparisons.
    Bytes snapshot() const;

private:
    struct Validated {
        Value in_value = 0;
        Version max_in_version = kClassicalVersion;
    };

    Validated validate(const TransferRequest& request, Tick now) const;
    Receipt commit(const TransferRequest& request, Tick now, EventKind kind);
    Token make_token(Value value, const Address& owner, Version version);
    TokenId fresh_id();

    crypto::KeyPair key_;
    crypto::Drbg rng_;
    RegisterConfig config_;
    std::map<TokenId, Token> live_;
    std::set<TokenId> spent_;
    std::optional<MigrationSchedule> migration_;
    Tick clock_ = 0;
    Value minted_ = 0;
    std::vector<RevealEntry> reveal_log_;
    std::vector<Event> events_;
    std::optional<Receipt> last_receipt_;
    std::uint64_t premature_conversions_ = 0;
};

}  // namespace pqcbdc::ledger
