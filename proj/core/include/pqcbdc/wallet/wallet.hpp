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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/signature.hpp"
#include "pqcbdc/error.hpp"
#include "pqcbdc/ledger/register.hpp"
#include "pqcbdc/pki/pki.hpp"

namespace pqcbdc::wallet {

using ledger::Address;
using ledger::Tick;
using ledger::Token;
using ledger::TokenId;
using ledger::Value;
using ledger::Version;
using ledger::VersionSet;
using WalletId = Id16;

enum class Kind { Software, Hardware };
enum class Generation { Old, New };
enum class RotationPolicy { FreshAddress, ReuseAddress };

std::string_view to_string(Kind k);
std::string_view to_string(Generation g);
std::string_view to_string(RotationPolicy p);
Kind parse_kind(std::string_view s);
Generation parse_generation(std::string_view s);
RotationPolicy parse_rotation(std::string_view s);

struct Profile {
    Kind kind = Kind::Software;
    Generation generation = Generation::New;
    bool online = true;

    VersionSet supported_versions() const;
};

enum class PaymentCase { C1a, C1b, C2a, C2b, C3a, C3b, C4a, C4b };

inline constexpr PaymentCase kAllCases[] = {PaymentCase::C1a, PaymentCase::C1b, PaymentCase::C2a, PaymentCase::C2b,
                                            PaymentCase::C3a, PaymentCase::C3b, PaymentCase::C4a, PaymentCase::C4b};

std::string_view to_string(PaymentCase c);
PaymentCase parse_case(std::string_view s);
// 1b and 2b need an old wallet holding a version-2 token.
constexpr bool reachable(PaymentCase c) { return c != PaymentCase::C1b && c != PaymentCase::C2b; }

// Throws std::logic_error for the unreachable combinations.
PaymentCase classify(Generation sender, Generation receiver, Version input_version);

struct DeferredRecord {
    ledger::TransferRequest request;
    Tick created_tick = 0;
    PaymentCase label = PaymentCase::C1a;
    WalletId receiver{};
    Value amount = 0;
};

struct WalletOptions {
    int mss_height = 8;  // identity key and the reused PQ address
    pki::Validity validity{0, 1'000'000};
    crypto::SchemeConfig scheme;
};

struct ConversionReport {
    std::size_t converted = 0;
    Value value = 0;
    std::vector<std::pair<TokenId, ErrorCode>> failures;
};

class Wallet {
public:
    static Wallet create(Profile profile, RotationPolicy rotation, const pki::Certificate& issuer,
                         pki::IssuerKeys issuer_keys, crypto::Drbg& rng, WalletOptions options = {});

    Wallet(Wallet&&) noexcept = default;
    Wallet& operator=(Wallet&&) noexcept = default;

    const WalletId& id() const { return id_; }
    const Profile& profile() const { return profile_; }
    RotationPolicy rotation() const { return rotation_; }
    const pki::Certificate& certificate() const { return cert_; }
    const crypto::KeyPair& identity_key() const { return identity_classical_; }
    const WalletOptions& options() const { return options_; }
    VersionSet supported_versions() const { return profile_.supported_versions(); }

    void set_online(bool online) { profile_.online = online; }
    bool online() const { return profile_.online; }

    // OLD -> NEW in place: new PQ identity key and a hybrid certificate; id unchanged.
    void adopt_new_generation(const pki::Certificate& issuer, pki::IssuerKeys issuer_keys);
    // Fresh identity keys and certificate; id unchanged.
    void rotate_identity(const pki::Certificate& issuer, pki::IssuerKeys issuer_keys);

    // Address to receive a token of `version`. FRESH_ADDRESS mints a new key
    // every call; REUSE_ADDRESS hands out the same key per version.
    Address receive_address(Version version);

    // Accepts a token addressed to one of our keys, given the receipt that created it.
    void receive(const Token& token, const ledger::Receipt& receipt, ByteView register_public_key);
    // Genesis tokens come straight from mint() and carry only the mint signature.
    void receive_minted(const Token& token, ByteView register_public_key);
    // Receives every output of `receipt` that is addressed to us; returns how many.
    std::size_t accept_outputs(const ledger::Register& reg, const ledger::Receipt& receipt);

    const std::map<TokenId, Token>& holdings() const { return holdings_; }
    const std::set<TokenId>& locked() const { return locked_; }
    std::vector<Token> spendable() const;
    Value balance() const;
    Value balance(Version version) const;
    Value spendable_balance() const;

    // Drops holdings the register no longer lists as live (stolen or spent elsewhere).
    std::size_t reconcile(const ledger::Register& reg);

    const crypto::KeyPair* key_for(const Address& address) const;
    crypto::KeyPair& signing_key(const Address& address);
    const std::map<Address, crypto::KeyPair>& keys() const { return keys_; }

    const std::vector<DeferredRecord>& deferred() const { return deferred_; }
    bool upgrade_prompted() const { return upgrade_prompted_; }

    std::string to_json() const;
    static Wallet from_json(std::string_view text);

private:
    Wallet() = default;

    void issue_certificate(const pki::Certificate& issuer, pki::IssuerKeys issuer_keys);
    Address add_key(crypto::KeyPair key);

    friend struct PaymentAccess;

    WalletId id_{};
    Profile profile_;
    RotationPolicy rotation_ = RotationPolicy::FreshAddress;
    WalletOptions options_;
    crypto::Drbg rng_{crypto::Seed{}};
    pki::Certificate cert_;
    crypto::KeyPair identity_classical_;
    std::optional<crypto::KeyPair> identity_pq_;
    std::map<Address, crypto::KeyPair> keys_;
    std::optional<Address> reuse_v1_;
    std::optional<Address> reuse_v2_;
    std::map<TokenId, Token> holdings_;
    std::set<TokenId> locked_;
    std::vector<DeferredRecord> deferred_;
    bool upgrade_prompted_ = false;
};

}  // namespace pqcbdc::wallet
