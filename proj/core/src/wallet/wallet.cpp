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

#include "pqcbdc/wallet/wallet.hpp"

#include <algorithm>
#include <stdexcept>

#include "json_util.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::wallet {

using crypto::SchemeId;
using detail::json;

std::string_view to_string(Kind k) { return k == Kind::Software ? "software" : "hardware"; }
std::string_view to_string(Generation g) { return g == Generation::Old ? "old" : "new"; }
std::string_view to_string(RotationPolicy p) {
    return p == RotationPolicy::FreshAddress ? "fresh-address" : "reuse-address";
}

Kind parse_kind(std::string_view s) {
    if (s == "software") return Kind::Software;
    if (s == "hardware") return Kind::Hardware;
    throw Error(ErrorCode::MalformedEncoding, "unknown wallet kind '" + std::string(s) + "'");
}

Generation parse_generation(std::string_view s) {
    if (s == "old") return Generation::Old;
    if (s == "new") return Generation::New;
    throw Error(ErrorCode::MalformedEncoding, "unknown generation '" + std::string(s) + "'");
}

RotationPolicy parse_rotation(std::string_view s) {
    if (s == "fresh-address") return RotationPolicy::FreshAddress;
    if (s == "reuse-address") return RotationPolicy::ReuseAddress;
    throw Error(ErrorCode::MalformedEncoding, "unknown rotation policy '" + std::string(s) + "'");
}

VersionSet Profile::supported_versions() const {
    if (generation == Generation::Old) return {ledger::kClassicalVersion};
    return {ledger::kClassicalVersion, ledger::kPqVersion};
}

std::string_view to_string(PaymentCase c) {
    static constexpr std::string_view names[] = {"1a", "1b", "2a", "2b", "3a", "3b", "4a", "4b"};
    return names[static_cast<int>(c)];
}

PaymentCase parse_case(std::string_view s) {
    for (auto c : kAllCases) {
        if (to_string(c) == s) return c;
    }
    throw Error(ErrorCode::MalformedEncoding, "unknown payment case '" + std::string(s) + "'");
}

PaymentCase classify(Generation sender, Generation receiver, Version input_version) {
    int row = (sender == Generation::Old ? 0 : 2) + (receiver == Generation::Old ? 0 : 1);
    bool pq = input_version == ledger::kPqVersion;
    auto c = static_cast<PaymentCase>(row * 2 + (pq ? 1 : 0));
    if (!reachable(c)) throw std::logic_error("old wallet cannot spend a version-2 token");
    return c;
}

namespace {

crypto::SchemeConfig mss_config(const WalletOptions& options) {
    auto cfg = options.scheme;
    cfg.mss_height = options.mss_height;
    return cfg;
}

}  // namespace

Wallet Wallet::create(Profile profile, RotationPolicy rotation, const pki::Certificate& issuer,
                      pki::IssuerKeys issuer_keys, crypto::Drbg& rng, WalletOptions options) {
    Wallet w;
    // Drawn before, and independently of, any key material.
    w.id_ = rng.array<16>();
    w.profile_ = profile;
    w.rotation_ = rotation;
    w.options_ = options;
    w.rng_ = rng.fork("wallet");
    w.identity_classical_ = crypto::keygen(SchemeId::ClassicalSchnorr, w.rng_, options.scheme);
    if (profile.generation == Generation::New) {
        w.identity_pq_ = crypto::keygen(SchemeId::PqMss, w.rng_, mss_config(options));
    }
    w.issue_certificate(issuer, issuer_keys);
    return w;
}

void Wallet::issue_certificate(const pki::Certificate& issuer, pki::IssuerKeys issuer_keys) {
    pki::SubjectKeys subject;
    subject.classical = identity_classical_.public_key;
    if (identity_pq_) subject.pq = pki::PqExtension{SchemeId::PqMss, identity_pq_->public_key};
    cert_ = pki::issue(issuer, issuer_keys, "wallet-" + to_hex(id_), subject, pki::Role::Wallet, options_.validity,
                       rng_, options_.scheme);
}

void Wallet::adopt_new_generation(const pki::Certificate& issuer, pki::IssuerKeys issuer_keys) {
    if (profile_.generation == Generation::New) return;
    identity_pq_ = crypto::keygen(SchemeId::PqMss, rng_, mss_config(options_));
    profile_.generation = Generation::New;
    issue_certificate(issuer, issuer_keys);
}

void Wallet::rotate_identity(const pki::Certificate& issuer, pki::IssuerKeys issuer_keys) {
    identity_classical_ = crypto::keygen(SchemeId::ClassicalSchnorr, rng_, options_.scheme);
    if (identity_pq_) identity_pq_ = crypto::keygen(SchemeId::PqMss, rng_, mss_config(options_));
    issue_certificate(issuer, issuer_keys);
}

Address Wallet::add_key(crypto::KeyPair key) {
    auto addr = ledger::address_of(key.public_key);
    keys_.insert_or_assign(addr, std::move(key));
    return addr;
}

Address Wallet::receive_address(Version version) {
    if (!supported_versions().count(version)) {
        throw Error(ErrorCode::UnsupportedVersion, "wallet does not handle version " + std::to_string(version));
    }
    const bool reuse = rotation_ == RotationPolicy::ReuseAddress;
    if (version == ledger::kClassicalVersion) {
        if (!reuse) return add_key(crypto::keygen(SchemeId::ClassicalSchnorr, rng_, options_.scheme));
        if (!reuse_v1_) reuse_v1_ = add_key(crypto::keygen(SchemeId::ClassicalSchnorr, rng_, options_.scheme));
        return *reuse_v1_;
    }
    if (!reuse) return add_key(crypto::keygen(SchemeId::PqWots, rng_, options_.scheme));
    // A reused MSS address is rotated once it could not sign for everything parked on it.
    if (reuse_v2_) {
        auto parked = std::count_if(holdings_.begin(), holdings_.end(),
                                    [&](const auto& kv) { return kv.second.owner == *reuse_v2_; });
        if (keys_.at(*reuse_v2_).signatures_remaining() > static_cast<std::uint64_t>(parked)) return *reuse_v2_;
    }
    reuse_v2_ = add_key(crypto::keygen(SchemeId::PqMss, rng_, mss_config(options_)));
    return *reuse_v2_;
}

void Wallet::receive(const Token& token, const ledger::Receipt& receipt, ByteView register_public_key) {
    if (!keys_.count(token.owner)) throw Error(ErrorCode::UnknownAddress, to_hex(token.owner));
    // Auto-detection: the version field alone decides.
    if (!supported_versions().count(token.version)) {
        throw Error(ErrorCode::UnsupportedVersion, "token version " + std::to_string(token.version));
    }
    const auto& ids = receipt.new_token_ids;
    if (std::find(ids.begin(), ids.end(), token.id) == ids.end() ||
        !ledger::verify_receipt(receipt, register_public_key, options_.scheme) ||
        !ledger::verify_token(token, register_public_key, options_.scheme)) {
        throw Error(ErrorCode::BadReceipt, to_hex(token.id));
    }
    holdings_[token.id] = token;
    if (token.version == ledger::kPqVersion && profile_.kind == Kind::Hardware) upgrade_prompted_ = true;
}

void Wallet::receive_minted(const Token& token, ByteView register_public_key) {
    if (!keys_.count(token.owner)) throw Error(ErrorCode::UnknownAddress, to_hex(token.owner));
    if (!supported_versions().count(token.version)) {
        throw Error(ErrorCode::UnsupportedVersion, "token version " + std::to_string(token.version));
    }
    if (!ledger::verify_token(token, register_public_key, options_.scheme)) {
        throw Error(ErrorCode::BadReceipt, to_hex(token.id));
    }
    holdings_[token.id] = token;
}

std::size_t Wallet::accept_outputs(const ledger::Register& reg, const ledger::Receipt& receipt) {
    std::size_t n = 0;
    for (const auto& id : receipt.new_token_ids) {
        const auto* token = reg.find(id);
        if (token && keys_.count(token->owner)) {
            receive(*token, receipt, reg.public_key());
            ++n;
        }
    }
    return n;
}

std::vector<Token> Wallet::spendable() const {
    std::vector<Token> out;
    for (const auto& [id, t] : holdings_) {
        if (!locked_.count(id)) out.push_back(t);
    }
    return out;
}

Value Wallet::balance() const {
    Value total = 0;
    for (const auto& [id, t] : holdings_) total += t.value;
    return total;
}

Value Wallet::balance(Version version) const {
    Value total = 0;
    for (const auto& [id, t] : holdings_) {
        if (t.version == version) total += t.value;
    }
    return total;
}

Value Wallet::spendable_balance() const {
    Value total = 0;
    for (const auto& t : spendable()) total += t.value;
    return total;
}

std::size_t Wallet::reconcile(const ledger::Register& reg) {
    std::size_t dropped = 0;
    for (auto it = holdings_.begin(); it != holdings_.end();) {
        if (reg.find(it->first)) {
            ++it;
            continue;
        }
        locked_.erase(it->first);
        it = holdings_.erase(it);
        ++dropped;
    }
    return dropped;
}

const crypto::KeyPair* Wallet::key_for(const Address& address) const {
    auto it = keys_.find(address);
    return it == keys_.end() ? nullptr : &it->second;
}

crypto::KeyPair& Wallet::signing_key(const Address& address) {
    auto it = keys_.find(address);
    if (it == keys_.end()) throw Error(ErrorCode::UnknownAddress, to_hex(address));
    return it->second;
}

std::string Wallet::to_json() const {
    json j;
    j["wallet_id"] = to_hex(id_);
    j["kind"] = std::string(to_string(profile_.kind));
    j["generation"] = std::string(to_string(profile_.generation));
    j["online"] = profile_.online;
    j["rotation_policy"] = std::string(to_string(rotation_));
    j["mss_height"] = options_.mss_height;
    j["validity"] = {options_.validity.not_before, options_.validity.not_after};
    j["rng"] = {{"seed", to_hex(rng_.seed())}, {"counter", rng_.counter()}};
    j["certificate"] = to_hex(cert_.encode());
    j["identity_classical"] = detail::key_to_value(identity_classical_);
    j["identity_pq"] = identity_pq_ ? detail::key_to_value(*identity_pq_) : json(nullptr);
    auto keys = json::array();
    for (const auto& [addr, key] : keys_) keys.push_back(detail::key_to_value(key));
    j["keys"] = std::move(keys);
    j["reuse_v1"] = reuse_v1_ ? json(to_hex(*reuse_v1_)) : json(nullptr);
    j["reuse_v2"] = reuse_v2_ ? json(to_hex(*reuse_v2_)) : json(nullptr);
    auto holdings = json::array();
    for (const auto& [id, t] : holdings_) holdings.push_back(detail::token_to_value(t));
    j["holdings"] = std::move(holdings);
    auto locked = json::array();
    for (const auto& id : locked_) locked.push_back(to_hex(id));
    j["locked"] = std::move(locked);
    auto deferred = json::array();
    for (const auto& d : deferred_) {
        deferred.push_back({{"request", to_hex(d.request.encode())},
                            {"created_tick", d.created_tick},
                            {"case", std::string(to_string(d.label))},
                            {"receiver", to_hex(d.receiver)},
                            {"amount", d.amount}});
    }
    j["deferred"] = std::move(deferred);
    j["upgrade_prompted"] = upgrade_prompted_;
    return j.dump(2);
}

Wallet Wallet::from_json(std::string_view text) {
    try {
        auto j = json::parse(text);
        using detail::require;
        Wallet w;
        w.id_ = detail::fixed_field<16>(j, "wallet_id");
        w.profile_.kind = parse_kind(require(j, "kind").get<std::string>());
        w.profile_.generation = parse_generation(require(j, "generation").get<std::string>());
        w.profile_.online = require(j, "online").get<bool>();
        w.rotation_ = parse_rotation(require(j, "rotation_policy").get<std::string>());
        w.options_.mss_height = require(j, "mss_height").get<int>();
        const auto& validity = require(j, "validity");
        w.options_.validity = {validity.at(0).get<Tick>(), validity.at(1).get<Tick>()};
        const auto& rng = require(j, "rng");
        w.rng_ = crypto::Drbg(detail::fixed_field<32>(rng, "seed"), require(rng, "counter").get<std::uint64_t>());
        w.cert_ = pki::Certificate::decode(detail::hex_field(j, "certificate"));
        w.identity_classical_ = detail::key_from_value(require(j, "identity_classical"));
        if (!require(j, "identity_pq").is_null()) w.identity_pq_ = detail::key_from_value(j.at("identity_pq"));
        for (const auto& k : require(j, "keys")) w.add_key(detail::key_from_value(k));
        if (!require(j, "reuse_v1").is_null()) w.reuse_v1_ = fixed_from_hex<32>(j.at("reuse_v1").get<std::string>());
        if (!require(j, "reuse_v2").is_null()) w.reuse_v2_ = fixed_from_hex<32>(j.at("reuse_v2").get<std::string>());
        for (const auto& t : require(j, "holdings")) {
            auto token = detail::token_from_value(t);
            w.holdings_[token.id] = token;
        }
        for (const auto& id : require(j, "locked")) w.locked_.insert(fixed_from_hex<16>(id.get<std::string>()));
        for (const auto& d : require(j, "deferred")) {
            DeferredRecord rec;
            rec.request = ledger::TransferRequest::decode(detail::hex_field(d, "request"));
            rec.created_tick = require(d, "created_tick").get<Tick>();
            rec.label = parse_case(require(d, "case").get<std::string>());
            rec.receiver = detail::fixed_field<16>(d, "receiver");
            rec.amount = require(d, "amount").get<Value>();
            w.deferred_.push_back(std::move(rec));
        }
        w.upgrade_prompted_ = require(j, "upgrade_prompted").get<bool>();
        return w;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::MalformedEncoding, ex.what());
    }
}

}  // namespace pqcbdc::wallet
