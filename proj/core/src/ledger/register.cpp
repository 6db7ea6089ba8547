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

#include "pqcbdc/ledger/register.hpp"

#include <limits>

#include "pqcbdc/error.hpp"

namespace pqcbdc::ledger {

using crypto::SchemeId;

namespace {

crypto::KeyPair make_receipt_key(crypto::Drbg& rng, const RegisterConfig& config) {
    auto scheme = config.scheme;
    scheme.mss_height = config.receipt_tree_height;
    return crypto::keygen(SchemeId::PqMss, rng, scheme);
}

void write_token(ByteWriter& w, const Token& t) {
    w.raw(t.id).u8(static_cast<std::uint8_t>(t.version)).i64(t.value).raw(t.owner).var(t.mint_sig.encode());
}

}  // namespace

Register::Register(crypto::Drbg rng, RegisterConfig config)
    : key_(make_receipt_key(rng, config)), rng_(rng), config_(config) {}

Register::Register(crypto::KeyPair receipt_key, crypto::Drbg rng, RegisterConfig config)
    : key_(std::move(receipt_key)), rng_(rng), config_(config) {
    if (key_.scheme != SchemeId::PqMss || !key_.ots_state || !key_.tree) {
        throw Error(ErrorCode::UnsupportedScheme, "register receipts need a PQ_MSS key");
    }
}

Register Register::clone() const {
    Register r(key_.duplicate(), rng_, config_);
    r.live_ = live_;
    r.spent_ = spent_;
    r.migration_ = migration_;
    r.clock_ = clock_;
    r.minted_ = minted_;
    r.reveal_log_ = reveal_log_;
    r.events_ = events_;
    r.last_receipt_ = last_receipt_;
    r.premature_conversions_ = premature_conversions_;
    return r;
}

Register Register::replay(crypto::KeyPair receipt_key, std::span<const Event> events, crypto::Drbg rng,
                          RegisterConfig config) {
    Register r(std::move(receipt_key), rng, config);
    for (const auto& e : events) {
        if (e.tick < r.clock_) throw Error(ErrorCode::ClockRegression, "event log goes back in time");
        r.clock_ = e.tick;
        if (e.kind == EventKind::Migration) {
            r.migration_ = e.migration;
        } else {
            for (const auto& id : e.inputs) {
                if (r.spent_.count(id)) throw Error(ErrorCode::DoubleSpend, "event log spends " + to_hex(id) + " twice");
                if (!r.live_.erase(id)) throw Error(ErrorCode::UnknownToken, "event log spends unknown " + to_hex(id));
                r.spent_.insert(id);
            }
            for (const auto& t : e.outputs) {
                r.live_[t.id] = t;
                if (e.kind == EventKind::Mint) r.minted_ += t.value;
            }
        }
        r.events_.push_back(e);
    }
    return r;
}

void Register::set_migration(Tick v2_activation, Tick soft_deadline, Tick hard_deadline, bool downgrade_allowed) {
    if (!(v2_activation <= soft_deadline && soft_deadline <= hard_deadline)) {
        throw Error(ErrorCode::DeadlineOrder, "need v2_activation <= soft_deadline <= hard_deadline");
    }
    migration_ = MigrationSchedule{v2_activation, soft_deadline, hard_deadline, downgrade_allowed};
    Event e;
    e.kind = EventKind::Migration;
    e.tick = clock_;
    e.migration = *migration_;
    events_.push_back(std::move(e));
}

VersionSet Register::supported_versions(Tick t) const {
    if (!migration_ || t < migration_->v2_activation) return {kClassicalVersion};
    if (t <= migration_->hard_deadline) return {kClassicalVersion, kPqVersion};
    return {kPqVersion};
}

bool Register::version_supported(Version v, Tick t) const { return supported_versions(t).count(v) != 0; }

void Register::advance_clock(Tick now) {
    if (now < clock_) throw Error(ErrorCode::ClockRegression);
    clock_ = now;
}

TokenId Register::fresh_id() {
    for (;;) {
        auto id = rng_.array<16>();
        if (!live_.count(id) && !spent_.count(id)) return id;
    }
}

Token Register::make_token(Value value, const Address& owner, Version version) {
    Token t;
    t.id = fresh_id();
    t.version = version;
    t.value = value;
    t.owner = owner;
    t.mint_sig = crypto::sign(key_, t.body_digest(), config_.scheme);
    return t;
}

Token Register::mint(Value value, const Address& owner, Version version) {
    if (value < 1) throw Error(ErrorCode::InvalidValue, "minted value must be at least 1");
    if (!version_supported(version, clock_)) {
        throw Error(ErrorCode::UnsupportedVersion, "version " + std::to_string(version) + " not accepted now");
    }
    if (key_.signatures_remaining() < 1) throw Error(ErrorCode::RegisterKeyExhausted);
    auto token = make_token(value, owner, version);
    live_[token.id] = token;
    minted_ += value;
    Event e;
    e.kind = EventKind::Mint;
    e.tick = clock_;
    e.outputs.push_back(token);
    events_.push_back(std::move(e));
    return token;
}

Register::Validated Register::validate(const TransferRequest& request, Tick now) const {
    if (now < clock_) throw Error(ErrorCode::ClockRegression);
    if (request.inputs.empty() || request.outputs.empty()) {
        throw Error(ErrorCode::MalformedRequest, "a transfer needs inputs and outputs");
    }
    if (request.inputs.size() > 0xFFFF || request.outputs.size() > 0xFFFF) {
        throw Error(ErrorCode::MalformedRequest, "too many inputs or outputs");
    }
    std::set<TokenId> seen;
    for (const auto& in : request.inputs) {
        if (!seen.insert(in.token_id).second) throw Error(ErrorCode::MalformedRequest, "input listed twice");
    }
    for (const auto& out : request.outputs) {
        if (out.value < 1) throw Error(ErrorCode::InvalidValue, "output value must be at least 1");
    }

    const auto digest = request.digest();
    Validated v;
    for (const auto& in : request.inputs) {
        if (spent_.count(in.token_id)) throw Error(ErrorCode::DoubleSpend, to_hex(in.token_id));
        auto it = live_.find(in.token_id);
        if (it == live_.end()) throw Error(ErrorCode::UnknownToken, to_hex(in.token_id));
        const auto& token = it->second;
        if (address_of(in.owner_public_key) != token.owner) throw Error(ErrorCode::OwnerMismatch, to_hex(in.token_id));
        if (!version_supported(token.version, now)) throw Error(ErrorCode::TokenVersionExpired, to_hex(in.token_id));
        bool ok = false;
        if (scheme_fits_version(in.signature.scheme, token.version)) {
            try {
                ok = crypto::verify(in.owner_public_key, in.signature.scheme, digest, in.signature, config_.scheme);
            } catch (const Error&) {
                ok = false;
            }
        }
        if (!ok) throw Error(ErrorCode::BadSignature, to_hex(in.token_id));
        if (v.in_value > std::numeric_limits<Value>::max() - token.value) {
            throw Error(ErrorCode::InvalidValue, "input value overflow");
        }
        v.in_value += token.value;
        v.max_in_version = std::max(v.max_in_version, token.version);
    }

    if (request.output_value() != v.in_value) throw Error(ErrorCode::ValueMismatch);

    const bool downgrade_ok = migration_ && migration_->downgrade_allowed;
    for (const auto& out : request.outputs) {
        if (!version_supported(out.version, now)) {
            throw Error(ErrorCode::UnsupportedVersion, "output version " + std::to_string(out.version));
        }
        if (out.version < v.max_in_version && !downgrade_ok) throw Error(ErrorCode::VersionDowngradeForbidden);
    }

    if (key_.signatures_remaining() < 1 + request.outputs.size()) throw Error(ErrorCode::RegisterKeyExhausted);
    return v;
}

void Register::check_transfer(const TransferRequest& request, Tick now) const { validate(request, now); }

Receipt Register::commit(const TransferRequest& request, Tick now, EventKind kind) {
    clock_ = now;
    Event e;
    e.kind = kind;
    e.tick = now;
    e.transfer_digest = request.digest();
    for (const auto& in : request.inputs) {
        live_.erase(in.token_id);
        spent_.insert(in.token_id);
        reveal_log_.push_back({in.owner_public_key, in.signature.scheme, now});
        e.inputs.push_back(in.token_id);
    }
    Receipt receipt;
    receipt.transfer_digest = e.transfer_digest;
    receipt.tick = now;
    for (const auto& out : request.outputs) {
        auto token = make_token(out.value, out.owner, out.version);
        live_[token.id] = token;
        receipt.new_token_ids.push_back(token.id);
        e.outputs.push_back(std::move(token));
    }
    receipt.register_sig = crypto::sign(key_, receipt.signed_digest(), config_.scheme);
    events_.push_back(std::move(e));
    last_receipt_ = receipt;
    return receipt;
}

Receipt Register::validate_transfer(const TransferRequest& request, Tick now) {
    validate(request, now);
    return commit(request, now, EventKind::Transfer);
}

TransferRequest Register::conversion_request(const TokenId& token_id, Version new_version,
                                             const Address& new_owner) const {
    if (spent_.count(token_id)) throw Error(ErrorCode::DoubleSpend, to_hex(token_id));
    const auto* token = find(token_id);
    if (!token) throw Error(ErrorCode::UnknownToken, to_hex(token_id));
    TransferRequest req;
    req.inputs.push_back({token_id, {}, {}});
    req.outputs.push_back({token->value, new_owner, new_version});
    return req;
}

Token Register::convert_version(const TokenId& token_id, const Bytes& owner_public_key,
                                const crypto::Signature& signature, Version new_version, const Address& new_owner,
                                Tick now) {
    auto req = conversion_request(token_id, new_version, new_owner);
    req.inputs[0].owner_public_key = owner_public_key;
    req.inputs[0].signature = signature;
    const auto old_version = live_.at(token_id).version;
    validate(req, now);
    if (new_version > old_version && migration_ && now < migration_->soft_deadline) ++premature_conversions_;
    auto receipt = commit(req, now, EventKind::Convert);
    return live_.at(receipt.new_token_ids.front());
}

Value Register::stranded_value(Tick now) const {
    if (!migration_ || now <= migration_->hard_deadline) throw Error(ErrorCode::BeforeDeadline);
    return live_value(kClassicalVersion);
}

const Token* Register::find(const TokenId& id) const {
    auto it = live_.find(id);
    return it == live_.end() ? nullptr : &it->second;
}

Value Register::live_value() const {
    Value total = 0;
    for (const auto& [id, t] : live_) total += t.value;
    return total;
}

Value Register::live_value(Version version) const {
    Value total = 0;
    for (const auto& [id, t] : live_) {
        if (t.version == version) total += t.value;
    }
    return total;
}

Bytes Register::snapshot() const {
    ByteWriter w;
    w.i64(clock_).i64(minted_).u64(premature_conversions_);
    w.u8(migration_ ? 1 : 0);
    if (migration_) {
        w.i64(migration_->v2_activation).i64(migration_->soft_deadline).i64(migration_->hard_deadline);
        w.u8(migration_->downgrade_allowed ? 1 : 0);
    }
    w.u64(live_.size());
    for (const auto& [id, t] : live_) write_token(w, t);
    w.u64(spent_.size());
    for (const auto& id : spent_) w.raw(id);
    w.u64(reveal_log_.size());
    for (const auto& r : reveal_log_) w.var(r.public_key).u8(static_cast<std::uint8_t>(r.scheme)).i64(r.tick);
    w.u64(events_.size());
    for (const auto& e : events_) w.str(to_json_line(e));
    w.u8(last_receipt_ ? 1 : 0);
    if (last_receipt_) w.var(last_receipt_->encode());
    w.u32(key_.ots_state->next_leaf).u64(key_.ots_state->used_leaves.size());
    w.raw(rng_.seed()).u64(rng_.counter());
    return w.take();
}

}  // namespace pqcbdc::ledger
