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

#include "pqcbdc/wallet/payment.hpp"

#include <algorithm>
#include <map>

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/crypto/schnorr.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::wallet {

using crypto::SchemeId;

struct PaymentAccess {
    static std::map<TokenId, Token>& holdings(Wallet& w) { return w.holdings_; }
    static std::set<TokenId>& locked(Wallet& w) { return w.locked_; }
    static std::vector<DeferredRecord>& deferred(Wallet& w) { return w.deferred_; }
};

Digest NegotiationOffer::digest() const {
    ByteWriter w;
    w.raw(sender).u8(static_cast<std::uint8_t>(versions.size()));
    for (auto v : versions) w.u8(static_cast<std::uint8_t>(v));
    return crypto::hash(w.bytes(), "wid");
}

NegotiationOffer make_offer(const Wallet& sender, const crypto::SchemeConfig& config) {
    NegotiationOffer offer;
    offer.versions = sender.supported_versions();
    offer.sender = sender.id();
    offer.sender_cert = sender.certificate();
    offer.signature = {SchemeId::ClassicalSchnorr,
                       crypto::schnorr::sign(sender.identity_key().private_key, offer.digest(), config.group_params()),
                       std::nullopt};
    return offer;
}

Version select_version(const NegotiationOffer& offer, const VersionSet& receiver_supported,
                       const crypto::SchemeConfig& config) {
    const auto& pub = offer.sender_cert.classical_pub;
    bool ok = false;
    if (pub) {
        try {
            ok = crypto::verify(*pub, SchemeId::ClassicalSchnorr, offer.digest(), offer.signature, config);
        } catch (const Error&) {
            ok = false;
        }
    }
    if (!ok) throw Error(ErrorCode::BadSignature, "negotiation offer");
    for (auto it = offer.versions.rbegin(); it != offer.versions.rend(); ++it) {
        if (receiver_supported.count(*it)) return *it;
    }
    throw Error(ErrorCode::NoCommonVersion);
}

Version negotiate(const Wallet& sender, const Wallet& receiver, const crypto::SchemeConfig& config) {
    return select_version(make_offer(sender, config), receiver.supported_versions(), config);
}

std::optional<std::vector<Token>> select_tokens(std::vector<Token> pool, Value amount) {
    std::sort(pool.begin(), pool.end(), [](const Token& a, const Token& b) {
        return a.value != b.value ? a.value > b.value : a.id < b.id;
    });
    std::vector<Token> picked;
    Value total = 0;
    for (auto& t : pool) {
        if (total >= amount) break;
        total += t.value;
        picked.push_back(std::move(t));
    }
    if (total < amount) return std::nullopt;
    return picked;
}

namespace {

bool downgrade_allowed(const ledger::Register& reg) {
    return reg.migration() && reg.migration()->downgrade_allowed;
}

std::vector<Token> choose_inputs(const Wallet& sender, Value amount, Version negotiated,
                                 const ledger::Register& reg, Tick now) {
    std::map<Version, std::vector<Token>, std::greater<>> pools;
    for (auto& t : sender.spendable()) {
        if (reg.version_supported(t.version, now)) pools[t.version].push_back(std::move(t));
    }
    if (auto it = pools.find(negotiated); it != pools.end()) {
        if (auto picked = select_tokens(it->second, amount)) return *picked;
    }
    for (const auto& [version, pool] : pools) {
        if (version == negotiated) continue;
        if (auto picked = select_tokens(pool, amount)) return *picked;
    }
    std::vector<Token> all;
    for (const auto& [version, pool] : pools) all.insert(all.end(), pool.begin(), pool.end());
    if (auto picked = select_tokens(all, amount)) return *picked;
    throw Error(ErrorCode::InsufficientFunds);
}

void release_inputs(Wallet& sender, const std::vector<TokenId>& inputs, const ledger::Register& reg) {
    for (const auto& id : inputs) PaymentAccess::locked(sender).erase(id);
    sender.reconcile(reg);
}

void settle_inputs(Wallet& sender, const std::vector<TokenId>& inputs) {
    for (const auto& id : inputs) {
        PaymentAccess::locked(sender).erase(id);
        PaymentAccess::holdings(sender).erase(id);
    }
}

}  // namespace

PreparedPayment prepare_payment(Wallet& sender, Wallet& receiver, Value amount, const ledger::Register& reg,
                                Tick now) {
    if (amount < 1) throw Error(ErrorCode::InvalidValue, "payment amount must be at least 1");
    if (sender.id() == receiver.id()) throw Error(ErrorCode::MalformedRequest, "sender and receiver coincide");
    const auto& config = sender.options().scheme;

    PreparedPayment p;
    p.sender = sender.id();
    p.receiver = receiver.id();
    p.amount = amount;
    p.negotiated = negotiate(sender, receiver, config);

    auto inputs = choose_inputs(sender, amount, p.negotiated, reg, now);
    Version vin = ledger::kClassicalVersion;
    Value total = 0;
    for (const auto& t : inputs) {
        vin = std::max(vin, t.version);
        total += t.value;
    }
    p.output_version = receiver.supported_versions().count(vin) ? vin : p.negotiated;
    if (p.output_version < vin && !downgrade_allowed(reg)) throw Error(ErrorCode::DowngradeRequired);
    if (!reg.version_supported(p.output_version, now)) {
        throw Error(ErrorCode::UnsupportedVersion, "register no longer accepts version " +
                                                       std::to_string(p.output_version));
    }
    p.label = classify(sender.profile().generation, receiver.profile().generation, vin);

    // Every key must be able to sign before anything is signed.
    std::map<Address, std::uint64_t> uses;
    for (const auto& t : inputs) ++uses[t.owner];
    for (const auto& [addr, n] : uses) {
        const auto& key = sender.signing_key(addr);
        if (key.signatures_remaining() < n) {
            throw Error(key.scheme == SchemeId::PqWots ? ErrorCode::OtsReuse : ErrorCode::MssExhausted,
                        "key for " + to_hex(addr));
        }
    }

    p.request.outputs.push_back({amount, receiver.receive_address(p.output_version), p.output_version});
    if (total > amount) p.request.outputs.push_back({total - amount, sender.receive_address(vin), vin});
    for (const auto& t : inputs) {
        p.request.inputs.push_back({t.id, sender.signing_key(t.owner).public_key, {}});
        p.inputs.push_back(t.id);
    }
    const auto digest = p.request.digest();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        p.request.inputs[i].signature = crypto::sign(sender.signing_key(inputs[i].owner), digest, config);
    }
    for (const auto& id : p.inputs) PaymentAccess::locked(sender).insert(id);
    return p;
}

ledger::Receipt submit_payment(ledger::Register& reg, const PreparedPayment& payment, Tick now) {
    return reg.validate_transfer(payment.request, now);
}

void complete_payment(Wallet& sender, Wallet& receiver, const PreparedPayment& payment,
                      const ledger::Receipt& receipt, const ledger::Register& reg) {
    settle_inputs(sender, payment.inputs);
    sender.accept_outputs(reg, receipt);
    receiver.accept_outputs(reg, receipt);
}

void abort_payment(Wallet& sender, const PreparedPayment& payment, const ledger::Register& reg) {
    release_inputs(sender, payment.inputs, reg);
}

void defer_payment(Wallet& sender, const PreparedPayment& payment, Tick now) {
    PaymentAccess::deferred(sender).push_back(
        {payment.request, now, payment.label, payment.receiver, payment.amount});
}

TransferOutcome pay(Wallet& sender, Wallet& receiver, Value amount, ledger::Register& reg, Tick now) {
    auto p = prepare_payment(sender, receiver, amount, reg, now);
    TransferOutcome out{p.label, p.negotiated, p.output_version, std::nullopt, false};
    if (!sender.online()) {
        defer_payment(sender, p, now);
        out.deferred = true;
        return out;
    }
    try {
        out.receipt = submit_payment(reg, p, now);
    } catch (const Error&) {
        abort_payment(sender, p, reg);
        throw;
    }
    complete_payment(sender, receiver, p, *out.receipt, reg);
    return out;
}

std::vector<UploadResult> upload_deferred(Wallet& wallet, ledger::Register& reg, Tick now) {
    if (!wallet.online()) throw Error(ErrorCode::WalletOffline);
    auto records = std::move(PaymentAccess::deferred(wallet));
    PaymentAccess::deferred(wallet).clear();

    std::vector<UploadResult> results;
    results.reserve(records.size());
    for (auto& rec : records) {
        std::vector<TokenId> inputs;
        for (const auto& in : rec.request.inputs) inputs.push_back(in.token_id);
        UploadResult r{std::move(rec), std::nullopt, std::nullopt};
        try {
            r.receipt = reg.validate_transfer(r.record.request, now);
            settle_inputs(wallet, inputs);
            wallet.accept_outputs(reg, *r.receipt);
        } catch (const Error& e) {
            if (!r.receipt) release_inputs(wallet, inputs, reg);
            r.error = e.code();
        }
        results.push_back(std::move(r));
    }
    return results;
}

ConversionReport convert_all(Wallet& wallet, ledger::Register& reg, Tick now) {
    ConversionReport report;
    for (const auto& token : wallet.spendable()) {
        if (token.version != ledger::kClassicalVersion) continue;
        // Expired tokens cannot be converted any more; they are stranded.
        if (!reg.version_supported(token.version, now)) continue;
        try {
            auto addr = wallet.receive_address(ledger::kPqVersion);
            auto req = reg.conversion_request(token.id, ledger::kPqVersion, addr);
            auto& key = wallet.signing_key(token.owner);
            auto sig = crypto::sign(key, req.digest(), wallet.options().scheme);
            auto fresh = reg.convert_version(token.id, key.public_key, sig, ledger::kPqVersion, addr, now);
            PaymentAccess::holdings(wallet).erase(token.id);
            wallet.receive(fresh, *reg.last_receipt(), reg.public_key());
            ++report.converted;
            report.value += fresh.value;
        } catch (const Error& e) {
            report.failures.emplace_back(token.id, e.code());
        }
    }
    wallet.reconcile(reg);
    return report;
}

ConversionReport upgrade_holdings(Wallet& wallet, ledger::Register& reg, Tick now) {
    const auto& profile = wallet.profile();
    if (profile.generation != Generation::New || !reg.version_supported(ledger::kPqVersion, now)) return {};
    if (profile.kind == Kind::Software) {
        if (!reg.migration() || now < reg.migration()->soft_deadline) return {};
    } else if (!wallet.upgrade_prompted() || !wallet.online()) {
        return {};
    }
    return convert_all(wallet, reg, now);
}

}  // namespace pqcbdc::wallet
