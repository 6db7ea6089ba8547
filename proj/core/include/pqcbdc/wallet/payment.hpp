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

#include <optional>
#include <vector>

#include "pqcbdc/wallet/wallet.hpp"

namespace pqcbdc::wallet {

struct NegotiationOffer {
    VersionSet versions;
    WalletId sender{};
    pki::Certificate sender_cert;
    crypto::Signature signature;  // sender's classical identity key

    Digest digest() const;
};

NegotiationOffer make_offer(const Wallet& sender, const crypto::SchemeConfig& config = {});
// Receiver side: verifies the offer and picks max(offer ∩ supported).
Version select_version(const NegotiationOffer& offer, const VersionSet& receiver_supported,
                       const crypto::SchemeConfig& config = {});
Version negotiate(const Wallet& sender, const Wallet& receiver, const crypto::SchemeConfig& config = {});

struct PreparedPayment {
    ledger::TransferRequest request;
    PaymentCase label = PaymentCase::C1a;
    Version negotiated = ledger::kClassicalVersion;
    Version output_version = ledger::kClassicalVersion;
    WalletId sender{};
    WalletId receiver{};
    Value amount = 0;
    std::vector<TokenId> inputs;
};

// Greedy largest-first over one version pool, ties by token id ascending.
// Returns nothing when the pool cannot cover `amount`.
std::optional<std::vector<Token>> select_tokens(std::vector<Token> pool, Value amount);

// Negotiates, selects inputs, signs and locks them. Nothing is sent yet.
PreparedPayment prepare_payment(Wallet& sender, Wallet& receiver, Value amount, const ledger::Register& reg,
                                Tick now);
ledger::Receipt submit_payment(ledger::Register& reg, const PreparedPayment& payment, Tick now);
void complete_payment(Wallet& sender, Wallet& receiver, const PreparedPayment& payment,
                      const ledger::Receipt& receipt, const ledger::Register& reg);
// Releases the inputs; any that are gone from the register are dropped.
void abort_payment(Wallet& sender, const PreparedPayment& payment, const ledger::Register& reg);
// Offline hardware sender: the record waits for upload_deferred.
void defer_payment(Wallet& sender, const PreparedPayment& payment, Tick now);

struct TransferOutcome {
    PaymentCase label = PaymentCase::C1a;
    Version negotiated = ledger::kClassicalVersion;
    Version output_version = ledger::kClassicalVersion;
    std::optional<ledger::Receipt> receipt;
    bool deferred = false;
};

// Immediate settlement when the sender is online, deferral otherwise.
TransferOutcome pay(Wallet& sender, Wallet& receiver, Value amount, ledger::Register& reg, Tick now);

struct UploadResult {
    DeferredRecord record;
    std::optional<ledger::Receipt> receipt;
    std::optional<ErrorCode> error;
};

// Submits deferred records in order and clears the list. Per-record failures
// are collected, never thrown. Payees are credited by the caller.
std::vector<UploadResult> upload_deferred(Wallet& wallet, ledger::Register& reg, Tick now);

ConversionReport upgrade_holdings(Wallet& wallet, ledger::Register& reg, Tick now);
// Converts every spendable v1 token regardless of deadlines or prompts.
ConversionReport convert_all(Wallet& wallet, ledger::Register& reg, Tick now);

}  // namespace pqcbdc::wallet
