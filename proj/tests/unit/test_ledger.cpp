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

#include <gtest/gtest.h>

#include "conservation.hpp"
#include "fixtures.hpp"
#include "pqcbdc/ledger/event_log.hpp"
#include "pqcbdc/ledger/register.hpp"
#include "reference_ledger.hpp"

namespace pqcbdc {
namespace {

using crypto::KeyPair;
using crypto::SchemeId;
using ledger::Register;
using ledger::Token;
using ledger::TransferRequest;
using testing::rng;

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::EmptySeries;
}

struct Owners {
    crypto::Drbg r = rng("ledger-owners");
    KeyPair alice = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    KeyPair bob = crypto::keygen(SchemeId::ClassicalSchnorr, r);

    static ledger::Address addr(const KeyPair& k) { return ledger::address_of(k.public_key); }
};

TransferRequest pay_all(const Token& t, KeyPair& owner, const ledger::Address& to, ledger::Version version = 1) {
    TransferRequest req;
    req.inputs.push_back({t.id, {}, {}});
    req.outputs.push_back({t.value, to, version});
    testing::sign_inputs(req, {&owner});
    return req;
}

TEST(Token, EncodingsRoundTrip) {
    Owners o;
    auto reg = testing::make_register("encodings", 6);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    auto req = pay_all(t, o.alice, Owners::addr(o.bob));
    auto decoded = TransferRequest::decode(req.encode());
    EXPECT_EQ(decoded.digest(), req.digest());
    EXPECT_EQ(decoded.inputs[0].signature, req.inputs[0].signature);
    auto receipt = reg.validate_transfer(req, 1);
    EXPECT_EQ(ledger::Receipt::decode(receipt.encode()), receipt);
    auto junk = req.encode();
    junk.push_back(7);
    EXPECT_THROW(TransferRequest::decode(junk), Error);
}

TEST(Token, DigestCoversOutputsNotKeys) {
    Owners o;
    auto reg = testing::make_register("digest-cover", 6);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    auto req = pay_all(t, o.alice, Owners::addr(o.bob));
    auto d = req.digest();
    req.inputs[0].owner_public_key = o.bob.public_key;
    EXPECT_EQ(req.digest(), d);
    req.outputs[0].value = 99;
    EXPECT_NE(req.digest(), d);
}

TEST(Token, ValueFormatting) {
    EXPECT_EQ(ledger::format_value(1234, 2), "12.34");
    EXPECT_EQ(ledger::format_value(5, 2), "0.05");
    EXPECT_EQ(ledger::format_value(-150, 2), "-1.50");
    EXPECT_EQ(ledger::format_value(7, 0), "7");
    EXPECT_EQ(ledger::rescale(1234, 2, 4), 123400);
}

TEST(Register, MintProducesVerifiableTokens) {
    Owners o;
    auto reg = testing::make_register("mint", 6);
    auto t = reg.mint(500, Owners::addr(o.alice), 1);
    EXPECT_TRUE(ledger::verify_token(t, reg.public_key()));
    auto forged = t;
    forged.value = 501;
    EXPECT_FALSE(ledger::verify_token(forged, reg.public_key()));
    EXPECT_EQ(reg.minted_value(), 500);
    EXPECT_EQ(code_of([&] { reg.mint(0, Owners::addr(o.alice), 1); }), ErrorCode::InvalidValue);
    EXPECT_EQ(code_of([&] { reg.mint(5, Owners::addr(o.alice), 2); }), ErrorCode::UnsupportedVersion);
}

TEST(Register, TransferReceiptAndOutputs) {
    Owners o;
    auto reg = testing::make_register("transfer", 6);
    auto t = reg.mint(500, Owners::addr(o.alice), 1);
    TransferRequest req;
    req.inputs.push_back({t.id, {}, {}});
    req.outputs.push_back({200, Owners::addr(o.bob), 1});
    req.outputs.push_back({300, Owners::addr(o.alice), 1});
    testing::sign_inputs(req, {&o.alice});
    auto leaves = reg.signatures_remaining();
    auto receipt = reg.validate_transfer(req, 3);
    EXPECT_EQ(leaves - reg.signatures_remaining(), 3u);  // one per output token plus the receipt
    EXPECT_TRUE(ledger::verify_receipt(receipt, reg.public_key()));
    EXPECT_EQ(receipt.transfer_digest, req.digest());
    EXPECT_EQ(receipt.tick, 3);
    ASSERT_EQ(receipt.new_token_ids.size(), 2u);
    for (const auto& id : receipt.new_token_ids) EXPECT_TRUE(ledger::verify_token(*reg.find(id), reg.public_key()));
    EXPECT_TRUE(reg.is_spent(t.id));
    EXPECT_EQ(reg.live_value(), 500);
    EXPECT_EQ(reg.clock(), 3);
    EXPECT_EQ(reg.reveal_log().size(), 1u);
    EXPECT_EQ(reg.reveal_log()[0].public_key, o.alice.public_key);
}

TEST(Register, EveryRejectionCode) {
    Owners o;
    auto reg = testing::make_register("rejections", 8);
    reg.set_migration(10, 20, 30, false);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    auto good = pay_all(t, o.alice, Owners::addr(o.bob));

    TransferRequest empty;
    EXPECT_EQ(code_of([&] { reg.validate_transfer(empty, 1); }), ErrorCode::MalformedRequest);

    auto twice = good;
    twice.inputs.push_back(twice.inputs[0]);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(twice, 1); }), ErrorCode::MalformedRequest);

    auto zero = good;
    zero.outputs.push_back({0, Owners::addr(o.bob), 1});
    EXPECT_EQ(code_of([&] { reg.validate_transfer(zero, 1); }), ErrorCode::InvalidValue);

    auto unknown = good;
    unknown.inputs[0].token_id[0] ^= 0xFF;
    EXPECT_EQ(code_of([&] { reg.validate_transfer(unknown, 1); }), ErrorCode::UnknownToken);

    auto wrong_owner = good;
    wrong_owner.inputs[0].owner_public_key = o.bob.public_key;
    EXPECT_EQ(code_of([&] { reg.validate_transfer(wrong_owner, 1); }), ErrorCode::OwnerMismatch);

    auto bad_sig = good;
    bad_sig.inputs[0].signature = crypto::sign(o.alice, Bytes{1, 2, 3});
    EXPECT_EQ(code_of([&] { reg.validate_transfer(bad_sig, 1); }), ErrorCode::BadSignature);

    TransferRequest overpay;
    overpay.inputs.push_back({t.id, {}, {}});
    overpay.outputs.push_back({101, Owners::addr(o.bob), 1});
    testing::sign_inputs(overpay, {&o.alice});
    EXPECT_EQ(code_of([&] { reg.validate_transfer(overpay, 1); }), ErrorCode::ValueMismatch);

    auto early_v2 = pay_all(t, o.alice, Owners::addr(o.bob), 2);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(early_v2, 9); }), ErrorCode::UnsupportedVersion);

    reg.advance_clock(5);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(good, 4); }), ErrorCode::ClockRegression);

    reg.validate_transfer(good, 5);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(good, 6); }), ErrorCode::DoubleSpend);
}

TEST(Register, VersionRules) {
    Owners o;
    auto reg = testing::make_register("versions", 8);
    EXPECT_EQ(reg.supported_versions(0), (ledger::VersionSet{1}));
    EXPECT_EQ(code_of([&] { reg.set_migration(10, 5, 30, false); }), ErrorCode::DeadlineOrder);
    reg.set_migration(10, 20, 30, false);
    EXPECT_EQ(reg.supported_versions(9), (ledger::VersionSet{1}));
    EXPECT_EQ(reg.supported_versions(10), (ledger::VersionSet{1, 2}));
    EXPECT_EQ(reg.supported_versions(30), (ledger::VersionSet{1, 2}));
    EXPECT_EQ(reg.supported_versions(31), (ledger::VersionSet{2}));

    auto v1 = reg.mint(100, Owners::addr(o.alice), 1);
    reg.advance_clock(10);
    // A v2 token owned by a classical address: the scheme does not fit the version.
    auto v2 = reg.mint(50, Owners::addr(o.alice), 2);
    auto wrong_scheme = pay_all(v2, o.alice, Owners::addr(o.bob), 2);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(wrong_scheme, 11); }), ErrorCode::BadSignature);

    auto pq = crypto::keygen(SchemeId::PqWots, o.r);
    auto v2_pq = reg.mint(70, Owners::addr(pq), 2);
    auto down = pq.duplicate();
    auto downgrade = pay_all(v2_pq, down, Owners::addr(o.bob), 1);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(downgrade, 12); }), ErrorCode::VersionDowngradeForbidden);

    auto late = pay_all(v1, o.alice, Owners::addr(o.bob), 2);
    EXPECT_EQ(code_of([&] { reg.validate_transfer(late, 31); }), ErrorCode::TokenVersionExpired);
}

TEST(Register, DowngradeAllowedWhenConfigured) {
    Owners o;
    auto reg = testing::make_register("downgrade-ok", 8);
    reg.set_migration(0, 20, 30, true);
    auto pq = crypto::keygen(SchemeId::PqWots, o.r);
    auto v2 = reg.mint(70, Owners::addr(pq), 2);
    auto req = pay_all(v2, pq, Owners::addr(o.bob), 1);
    EXPECT_NO_THROW(reg.validate_transfer(req, 1));
    EXPECT_EQ(reg.live_value(1), 70);
}

TEST(Register, RejectionLeavesStateByteIdentical) {
    Owners o;
    auto reg = testing::make_register("idempotent", 6);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    auto snapshot = reg.snapshot();
    auto counter = reg.id_stream().counter();
    auto bad = pay_all(t, o.bob, Owners::addr(o.bob));
    for (int i = 0; i < 3; ++i) {
        EXPECT_THROW(reg.validate_transfer(bad, 1), Error);
        EXPECT_EQ(reg.snapshot(), snapshot);
        EXPECT_EQ(reg.id_stream().counter(), counter);
    }
    EXPECT_NO_THROW(reg.check_transfer(pay_all(t, o.alice, Owners::addr(o.bob)), 1));
    EXPECT_EQ(reg.snapshot(), snapshot);
}

TEST(Register, KeyExhaustionIsCleanRejection) {
    Owners o;
    auto reg = testing::make_register("exhaust", 2);  // 4 leaves
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    TransferRequest split;
    split.inputs.push_back({t.id, {}, {}});
    split.outputs.push_back({60, Owners::addr(o.bob), 1});
    split.outputs.push_back({40, Owners::addr(o.alice), 1});
    testing::sign_inputs(split, {&o.alice});
    reg.validate_transfer(split, 1);
    EXPECT_EQ(reg.signatures_remaining(), 0u);
    const auto& rest = reg.live().begin()->second;
    auto& owner = rest.owner == Owners::addr(o.alice) ? o.alice : o.bob;
    auto req = pay_all(rest, owner, Owners::addr(o.bob));
    auto snapshot = reg.snapshot();
    EXPECT_EQ(code_of([&] { reg.validate_transfer(req, 2); }), ErrorCode::RegisterKeyExhausted);
    EXPECT_EQ(code_of([&] { reg.mint(1, Owners::addr(o.bob), 1); }), ErrorCode::RegisterKeyExhausted);
    EXPECT_EQ(reg.snapshot(), snapshot);
}

TEST(Register, SpentTokensNeverComeBack) {
    Owners o;
    auto reg = testing::make_register("resurrect", 8);
    reg.set_migration(0, 50, 100, false);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    reg.validate_transfer(pay_all(t, o.alice, Owners::addr(o.bob)), 1);
    for (ledger::Tick now = 2; now < 6; ++now) {
        EXPECT_EQ(code_of([&] { reg.validate_transfer(pay_all(t, o.alice, Owners::addr(o.alice)), now); }),
                  ErrorCode::DoubleSpend);
        EXPECT_EQ(code_of([&] { reg.conversion_request(t.id, 2, Owners::addr(o.alice)); }), ErrorCode::DoubleSpend);
        EXPECT_EQ(reg.find(t.id), nullptr);
        EXPECT_TRUE(reg.is_spent(t.id));
    }
}

TEST(Register, ConversionsAndStranding) {
    Owners o;
    auto reg = testing::make_register("convert", 8);
    reg.set_migration(10, 20, 30, false);
    auto a = reg.mint(100, Owners::addr(o.alice), 1);
    auto b = reg.mint(40, Owners::addr(o.bob), 1);
    auto pq1 = crypto::keygen(SchemeId::PqWots, o.r);
    auto pq2 = crypto::keygen(SchemeId::PqWots, o.r);

    auto convert = [&](const Token& t, KeyPair& key, const KeyPair& to, ledger::Tick now) {
        auto req = reg.conversion_request(t.id, 2, Owners::addr(to));
        return reg.convert_version(t.id, key.public_key, crypto::sign(key, req.digest()), 2, Owners::addr(to), now);
    };
    auto c1 = convert(a, o.alice, pq1, 12);
    EXPECT_EQ(c1.version, 2);
    EXPECT_EQ(c1.value, 100);
    EXPECT_EQ(reg.premature_conversions(), 1u);
    EXPECT_EQ(code_of([&] { reg.stranded_value(30); }), ErrorCode::BeforeDeadline);
    EXPECT_EQ(reg.stranded_value(31), 40);
    EXPECT_EQ(reg.live_value(1), 40);
    EXPECT_EQ(reg.live_value(2), 100);
    convert(b, o.bob, pq2, 25);
    EXPECT_EQ(reg.premature_conversions(), 1u);
    EXPECT_EQ(reg.stranded_value(31), 0);
    EXPECT_EQ(reg.minted_value(), reg.live_value());
}

TEST(EventLog, LinesRoundTripAndReplayMatches) {
    Owners o;
    auto reg = testing::make_register("replay", 8);
    reg.set_migration(0, 50, 100, false);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    reg.validate_transfer(pay_all(t, o.alice, Owners::addr(o.bob)), 4);
    auto text = ledger::write_log(reg.events());
    auto events = ledger::read_log(text);
    ASSERT_EQ(events.size(), reg.events().size());
    for (std::size_t i = 0; i < events.size(); ++i) EXPECT_EQ(events[i], reg.events()[i]);

    auto replayed = Register::replay(reg.receipt_key().duplicate(), events, reg.id_stream(), reg.config());
    EXPECT_EQ(replayed.live(), reg.live());
    EXPECT_EQ(replayed.spent(), reg.spent());
    EXPECT_EQ(replayed.minted_value(), reg.minted_value());
    EXPECT_EQ(replayed.clock(), reg.clock());
    EXPECT_EQ(replayed.migration(), reg.migration());
}

TEST(EventLog, AuditCatchesTampering) {
    Owners o;
    auto reg = testing::make_register("audit", 8);
    auto t = reg.mint(100, Owners::addr(o.alice), 1);
    reg.validate_transfer(pay_all(t, o.alice, Owners::addr(o.bob)), 1);
    auto events = reg.events();
    auto report = ledger::audit(events);
    EXPECT_TRUE(report.consistent());
    EXPECT_EQ(report.minted, 100);
    EXPECT_EQ(report.transfers, 1u);

    auto inflated = events;
    inflated.back().outputs[0].value += 1;
    EXPECT_FALSE(ledger::audit(inflated).consistent());

    auto replayed = events;
    replayed.push_back(events.back());
    EXPECT_FALSE(ledger::audit(replayed).consistent());
}

TEST(Oracle, ShortSequencesAgreeWithReferenceLedger) {
    testing::Explorer explorer(5, 3);
    auto result = explorer.run();
    for (const auto& p : result.first_problems) ADD_FAILURE() << p;
    EXPECT_EQ(result.disagreements, 0u);
    EXPECT_GT(result.accepted, 0u);
}

TEST(Conservation, RandomTransfersWithInjectedFailures) {
    testing::ConservationDriver driver("conservation-unit", 12);
    auto result = driver.run(400);
    for (const auto& p : result.problems) ADD_FAILURE() << p;
    EXPECT_EQ(result.accepted, 400u);
    EXPECT_GT(result.rejected_as_expected, 50u);
    EXPECT_EQ(result.live_sum, result.minted_by_driver);
    EXPECT_EQ(result.minted_reported, result.minted_by_driver);
    EXPECT_TRUE(result.audit_consistent);
}

}  // namespace
}  // namespace pqcbdc
