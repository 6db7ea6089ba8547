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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conservation.hpp"
#include "fixtures.hpp"
#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/crypto/hybrid.hpp"
#include "pqcbdc/sim/metrics.hpp"
#include "pqcbdc/sim/scenario.hpp"
#include "pqcbdc/sim/world.hpp"
#include "pqcbdc/wallet/payment.hpp"
#include "reference_ledger.hpp"

namespace {

using namespace pqcbdc;
using crypto::KeyPair;
using crypto::SchemeId;
using Clock = std::chrono::steady_clock;

// Limits and tolerances.
constexpr double kCaseMatrixSeconds = 5;
constexpr double kCryptoSeconds = 30;
constexpr double kScenarioRunSeconds = 60;
constexpr int kRoundTrips = 1000;
constexpr int kTampers = 100;
constexpr int kOracleSlots = 5;
constexpr int kOracleLength = 6;
constexpr std::size_t kConservationTransfers = 10'000;
constexpr int kScenarioSeeds = 10;
constexpr double kReuseTarget = 0.65;
constexpr double kReuseTolerance = 0.05;
constexpr int kScenarioWallets = 200;
constexpr sim::Tick kScenarioTicks = 2000;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            pass = false;
            detail << what;
        }
    }
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::optional<ErrorCode> error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Case matrix

struct CaseRun {
    bool ok = false;
    std::optional<ErrorCode> error;
    wallet::TransferOutcome outcome;
};

CaseRun run_case(wallet::Generation sender_gen, wallet::Generation receiver_gen, ledger::Version token_version,
                 bool downgrade_allowed, const std::string& label) {
    auto ca = testing::make_authority("case-ca-" + label, 6);
    auto reg = testing::make_register("case-register-" + label, 8);
    reg.set_migration(1, 100, 200, downgrade_allowed);
    reg.advance_clock(5);
    auto r = testing::rng("case-wallets-" + label);
    auto sender = testing::make_wallet(ca, r, sender_gen);
    auto receiver = testing::make_wallet(ca, r, receiver_gen);
    auto token = reg.mint(1000, sender.receive_address(token_version), token_version);
    sender.receive_minted(token, reg.public_key());

    CaseRun run;
    try {
        run.outcome = wallet::pay(sender, receiver, 400, reg, 6);
        run.ok = run.outcome.receipt.has_value() && receiver.balance() == 400 && sender.balance() == 600;
    } catch (const Error& e) {
        run.error = e.code();
    }
    return run;
}

Verdict case_matrix() {
    using wallet::Generation;
    using wallet::PaymentCase;
    Verdict v;
    const auto start = Clock::now();

    struct Expect {
        PaymentCase label;
        Generation sender;
        Generation receiver;
        ledger::Version token;
        ledger::Version output;
    };
    // Cases that work for every register configuration.
    const Expect working[] = {
        {PaymentCase::C1a, Generation::Old, Generation::Old, 1, 1},
        {PaymentCase::C2a, Generation::Old, Generation::New, 1, 1},
        {PaymentCase::C3a, Generation::New, Generation::Old, 1, 1},
        {PaymentCase::C4a, Generation::New, Generation::New, 1, 1},
        {PaymentCase::C4b, Generation::New, Generation::New, 2, 2},
    };
    int exercised = 0;
    for (bool downgrade : {false, true}) {
        for (const auto& e : working) {
            auto name = std::string(wallet::to_string(e.label)) + (downgrade ? "-dg" : "");
            auto run = run_case(e.sender, e.receiver, e.token, downgrade, name);
            v.require(run.ok, name + " did not settle");
            v.require(run.outcome.label == e.label, name + " labelled " + std::string(wallet::to_string(run.outcome.label)));
            v.require(run.outcome.output_version == e.output, name + " wrong output version");
            ++exercised;
        }
    }
    // 2a and 4a: the receiving NEW wallet auto-detects the v1 token.
    // 3b: version downgrade only if the register supports it.
    auto refused = run_case(Generation::New, Generation::Old, 2, false, "3b-refused");
    v.require(!refused.ok && refused.error == ErrorCode::DowngradeRequired, "3b without downgrade did not fail");
    auto allowed = run_case(Generation::New, Generation::Old, 2, true, "3b-allowed");
    v.require(allowed.ok && allowed.outcome.label == PaymentCase::C3b && allowed.outcome.output_version == 1,
              "3b with downgrade did not settle as v1");
    exercised += 2;

    // 1b and 2b would not occur: classification refuses them and an OLD wallet cannot hold v2.
    for (auto sender : {Generation::Old}) {
        for (auto receiver : {Generation::Old, Generation::New}) {
            bool threw = false;
            try {
                wallet::classify(sender, receiver, 2);
            } catch (const std::logic_error&) {
                threw = true;
            }
            v.require(threw, "old sender with a v2 token was classified");
        }
    }
    {
        auto ca = testing::make_authority("case-ca-unreachable", 6);
        auto reg = testing::make_register("case-register-unreachable", 8);
        reg.set_migration(1, 100, 200, false);
        reg.advance_clock(5);
        auto r = testing::rng("case-unreachable");
        auto old_wallet = testing::make_wallet(ca, r, Generation::Old);
        auto new_wallet = testing::make_wallet(ca, r, Generation::New);
        auto v2 = reg.mint(10, new_wallet.receive_address(2), 2);
        v.require(error_of([&] { old_wallet.receive_minted(v2, reg.public_key()); }).has_value(),
                  "old wallet accepted a v2 token");
        v.require(error_of([&] { old_wallet.receive_address(2); }).has_value(), "old wallet produced a v2 address");
        v.require(!wallet::reachable(PaymentCase::C1b) && !wallet::reachable(PaymentCase::C2b),
                  "1b/2b marked reachable");
    }

    const double secs = seconds_since(start);
    v.require(secs < kCaseMatrixSeconds, "runtime " + std::to_string(secs) + " s");
    v.detail << (v.pass ? "" : " | ") << exercised << " payments over 6 reachable subcases, 1b/2b unreachable, "
             << secs << " s";
    return v;
}

// ---------------------------------------------------------------------------
// Crypto suite

bool verifies(const Bytes& pub, SchemeId scheme, ByteView msg, const crypto::Signature& sig) {
    try {
        return crypto::verify(pub, scheme, msg, sig);
    } catch (const Error&) {
        return false;  // undecodable after tampering
    }
}

Verdict crypto_suite() {
    Verdict v;
    const auto start = Clock::now();
    auto r = testing::rng("acceptance-crypto");
    auto flip = [&](Bytes b) {
        auto bit = r.uniform(b.size() * 8);
        b[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        return b;
    };

    struct Tally {
        int verified = 0;
        int tamper_rejected = 0;
    };
    std::map<SchemeId, Tally> tally;

    auto exercise = [&](SchemeId scheme, const Bytes& pub, const Bytes& msg, const crypto::Signature& sig, int i) {
        auto& t = tally[scheme];
        if (verifies(pub, scheme, msg, sig)) ++t.verified;
        if (i < kTampers) {
            auto bad_sig = sig;
            bad_sig.payload = flip(sig.payload);
            auto bad_msg = flip(msg);
            if (!verifies(pub, scheme, msg, bad_sig) && !verifies(pub, scheme, bad_msg, sig)) ++t.tamper_rejected;
        }
    };

    auto mss_key = crypto::keygen(SchemeId::PqMss, r, testing::mss_config(10));
    crypto::SchemeConfig mss_cfg = testing::mss_config(10);
    auto schnorr_key = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    for (int i = 0; i < kRoundTrips; ++i) {
        auto msg = r.bytes(1 + r.uniform(200));
        if (i % 50 == 0) schnorr_key = crypto::keygen(SchemeId::ClassicalSchnorr, r);
        exercise(SchemeId::ClassicalSchnorr, schnorr_key.public_key, msg, crypto::sign(schnorr_key, msg), i);

        auto wots_key = crypto::keygen(SchemeId::PqWots, r);
        exercise(SchemeId::PqWots, wots_key.public_key, msg, crypto::sign(wots_key, msg), i);

        exercise(SchemeId::PqMss, mss_key.public_key, msg, crypto::sign(mss_key, msg, mss_cfg), i);

        auto hybrid = crypto::hybrid_keygen(r);
        auto hsig = crypto::hybrid_sign(hybrid.classical, hybrid.pq, msg);
        exercise(SchemeId::HybridCm, hybrid.public_key().encode(), msg, hsig, i);
    }
    for (const auto& [scheme, t] : tally) {
        auto name = std::string(crypto::to_string(scheme));
        v.require(t.verified == kRoundTrips, name + " round trips " + std::to_string(t.verified));
        v.require(t.tamper_rejected == kTampers, name + " tampers rejected " + std::to_string(t.tamper_rejected));
    }

    int reuse_errors = 0;
    for (int i = 0; i < 100; ++i) {
        auto key = crypto::keygen(SchemeId::PqWots, r);
        crypto::sign(key, r.bytes(16));
        if (error_of([&] { crypto::sign(key, r.bytes(16)); }) == ErrorCode::OtsReuse) ++reuse_errors;
    }
    v.require(reuse_errors == 100, "WOTS reuse errors " + std::to_string(reuse_errors) + "/100");

    auto small = crypto::keygen(SchemeId::PqMss, r, testing::mss_config(2));
    int signed_ok = 0;
    for (int i = 0; i < 4; ++i)
        if (!error_of([&] { crypto::sign(small, r.bytes(8), testing::mss_config(2)); })) ++signed_ok;
    auto fifth = error_of([&] { crypto::sign(small, r.bytes(8), testing::mss_config(2)); });
    v.require(signed_ok == 4 && fifth == ErrorCode::MssExhausted, "MSS h=2 capacity not exactly 4");

    const double secs = seconds_since(start);
    v.require(secs < kCryptoSeconds, "runtime " + std::to_string(secs) + " s");
    v.detail << (v.pass ? "" : " | ") << kRoundTrips << " round trips and " << kTampers
             << " tampers x 4 schemes, WOTS reuse 100/100, MSS h=2 exhausted after 4, " << secs << " s";
    return v;
}

// ---------------------------------------------------------------------------
// Hybrid truth table

Verdict hybrid_truth_table() {
    Verdict v;
    auto r = testing::rng("acceptance-hybrid");
    auto keys = crypto::hybrid_keygen(r);
    const Bytes msg{'p', 'a', 'y'}, other{'n', 'o'};
    int matched = 0;
    for (bool c : {false, true}) {
        for (bool p : {false, true}) {
            auto pq = crypto::keygen(SchemeId::PqWots, r);
            auto pub = keys.public_key();
            pub.pq = pq.public_key;
            auto sig = crypto::combine_hybrid(crypto::sign(keys.classical, c ? msg : other),
                                              crypto::sign(pq, p ? msg : other));
            const bool expected[] = {c, p, c && p, c || p};
            for (std::size_t i = 0; i < crypto::kAllPolicies.size(); ++i) {
                if (crypto::hybrid_verify(pub, msg, sig, crypto::kAllPolicies[i]) == expected[i]) ++matched;
            }
        }
    }
    v.require(matched == 16, std::to_string(matched) + "/16 outcomes matched");
    v.detail << (v.pass ? "" : " | ") << matched << "/16 outcomes match {c, p, c&p, c|p}";
    return v;
}

// ---------------------------------------------------------------------------
// Double-spend oracle

Verdict double_spend_oracle() {
    Verdict v;
    const auto start = Clock::now();
    testing::Explorer explorer(kOracleSlots, kOracleLength);
    auto result = explorer.run();
    v.require(result.disagreements == 0, std::to_string(result.disagreements) + " disagreements");
    for (const auto& p : result.first_problems) v.detail << p << "; ";
    v.require(result.accepted > 0, "no transfer was ever accepted");
    v.detail << (v.pass ? "" : " | ") << result.sequences << " sequences (alphabet " << explorer.alphabet_size()
             << ", length <= " << kOracleLength << ", " << kOracleSlots << " token slots), " << result.distinct_states
             << " distinct states, " << result.checks << " checks, 100% agreement on verdicts and balances, "
             << seconds_since(start) << " s";
    return v;
}

// ---------------------------------------------------------------------------
// Conservation

Verdict conservation() {
    Verdict v;
    const auto start = Clock::now();
    testing::ConservationDriver driver("acceptance-conservation", 15);
    auto result = driver.run(kConservationTransfers);
    for (const auto& p : result.problems) v.require(false, p);
    v.require(result.accepted == kConservationTransfers, "only " + std::to_string(result.accepted) + " accepted");
    v.require(result.live_sum == result.minted_by_driver,
              "live " + std::to_string(result.live_sum) + " != minted " + std::to_string(result.minted_by_driver));
    v.require(result.minted_reported == result.minted_by_driver, "register reports a different minted total");
    v.require(result.audit_consistent, "event log audit failed");
    v.detail << (v.pass ? "" : " | ") << result.accepted << " transfers, " << result.rejected_as_expected
             << " injected failures rejected, live = minted = " << result.live_sum << ", " << seconds_since(start)
             << " s";
    return v;
}

// ---------------------------------------------------------------------------
// Simulation scenarios

sim::ScenarioConfig base_scenario(const std::string& seed) {
    sim::ScenarioConfig c;
    c.seed = sim::parse_seed(seed);
    c.n_wallets = kScenarioWallets;
    c.hardware_fraction = 0;
    c.initial_new_fraction = 0;
    c.adoption_rate = 0;
    c.tx_per_tick = 1;
    c.amount_distribution = {1, 100};
    c.reuse_fraction = 0;
    c.finality_delay = 0;
    c.v2_activation = kScenarioTicks + 100;
    c.soft_deadline = kScenarioTicks + 200;
    c.hard_deadline = kScenarioTicks + 300;
    c.total_ticks = kScenarioTicks;
    c.register_tree_height = 14;
    c.mss_height = 4;
    return c;
}

struct TimedRun {
    std::unique_ptr<sim::World> world;
    double seconds;
};

TimedRun simulate(const sim::ScenarioConfig& c) {
    const auto start = Clock::now();
    auto world = std::make_unique<sim::World>(c);
    while (!world->finished()) world->step();
    return {std::move(world), seconds_since(start)};
}

Verdict threat_scenarios() {
    Verdict v;
    double slowest = 0;
    std::ostringstream notes;

    // (a) fresh addresses with the break delay longer than finality.
    sim::Value thefts_a = 0;
    for (int s = 0; s < kScenarioSeeds; ++s) {
        auto c = base_scenario("threat-a-" + std::to_string(s));
        c.hardware_fraction = 0.2;
        c.finality_delay = 2;
        c.attacker_break_delay = 3;
        auto run = simulate(c);
        slowest = std::max(slowest, run.seconds);
        thefts_a += run.world->series().rows.back().thefts_value;
    }
    v.require(thefts_a == 0, "(a) thefts " + std::to_string(thefts_a));
    notes << "(a) thefts 0 over " << kScenarioSeeds << " seeds";

    // (b) 65% address reuse, D = 1, no migration.
    double lo = 1, hi = 0;
    for (int s = 0; s < kScenarioSeeds; ++s) {
        auto c = base_scenario("threat-b-" + std::to_string(s));
        c.reuse_fraction = kReuseTarget;
        c.attacker_break_delay = 1;
        auto run = simulate(c);
        slowest = std::max(slowest, run.seconds);
        const auto& last = run.world->series().rows.back();
        double fraction = double(last.thefts_value + last.at_risk_value) / double(run.world->minted());
        lo = std::min(lo, fraction);
        hi = std::max(hi, fraction);
        v.require(std::fabs(fraction - kReuseTarget) <= kReuseTolerance,
                  "(b) seed " + std::to_string(s) + " fraction " + std::to_string(fraction));
    }
    notes << "; (b) stolen+at-risk fraction in [" << lo << ", " << hi << "]";

    // (c) everyone migrated before the attacker starts.
    sim::Value thefts_c = 0;
    std::vector<sim::Tick> delays{1, 10, 100, 1000};
    for (auto d : delays) {
        auto c = base_scenario("threat-c-" + std::to_string(d));
        c.initial_new_fraction = 1.0;
        c.reuse_fraction = kReuseTarget;
        c.v2_activation = 50;
        c.soft_deadline = 100;
        c.hard_deadline = 200;
        c.attacker_start_tick = 201;
        c.attacker_break_delay = d;
        auto run = simulate(c);
        slowest = std::max(slowest, run.seconds);
        const auto& rows = run.world->series().rows;
        thefts_c += rows.back().thefts_value;
        v.require(rows[199].live_v1_value == 0, "(c) v1 value left at the hard deadline");
    }
    v.require(thefts_c == 0, "(c) thefts " + std::to_string(thefts_c));
    notes << "; (c) thefts 0 for D in {1,10,100,1000}";

    v.require(slowest < kScenarioRunSeconds, "slowest run " + std::to_string(slowest) + " s");
    v.detail << (v.pass ? "" : " | ") << notes.str() << "; slowest run " << slowest << " s";
    return v;
}

Verdict migration_completeness() {
    Verdict v;
    auto config = [](const std::string& seed) {
        auto c = base_scenario(seed);
        c.v2_activation = 100;
        c.soft_deadline = 500;
        c.hard_deadline = 1000;
        c.initial_new_fraction = 0.1;
        c.adoption_rate = 0.3;  // 180 old wallets adopt by tick 700
        c.total_ticks = 1200;
        return c;
    };

    auto full = simulate(config("migration-full"));
    const auto& rows = full.world->series().rows;
    bool adopted_by_900 = true;
    for (const auto& w : full.world->wallets())
        adopted_by_900 = adopted_by_900 && w.profile().generation == wallet::Generation::New;
    v.require(adopted_by_900, "population not covered");
    for (const auto& row : rows) {
        if (row.tick <= 1000) continue;
        v.require(row.live_v1_value == 0 && row.stranded_value == 0,
                  "tick " + std::to_string(row.tick) + " v1 " + std::to_string(row.live_v1_value));
        if (!v.pass) break;
    }

    auto c = config("migration-holdouts");
    c.never_upgrade_fraction = 0.05;
    auto partial = simulate(c);
    const auto& world = *partial.world;
    std::set<ledger::Address> holdout_addresses;
    std::size_t holdouts = 0;
    sim::Value wallet_v1 = 0;
    for (std::size_t i = 0; i < world.wallets().size(); ++i) {
        if (!world.never_upgrade()[i]) continue;
        ++holdouts;
        for (const auto& [addr, key] : world.wallets()[i].keys()) holdout_addresses.insert(addr);
        wallet_v1 += world.wallets()[i].balance(ledger::kClassicalVersion);
    }
    sim::Value register_v1 = 0, other_v1 = 0;
    for (const auto& [id, t] : world.ledger().live()) {
        if (t.version != ledger::kClassicalVersion) continue;
        (holdout_addresses.count(t.owner) ? register_v1 : other_v1) += t.value;
    }
    const auto stranded = world.series().rows.back().stranded_value;
    v.require(holdouts == 10, "expected 10 holdouts, got " + std::to_string(holdouts));
    v.require(stranded == register_v1, "stranded " + std::to_string(stranded) + " != holdout v1 " +
                                           std::to_string(register_v1));
    v.require(stranded == wallet_v1, "stranded != holdout wallet balances");
    v.require(other_v1 == 0, "v1 value outside holdout wallets");
    v.require(stranded > 0, "holdouts hold nothing");
    v.detail << (v.pass ? "" : " | ") << "full adoption: live_v1 = stranded = 0 for ticks 1001-1200; "
             << holdouts << " holdouts: stranded " << stranded << " = their v1 holdings";
    return v;
}

Verdict determinism() {
    Verdict v;
    auto c = base_scenario("determinism");
    c.n_wallets = 120;
    c.total_ticks = 1200;
    c.hardware_fraction = 0.3;
    c.initial_new_fraction = 0.3;
    c.adoption_rate = 0.2;
    c.reuse_fraction = 0.4;
    c.finality_delay = 2;
    c.attacker_break_delay = 5;
    c.v2_activation = 100;
    c.soft_deadline = 600;
    c.hard_deadline = 1000;
    c.never_upgrade_fraction = 0.05;
    auto first = sim::report(sim::run(c), sim::ReportFormat::Csv);
    auto second = sim::report(sim::run(c), sim::ReportFormat::Csv);
    auto h1 = to_hex(crypto::hash(Bytes(first.begin(), first.end()), "tx"));
    auto h2 = to_hex(crypto::hash(Bytes(second.begin(), second.end()), "tx"));
    v.require(first == second, "CSV differs between runs");
    v.require(h1 == h2, "hash differs");
    auto other = c;
    other.seed = sim::parse_seed("determinism-other");
    v.require(sim::report(sim::run(other), sim::ReportFormat::Csv) != first, "seed has no effect");
    v.detail << (v.pass ? "" : " | ") << "two runs byte-identical (" << first.size() << " bytes, hash "
             << h1.substr(0, 16) << ")";
    return v;
}

// ---------------------------------------------------------------------------
// PKI lifecycle

Verdict pki_lifecycle() {
    Verdict v;
    auto ca = testing::make_authority("acceptance-pki", 8, {0, 1000});
    auto r = testing::rng("acceptance-pki-chain");
    auto keys_of = [](const KeyPair& c, const KeyPair& pq) {
        pki::SubjectKeys k;
        k.classical = c.public_key;
        k.pq = pki::PqExtension{pq.scheme, pq.public_key};
        return k;
    };
    auto sub_c = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    auto sub_pq = crypto::keygen(SchemeId::PqMss, r, testing::mss_config(6));
    auto leaf_c = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    auto leaf_pq = crypto::keygen(SchemeId::PqMss, r, testing::mss_config(4));
    auto sub = pki::issue(ca.root, ca.keys(), "sub", keys_of(sub_c, sub_pq), pki::Role::SubCa, {0, 800}, r);
    auto leaf = pki::issue(sub, {&sub_c, &sub_pq}, "wallet", keys_of(leaf_c, leaf_pq), pki::Role::Wallet, {100, 200}, r);
    std::vector<pki::Certificate> chain{leaf, sub, ca.root};

    int ok = 0, expired = 0;
    for (auto p : crypto::kAllPolicies) {
        if (pki::verify_chain(chain, ca.root, p, 150).ok()) ++ok;
        for (pki::Tick t : {pki::Tick{99}, pki::Tick{201}})
            if (pki::verify_chain(chain, ca.root, p, t).failure == pki::Failure::Expired) ++expired;
        for (pki::Tick t : {pki::Tick{100}, pki::Tick{200}})
            if (pki::verify_chain(chain, ca.root, p, t).ok()) ++ok;
    }
    v.require(ok == 12, "hybrid chain verified " + std::to_string(ok) + "/12");
    v.require(expired == 8, "expiry flips " + std::to_string(expired) + "/8");

    auto split_key = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    auto split_pq = crypto::keygen(SchemeId::PqWots, r);
    pki::SubjectKeys classical_only;
    classical_only.classical = split_key.public_key;
    auto classical_cert = pki::issue(sub, {&sub_c, &sub_pq}, "split", classical_only, pki::Role::Wallet, {0, 500}, r);
    pki::PqRequest request{"split", pki::Role::Wallet, {split_pq.scheme, split_pq.public_key}, {0, 500}};
    auto pair = pki::link_certs(classical_cert, split_key, request, sub, {&sub_c, &sub_pq}, r);
    std::vector<pki::Certificate> issuers{sub, ca.root};
    int linked_ok = 0;
    for (auto p : crypto::kAllPolicies)
        if (pki::verify_linked(pair, issuers, ca.root, p, 10).ok()) ++linked_ok;
    v.require(linked_ok == 4, "genuine linked pair rejected");

    int forged_rejected = 0, forged_total = 0;
    auto forger = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    for (int i = 0; i < 100; ++i) {
        auto forged = pair;
        switch (i % 3) {
            case 0: forged.link_proof = crypto::sign(forger, r.bytes(32)); break;
            case 1: {
                auto bit = r.uniform(forged.link_proof.payload.size() * 8);
                forged.link_proof.payload[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
                break;
            }
            default: forged.link_proof.payload.assign(forged.link_proof.payload.size(), 0); break;
        }
        for (auto p : crypto::kAllPolicies) {
            ++forged_total;
            if (pki::verify_linked(forged, issuers, ca.root, p, 10).failure == pki::Failure::LinkProofInvalid)
                ++forged_rejected;
        }
    }
    v.require(forged_rejected == forged_total,
              "forged link proofs rejected " + std::to_string(forged_rejected) + "/" + std::to_string(forged_total));
    v.detail << (v.pass ? "" : " | ") << "root->sub->wallet verifies under 4 policies, expiry flips at ticks 99/201, "
             << forged_rejected << "/" << forged_total << " forged link proofs rejected";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"case-matrix", case_matrix},
        {"crypto-suite", crypto_suite},
        {"hybrid-truth-table", hybrid_truth_table},
        {"double-spend-oracle", double_spend_oracle},
        {"conservation", conservation},
        {"threat-scenarios", threat_scenarios},
        {"migration-completeness", migration_completeness},
        {"determinism", determinism},
        {"pki-lifecycle", pki_lifecycle},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << "exception: " << e.what();
        }
        std::cout << (v.pass ? "PASS " : "FAIL ") << c.name << ": " << v.detail.str() << std::endl;
        if (!v.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
