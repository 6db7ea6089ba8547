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

#include <memory>

#include "cli_util.hpp"
#include "pqcbdc/wallet/payment.hpp"

namespace pqcbdc::cli {

namespace {

struct WalletArgs {
    std::string out;
    std::string kind = "software";
    std::string generation = "new";
    std::string rotation = "fresh-address";
    std::string issuer;
    std::string issuer_classical_key;
    std::string issuer_pq_key;
    std::string seed = "0";
    int mss_height = 8;

    std::string wallet;
    std::string state;
    std::string from;
    std::string to;
    std::vector<std::string> payees;
    ledger::Value amount = 0;
    std::optional<ledger::Tick> tick;
    bool offline = false;
    bool all = false;
};

json wallet_summary(const wallet::Wallet& w) {
    json tokens = json::array();
    for (const auto& [id, t] : w.holdings()) {
        auto entry = token_json(t);
        entry["locked"] = w.locked().count(id) != 0;
        tokens.push_back(entry);
    }
    return {{"id", to_hex(w.id())},
            {"kind", std::string(wallet::to_string(w.profile().kind))},
            {"generation", std::string(wallet::to_string(w.profile().generation))},
            {"rotation", std::string(wallet::to_string(w.rotation()))},
            {"online", w.online()},
            {"supported_versions", versions_json(w.supported_versions())},
            {"balance", w.balance()},
            {"balance_v1", w.balance(ledger::kClassicalVersion)},
            {"balance_v2", w.balance(ledger::kPqVersion)},
            {"spendable", w.spendable_balance()},
            {"deferred", w.deferred().size()},
            {"tokens", tokens}};
}

json conversion_json(const wallet::ConversionReport& r) {
    json failures = json::array();
    for (const auto& [id, code] : r.failures)
        failures.push_back({{"token_id", to_hex(id)}, {"error", std::string(to_string(code))}});
    return {{"converted", r.converted}, {"value", r.value}, {"failures", failures}};
}

void run_create(const WalletArgs& a) {
    auto issuer = load_cert(a.issuer);
    std::unique_ptr<crypto::KeyPair> classical, pq;
    if (!a.issuer_classical_key.empty()) classical = std::make_unique<crypto::KeyPair>(load_key(a.issuer_classical_key));
    if (!a.issuer_pq_key.empty()) pq = std::make_unique<crypto::KeyPair>(load_key(a.issuer_pq_key));

    wallet::Profile profile{wallet::parse_kind(a.kind), wallet::parse_generation(a.generation), true};
    wallet::WalletOptions options;
    options.mss_height = a.mss_height;
    auto rng = rng_from(a.seed);
    auto w = wallet::Wallet::create(profile, wallet::parse_rotation(a.rotation), issuer, {classical.get(), pq.get()},
                                    rng, options);
    if (pq) save_key(a.issuer_pq_key, *pq);
    save_wallet(a.out, w);
    print(wallet_summary(w).dump(2));
}

void run_balance(const WalletArgs& a) {
    auto w = load_wallet(a.wallet);
    if (!a.state.empty()) {
        auto reg = RegisterStore{a.state}.load();
        if (w.reconcile(reg) > 0) save_wallet(a.wallet, w);
    }
    print(wallet_summary(w).dump(2));
}

void run_pay(const WalletArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    auto sender = load_wallet(a.from);
    auto receiver = load_wallet(a.to);
    if (a.offline) sender.set_online(false);
    auto now = a.tick.value_or(reg.clock());
    auto outcome = wallet::pay(sender, receiver, a.amount, reg, now);
    store.save(reg);
    save_wallet(a.from, sender);
    save_wallet(a.to, receiver);
    json out{{"case", std::string(wallet::to_string(outcome.label))},
             {"negotiated_version", outcome.negotiated},
             {"output_version", outcome.output_version},
             {"deferred", outcome.deferred}};
    if (outcome.receipt) out["receipt"] = receipt_json(*outcome.receipt);
    print(out.dump(2));
}

void run_upload(const WalletArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    auto w = load_wallet(a.wallet);
    w.set_online(true);
    std::vector<wallet::Wallet> payees;
    for (const auto& path : a.payees) payees.push_back(load_wallet(path));

    auto results = wallet::upload_deferred(w, reg, a.tick.value_or(reg.clock()));
    json records = json::array();
    for (const auto& r : results) {
        json entry{{"case", std::string(wallet::to_string(r.record.label))},
                   {"amount", r.record.amount},
                   {"created_tick", r.record.created_tick},
                   {"receiver", to_hex(r.record.receiver)}};
        if (r.receipt) {
            entry["receipt"] = receipt_json(*r.receipt);
            for (auto& p : payees)
                if (p.id() == r.record.receiver) p.accept_outputs(reg, *r.receipt);
        }
        if (r.error) entry["error"] = std::string(to_string(*r.error));
        records.push_back(entry);
    }
    w.reconcile(reg);
    store.save(reg);
    save_wallet(a.wallet, w);
    for (std::size_t i = 0; i < payees.size(); ++i) save_wallet(a.payees[i], payees[i]);
    print(json{{"uploaded", records}}.dump(2));
}

void run_upgrade(const WalletArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    auto w = load_wallet(a.wallet);
    auto now = a.tick.value_or(reg.clock());
    auto report = a.all ? wallet::convert_all(w, reg, now) : wallet::upgrade_holdings(w, reg, now);
    store.save(reg);
    save_wallet(a.wallet, w);
    print(conversion_json(report).dump(2));
}

}  // namespace

void add_wallet_commands(CLI::App& app) {
    auto args = std::make_shared<WalletArgs>();
    auto* cmd = app.add_subcommand("wallet", "wallet operations");
    cmd->require_subcommand(1);
    auto tick = [&](CLI::App* c) { c->add_option("--tick", args->tick, "current tick"); };
    auto state = [&](CLI::App* c) { c->add_option("--state", args->state, "register state directory")->required(); };

    auto* create = cmd->add_subcommand("create", "create a wallet and its identity certificate");
    create->add_option("--out", args->out, "wallet file")->required();
    create->add_option("--kind", args->kind)->check(CLI::IsMember({"software", "hardware"}));
    create->add_option("--generation", args->generation)->check(CLI::IsMember({"old", "new"}));
    create->add_option("--rotation", args->rotation)->check(CLI::IsMember({"fresh-address", "reuse-address"}));
    create->add_option("--issuer", args->issuer, "issuing CA certificate")->required();
    create->add_option("--issuer-classical-key", args->issuer_classical_key);
    create->add_option("--issuer-pq-key", args->issuer_pq_key);
    create->add_option("--seed", args->seed);
    create->add_option("--mss-height", args->mss_height)->check(CLI::Range(1, 16));
    create->callback([args] { run_create(*args); });

    auto* balance = cmd->add_subcommand("balance", "show holdings");
    balance->add_option("--wallet", args->wallet)->required();
    balance->add_option("--state", args->state, "reconcile against this register first");
    balance->callback([args] { run_balance(*args); });

    auto* pay = cmd->add_subcommand("pay", "pay another wallet");
    state(pay);
    tick(pay);
    pay->add_option("--from", args->from, "sender wallet file")->required();
    pay->add_option("--to", args->to, "receiver wallet file")->required();
    pay->add_option("--amount", args->amount, "cents")->required()->check(CLI::PositiveNumber);
    pay->add_flag("--offline", args->offline, "sender is offline; the payment is deferred if hardware");
    pay->callback([args] { run_pay(*args); });

    auto* upload = cmd->add_subcommand("upload", "bring a wallet online and submit deferred payments");
    state(upload);
    tick(upload);
    upload->add_option("--wallet", args->wallet)->required();
    upload->add_option("--payee", args->payees, "payee wallet files to credit");
    upload->callback([args] { run_upload(*args); });

    auto* upgrade = cmd->add_subcommand("upgrade", "convert v1 holdings to v2");
    state(upgrade);
    tick(upgrade);
    upgrade->add_option("--wallet", args->wallet)->required();
    upgrade->add_flag("--all", args->all, "convert regardless of deadlines and prompts");
    upgrade->callback([args] { run_upgrade(*args); });
}

}  // namespace pqcbdc::cli
