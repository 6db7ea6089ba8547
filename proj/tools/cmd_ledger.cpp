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
#include "pqcbdc/ledger/event_log.hpp"
#include "pqcbdc/ledger/register.hpp"

namespace pqcbdc::cli {

namespace {

struct LedgerArgs {
    std::string state = "register-state";
    std::string seed = "0";
    int tree_height = 16;
    int value_scale = 2;
    ledger::Tick v2_activation = 0, soft_deadline = 0, hard_deadline = 0;
    bool downgrade_allowed = false;
    std::optional<ledger::Tick> tick;

    ledger::Value value = 0;
    int version = ledger::kClassicalVersion;
    std::string owner;
    std::string wallet;
    std::string request;
    std::string token;
    std::string key;
    std::string log;
};

void at_tick(ledger::Register& reg, const std::optional<ledger::Tick>& tick) {
    if (tick) reg.advance_clock(*tick);
}

void run_init(const LedgerArgs& a) {
    RegisterStore store{a.state};
    if (store.exists()) throw OpError("STATE_EXISTS: " + a.state + " already holds a register");
    ledger::RegisterConfig config;
    config.receipt_tree_height = a.tree_height;
    config.value_scale = a.value_scale;
    ledger::Register reg(rng_from(a.seed), config);
    store.save(reg);
    print(json{{"state", a.state}, {"public_key", to_hex(reg.public_key())},
               {"signatures_remaining", reg.signatures_remaining()}}
              .dump(2));
}

void run_schedule(const LedgerArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    at_tick(reg, a.tick);
    reg.set_migration(a.v2_activation, a.soft_deadline, a.hard_deadline, a.downgrade_allowed);
    store.save(reg);
    print(json{{"v2_activation", a.v2_activation}, {"soft_deadline", a.soft_deadline},
               {"hard_deadline", a.hard_deadline}, {"downgrade_allowed", a.downgrade_allowed}}
              .dump(2));
}

void run_status(const LedgerArgs& a) {
    auto reg = RegisterStore{a.state}.load();
    auto t = a.tick.value_or(reg.clock());
    json out{{"clock", reg.clock()},
             {"supported_versions", versions_json(reg.supported_versions(t))},
             {"minted", reg.minted_value()},
             {"live_value", reg.live_value()},
             {"live_v1_value", reg.live_value(ledger::kClassicalVersion)},
             {"live_v2_value", reg.live_value(ledger::kPqVersion)},
             {"live_tokens", reg.live().size()},
             {"spent_tokens", reg.spent().size()},
             {"signatures_remaining", reg.signatures_remaining()}};
    if (reg.migration() && t > reg.migration()->hard_deadline) out["stranded_value"] = reg.stranded_value(t);
    print(out.dump(2));
}

void run_mint(const LedgerArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    at_tick(reg, a.tick);
    if (a.owner.empty() == a.wallet.empty()) throw CLI::ValidationError("mint", "give exactly one of --owner, --wallet");
    if (!a.wallet.empty()) {
        auto w = load_wallet(a.wallet);
        auto token = reg.mint(a.value, w.receive_address(a.version), a.version);
        w.receive_minted(token, reg.public_key());
        store.save(reg);
        save_wallet(a.wallet, w);
        return print(token_json(token).dump(2));
    }
    auto token = reg.mint(a.value, fixed_from_hex<32>(a.owner), a.version);
    store.save(reg);
    print(token_json(token).dump(2));
}

void run_transfer(const LedgerArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    auto text = read_file(a.request);
    text.erase(text.find_last_not_of(" \t\r\n") + 1);
    auto request = ledger::TransferRequest::decode(from_hex(text));
    auto receipt = reg.validate_transfer(request, a.tick.value_or(reg.clock()));
    store.save(reg);
    print(receipt_json(receipt).dump(2));
}

void run_convert(const LedgerArgs& a) {
    RegisterStore store{a.state};
    auto reg = store.load();
    auto key = load_key(a.key);
    auto id = fixed_from_hex<16>(a.token);
    auto owner = fixed_from_hex<32>(a.owner);
    auto req = reg.conversion_request(id, a.version, owner);
    auto sig = crypto::sign(key, req.digest());
    auto token = reg.convert_version(id, key.public_key, sig, a.version, owner, a.tick.value_or(reg.clock()));
    store.save(reg);
    save_key(a.key, key);
    print(token_json(token).dump(2));
}

void run_audit(const LedgerArgs& a) {
    auto text = a.log.empty() ? read_file(a.state + "/events.jsonl") : read_file(a.log);
    auto events = ledger::read_log(text);
    auto report = ledger::audit(events);
    json problems = report.problems;
    print(json{{"events", events.size()},
               {"minted", report.minted},
               {"live_value", report.live_value},
               {"live_v1_value", report.live_v1_value},
               {"live_v2_value", report.live_v2_value},
               {"live_tokens", report.live_tokens},
               {"spent_tokens", report.spent_tokens},
               {"transfers", report.transfers},
               {"conversions", report.conversions},
               {"problems", problems},
               {"consistent", report.consistent()}}
              .dump(2));
    if (!report.consistent()) throw OpError("AUDIT_MISMATCH: event log does not balance");
}

}  // namespace

void add_ledger_commands(CLI::App& app) {
    auto args = std::make_shared<LedgerArgs>();
    auto state = [&](CLI::App* cmd) { cmd->add_option("--state", args->state, "register state directory"); };
    auto tick = [&](CLI::App* cmd) { cmd->add_option("--tick", args->tick, "current tick"); };

    auto* reg = app.add_subcommand("register", "set up and inspect register state");
    reg->require_subcommand(1);
    auto* init = reg->add_subcommand("init", "create a register with a fresh receipt key");
    state(init);
    init->add_option("--seed", args->seed);
    init->add_option("--tree-height", args->tree_height, "receipt key MSS height")->check(CLI::Range(1, 16));
    init->add_option("--value-scale", args->value_scale, "decimal digits per unit")->check(CLI::Range(0, 18));
    init->callback([args] { run_init(*args); });

    auto* sched = reg->add_subcommand("schedule", "set the migration timeline");
    state(sched);
    tick(sched);
    sched->add_option("--v2-activation", args->v2_activation)->required();
    sched->add_option("--soft-deadline", args->soft_deadline)->required();
    sched->add_option("--hard-deadline", args->hard_deadline)->required();
    sched->add_flag("--downgrade-allowed", args->downgrade_allowed);
    sched->callback([args] { run_schedule(*args); });

    auto* status = reg->add_subcommand("status", "summarize register state");
    state(status);
    tick(status);
    status->callback([args] { run_status(*args); });

    auto* mint = app.add_subcommand("mint", "mint a token");
    state(mint);
    tick(mint);
    mint->add_option("--value", args->value, "cents")->required();
    mint->add_option("--version", args->version)->check(CLI::IsMember({1, 2}));
    mint->add_option("--owner", args->owner, "owner address (hex)");
    mint->add_option("--wallet", args->wallet, "credit a fresh address of this wallet file");
    mint->callback([args] { run_mint(*args); });

    auto* transfer = app.add_subcommand("transfer", "validate an encoded transfer request");
    state(transfer);
    tick(transfer);
    transfer->add_option("--request", args->request, "file with the hex-encoded request")->required();
    transfer->callback([args] { run_transfer(*args); });

    auto* convert = app.add_subcommand("convert", "convert a token to another version");
    state(convert);
    tick(convert);
    convert->add_option("--token", args->token, "token id (hex)")->required();
    convert->add_option("--key", args->key, "owner key file")->required();
    convert->add_option("--version", args->version, "target version")->check(CLI::IsMember({1, 2}))->required();
    convert->add_option("--owner", args->owner, "new owner address (hex)")->required();
    convert->callback([args] { run_convert(*args); });

    auto* audit = app.add_subcommand("audit", "fold the event log and check it balances");
    state(audit);
    audit->add_option("--log", args->log, "event log file; defaults to <state>/events.jsonl");
    audit->callback([args] { run_audit(*args); });
}

}  // namespace pqcbdc::cli
