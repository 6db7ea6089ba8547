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

#include "pqcbdc/ledger/event_log.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"

namespace pqcbdc::detail {

json token_to_value(const ledger::Token& t) {
    return {{"id", to_hex(t.id)},
            {"value", t.value},
            {"version", t.version},
            {"owner", to_hex(t.owner)},
            {"mint_sig", to_hex(t.mint_sig.encode())}};
}

ledger::Token token_from_value(const json& v) {
    ledger::Token t;
    t.id = fixed_field<16>(v, "id");
    t.value = require(v, "value").get<ledger::Value>();
    t.version = require(v, "version").get<ledger::Version>();
    t.owner = fixed_field<32>(v, "owner");
    t.mint_sig = crypto::Signature::decode(hex_field(v, "mint_sig"));
    return t;
}

}  // namespace pqcbdc::detail

namespace pqcbdc::ledger {

using detail::json;

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Mint: return "MINT";
        case EventKind::Transfer: return "TRANSFER";
        case EventKind::Convert: return "CONVERT";
        case EventKind::Migration: return "MIGRATION";
    }
    return "UNKNOWN";
}

namespace {

EventKind parse_kind(const std::string& name) {
    for (auto k : {EventKind::Mint, EventKind::Transfer, EventKind::Convert, EventKind::Migration}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorCode::MalformedEncoding, "unknown event kind '" + name + "'");
}

}  // namespace

std::string to_json_line(const Event& e) {
    json j;
    j["event"] = std::string(to_string(e.kind));
    j["tick"] = e.tick;
    if (e.kind == EventKind::Migration) {
        j["v2_activation"] = e.migration.v2_activation;
        j["soft_deadline"] = e.migration.soft_deadline;
        j["hard_deadline"] = e.migration.hard_deadline;
        j["downgrade_allowed"] = e.migration.downgrade_allowed;
        return j.dump();
    }
    if (e.kind != EventKind::Mint) {
        j["digest"] = to_hex(e.transfer_digest);
        auto inputs = json::array();
        for (const auto& id : e.inputs) inputs.push_back(to_hex(id));
        j["inputs"] = std::move(inputs);
    }
    auto outputs = json::array();
    for (const auto& t : e.outputs) outputs.push_back(detail::token_to_value(t));
    j["outputs"] = std::move(outputs);
    return j.dump();
}

Event parse_event_line(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::MalformedEncoding, ex.what());
    }
    try {
        Event e;
        e.kind = parse_kind(detail::require(j, "event").get<std::string>());
        e.tick = detail::require(j, "tick").get<Tick>();
        if (e.kind == EventKind::Migration) {
            e.migration.v2_activation = detail::require(j, "v2_activation").get<Tick>();
            e.migration.soft_deadline = detail::require(j, "soft_deadline").get<Tick>();
            e.migration.hard_deadline = detail::require(j, "hard_deadline").get<Tick>();
            e.migration.downgrade_allowed = detail::require(j, "downgrade_allowed").get<bool>();
            return e;
        }
        if (e.kind != EventKind::Mint) {
            e.transfer_digest = detail::fixed_field<32>(j, "digest");
            for (const auto& id : detail::require(j, "inputs")) e.inputs.push_back(fixed_from_hex<16>(id.get<std::string>()));
        }
        for (const auto& t : detail::require(j, "outputs")) e.outputs.push_back(detail::token_from_value(t));
        return e;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::MalformedEncoding, ex.what());
    }
}

std::string write_log(std::span<const Event> events) {
    std::string out;
    for (const auto& e : events) {
        out += to_json_line(e);
        out += '\n';
    }
    return out;
}

std::vector<Event> read_log(std::string_view text) {
    std::vector<Event> events;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        events.push_back(parse_event_line(line));
    }
    return events;
}

AuditReport audit(std::span<const Event> events) {
    AuditReport report;
    std::map<TokenId, Token> live;
    std::set<TokenId> spent;
    Tick last_tick = std::numeric_limits<Tick>::min();

    auto note = [&](std::size_t index, const std::string& what) {
        report.problems.push_back("event " + std::to_string(index) + ": " + what);
    };

    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        if (e.tick < last_tick) note(i, "tick went backwards");
        last_tick = std::max(last_tick, e.tick);
        if (e.kind == EventKind::Migration) continue;

        Value in_value = 0;
        for (const auto& id : e.inputs) {
            if (spent.count(id)) {
                note(i, "input " + to_hex(id) + " already spent");
                continue;
            }
            auto it = live.find(id);
            if (it == live.end()) {
                note(i, "input " + to_hex(id) + " never created");
                continue;
            }
            in_value += it->second.value;
            live.erase(it);
            spent.insert(id);
        }
        Value out_value = 0;
        for (const auto& t : e.outputs) {
            if (t.value < 1) note(i, "non-positive output value");
            if (live.count(t.id) || spent.count(t.id)) note(i, "token id " + to_hex(t.id) + " reused");
            out_value += t.value;
            live[t.id] = t;
        }
        if (e.kind == EventKind::Mint) {
            report.minted += out_value;
        } else {
            if (in_value != out_value) note(i, "inputs and outputs do not balance");
            ++(e.kind == EventKind::Transfer ? report.transfers : report.conversions);
        }
    }

    for (const auto& [id, t] : live) {
        report.live_value += t.value;
        if (t.version == kClassicalVersion) report.live_v1_value += t.value;
        if (t.version == kPqVersion) report.live_v2_value += t.value;
    }
    report.live_tokens = live.size();
    report.spent_tokens = spent.size();
    return report;
}

}  // namespace pqcbdc::ledger
