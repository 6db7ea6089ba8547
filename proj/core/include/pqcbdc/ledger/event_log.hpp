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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbdc/ledger/token.hpp"

namespace pqcbdc::ledger {

struct MigrationSchedule {
    Tick v2_activation = 0;
    Tick soft_deadline = 0;
    Tick hard_deadline = 0;
    bool downgrade_allowed = false;

    friend bool operator==(const MigrationSchedule&, const MigrationSchedule&) = default;
};

enum class EventKind { Mint, Transfer, Convert, Migration };

std::string_view to_string(EventKind kind);

struct Event {
    EventKind kind = EventKind::Mint;
    Tick tick = 0;
    Digest transfer_digest{};        // TRANSFER / CONVERT
    std::vector<TokenId> inputs;     // TRANSFER / CONVERT
    std::vector<Token> outputs;      // every kind but MIGRATION
    MigrationSchedule migration;     // MIGRATION

    friend bool operator==(const Event&, const Event&) = default;
};

// One JSON object per line, binary fields hex-encoded.
std::string to_json_line(const Event& event);
Event parse_event_line(std::string_view line);

std::string write_log(std::span<const Event> events);
std::vector<Event> read_log(std::string_view text);

struct AuditReport {
    Value minted = 0;
    Value live_value = 0;
    Value live_v1_value = 0;
    Value live_v2_value = 0;
    std::size_t live_tokens = 0;
    std::size_t spent_tokens = 0;
    std::size_t transfers = 0;
    std::size_t conversions = 0;
    std::vector<std::string> problems;  // empty when the log is consistent

    bool consistent() const { return problems.empty() && minted == live_value; }
};

// Independent fold over the log; shares no code with the register itself.
AuditReport audit(std::span<const Event> events);

}  // namespace pqcbdc::ledger
