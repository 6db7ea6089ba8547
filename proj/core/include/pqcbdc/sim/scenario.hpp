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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/error.hpp"
#include "pqcbdc/ledger/token.hpp"
#include "pqcbdc/wallet/wallet.hpp"

namespace pqcbdc::sim {

using ledger::Tick;
using ledger::Value;

struct AmountDistribution {
    Value min = 1;
    Value max = 1;
};

struct ScenarioConfig {
    crypto::Seed seed{};
    int n_wallets = 0;
    double hardware_fraction = 0;
    double initial_new_fraction = 0;
    double adoption_rate = 0;
    int tx_per_tick = 0;
    AmountDistribution amount_distribution;
    wallet::RotationPolicy software_rotation = wallet::RotationPolicy::FreshAddress;
    wallet::RotationPolicy hardware_rotation = wallet::RotationPolicy::FreshAddress;
    double reuse_fraction = 0.65;
    Tick finality_delay = 0;
    std::optional<Tick> attacker_break_delay;  // nullopt: no attacker
    Tick v2_activation = 0;
    Tick soft_deadline = 0;
    Tick hard_deadline = 0;
    bool downgrade_allowed = false;
    Tick total_ticks = 0;

    // Optional, with these defaults.
    Value genesis_value = 10000;
    int hardware_duty_cycle = 10;  // hardware wallets are online 1 tick in N
    int register_tree_height = 16;
    int mss_height = 8;
    double never_upgrade_fraction = 0;
    Tick attacker_start_tick = 0;
};

struct FieldIssue {
    std::string field;
    std::string message;
};

class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<FieldIssue> issues);
    const std::vector<FieldIssue>& issues() const { return issues_; }

private:
    std::vector<FieldIssue> issues_;
};

// Every problem found, not just the first.
std::vector<FieldIssue> validate(const ScenarioConfig& config);

// Parses the JSON scenario file. Unknown or missing fields, wrong types and
// failed validation all raise ConfigError.
ScenarioConfig parse_config(std::string_view json_text);
std::string to_json(const ScenarioConfig& config);

// `--seed` accepts 64 hex digits or a label hashed into a seed.
crypto::Seed parse_seed(std::string_view text);

}  // namespace pqcbdc::sim
