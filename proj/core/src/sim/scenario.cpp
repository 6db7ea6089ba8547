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

#include "pqcbdc/sim/scenario.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "pqcbdc/crypto/mss.hpp"

namespace pqcbdc::sim {

using nlohmann::json;

namespace {

std::string describe(const std::vector<FieldIssue>& issues) {
    std::string out;
    for (const auto& i : issues) {
        if (!out.empty()) out += "; ";
        out += i.field + ": " + i.message;
    }
    return out;
}

const std::set<std::string>& required_fields() {
    static const std::set<std::string> fields{
        "seed",          "n_wallets",          "hardware_fraction", "initial_new_fraction", "adoption_rate",
        "tx_per_tick",   "amount_distribution", "rotation_policy",  "finality_delay",       "attacker_break_delay",
        "v2_activation", "soft_deadline",      "hard_deadline",     "downgrade_allowed",    "total_ticks"};
    return fields;
}

const std::set<std::string>& optional_fields() {
    static const std::set<std::string> fields{"reuse_fraction",       "genesis_value", "hardware_duty_cycle",
                                              "register_tree_height", "mss_height",    "never_upgrade_fraction",
                                              "attacker_start_tick"};
    return fields;
}

class Reader {
public:
    explicit Reader(const json& root) : root_(root) {}

    std::vector<FieldIssue>& issues() { return issues_; }

    template <typename T>
    void read(const char* field, T& out, bool required = true) {
        if (!root_.contains(field)) {
            if (required) issues_.push_back({field, "missing"});
            return;
        }
        fetch(field, root_.at(field), out);
    }

    template <typename T>
    void fetch(const std::string& field, const json& v, T& out) {
        if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) return bad(field, "expected true or false");
        } else if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer()) return bad(field, "expected an integer");
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!v.is_number()) return bad(field, "expected a number");
        }
        out = v.get<T>();
    }

    void bad(const std::string& field, const std::string& message) { issues_.push_back({field, message}); }

private:
    const json& root_;
    std::vector<FieldIssue> issues_;
};

bool fraction_ok(double f) { return std::isfinite(f) && f >= 0.0 && f <= 1.0; }

}  // namespace

ConfigError::ConfigError(std::vector<FieldIssue> issues)
    : Error(ErrorCode::ConfigInvalid, describe(issues)), issues_(std::move(issues)) {}

std::vector<FieldIssue> validate(const ScenarioConfig& c) {
    std::vector<FieldIssue> out;
    auto check = [&](bool ok, const char* field, const char* message) {
        if (!ok) out.push_back({field, message});
    };
    check(c.n_wallets >= 2, "n_wallets", "need at least 2 wallets");
    check(fraction_ok(c.hardware_fraction), "hardware_fraction", "must lie in [0,1]");
    check(fraction_ok(c.initial_new_fraction), "initial_new_fraction", "must lie in [0,1]");
    check(fraction_ok(c.reuse_fraction), "reuse_fraction", "must lie in [0,1]");
    check(fraction_ok(c.never_upgrade_fraction), "never_upgrade_fraction", "must lie in [0,1]");
    check(std::isfinite(c.adoption_rate) && c.adoption_rate >= 0, "adoption_rate", "must be >= 0");
    check(c.tx_per_tick >= 0, "tx_per_tick", "must be >= 0");
    check(c.amount_distribution.min >= 1, "amount_distribution.min", "must be >= 1");
    check(c.amount_distribution.max >= c.amount_distribution.min, "amount_distribution.max", "must be >= min");
    check(c.finality_delay >= 0, "finality_delay", "must be >= 0");
    check(!c.attacker_break_delay || *c.attacker_break_delay >= 0, "attacker_break_delay", "must be >= 0 or null");
    check(c.v2_activation >= 0, "v2_activation", "must be >= 0");
    check(c.v2_activation <= c.soft_deadline, "soft_deadline", "must not precede v2_activation");
    check(c.soft_deadline <= c.hard_deadline, "hard_deadline", "must not precede soft_deadline");
    check(c.total_ticks >= 1, "total_ticks", "must be >= 1");
    check(c.genesis_value >= 1, "genesis_value", "must be >= 1");
    check(c.hardware_duty_cycle >= 1, "hardware_duty_cycle", "must be >= 1");
    check(c.register_tree_height >= crypto::mss::kMinHeight && c.register_tree_height <= crypto::mss::kMaxHeight,
          "register_tree_height", "outside the supported MSS heights");
    check(c.mss_height >= crypto::mss::kMinHeight && c.mss_height <= crypto::mss::kMaxHeight, "mss_height",
          "outside the supported MSS heights");
    check(c.attacker_start_tick >= 0, "attacker_start_tick", "must be >= 0");
    return out;
}

crypto::Seed parse_seed(std::string_view text) {
    if (text.size() == 64) {
        try {
            return fixed_from_hex<32>(text);
        } catch (const Error&) {
        }
    }
    return crypto::Drbg::from_label(text).seed();
}

ScenarioConfig parse_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw ConfigError(std::vector<FieldIssue>{{"<file>", std::string("not valid JSON: ") + ex.what()}});
    }
    if (!root.is_object()) throw ConfigError(std::vector<FieldIssue>{{"<file>", "top level must be an object"}});

    ScenarioConfig c;
    Reader r(root);
    for (const auto& [key, value] : root.items()) {
        if (!required_fields().count(key) && !optional_fields().count(key)) r.bad(key, "unknown field");
    }

    if (root.contains("seed")) {
        const auto& s = root.at("seed");
        if (s.is_string() && s.get<std::string>().size() == 64) {
            try {
                c.seed = fixed_from_hex<32>(s.get<std::string>());
            } catch (const Error&) {
                r.bad("seed", "expected 64 hex digits");
            }
        } else {
            r.bad("seed", "expected 64 hex digits");
        }
    } else {
        r.bad("seed", "missing");
    }

    r.read("n_wallets", c.n_wallets);
    r.read("hardware_fraction", c.hardware_fraction);
    r.read("initial_new_fraction", c.initial_new_fraction);
    r.read("adoption_rate", c.adoption_rate);
    r.read("tx_per_tick", c.tx_per_tick);
    r.read("finality_delay", c.finality_delay);
    r.read("v2_activation", c.v2_activation);
    r.read("soft_deadline", c.soft_deadline);
    r.read("hard_deadline", c.hard_deadline);
    r.read("downgrade_allowed", c.downgrade_allowed);
    r.read("total_ticks", c.total_ticks);
    r.read("reuse_fraction", c.reuse_fraction, false);
    r.read("genesis_value", c.genesis_value, false);
    r.read("hardware_duty_cycle", c.hardware_duty_cycle, false);
    r.read("register_tree_height", c.register_tree_height, false);
    r.read("mss_height", c.mss_height, false);
    r.read("never_upgrade_fraction", c.never_upgrade_fraction, false);
    r.read("attacker_start_tick", c.attacker_start_tick, false);

    if (!root.contains("attacker_break_delay")) {
        r.bad("attacker_break_delay", "missing (use null for no attacker)");
    } else if (!root.at("attacker_break_delay").is_null()) {
        Tick d = 0;
        r.fetch("attacker_break_delay", root.at("attacker_break_delay"), d);
        c.attacker_break_delay = d;
    }

    if (!root.contains("amount_distribution")) {
        r.bad("amount_distribution", "missing");
    } else {
        const auto& a = root.at("amount_distribution");
        if (!a.is_object() || a.value("type", std::string{}) != "uniform") {
            r.bad("amount_distribution", "expected {\"type\": \"uniform\", \"min\": .., \"max\": ..}");
        } else {
            for (const auto& [key, value] : a.items()) {
                if (key != "type" && key != "min" && key != "max") r.bad("amount_distribution." + key, "unknown field");
            }
            if (!a.contains("min")) r.bad("amount_distribution.min", "missing");
            else r.fetch("amount_distribution.min", a.at("min"), c.amount_distribution.min);
            if (!a.contains("max")) r.bad("amount_distribution.max", "missing");
            else r.fetch("amount_distribution.max", a.at("max"), c.amount_distribution.max);
        }
    }

    if (!root.contains("rotation_policy")) {
        r.bad("rotation_policy", "missing");
    } else {
        const auto& rp = root.at("rotation_policy");
        if (!rp.is_object()) {
            r.bad("rotation_policy", "expected {\"software\": .., \"hardware\": ..}");
        } else {
            for (const auto& [key, value] : rp.items()) {
                if (key != "software" && key != "hardware") r.bad("rotation_policy." + key, "unknown wallet class");
            }
            auto policy = [&](const char* cls, wallet::RotationPolicy& out) {
                std::string field = std::string("rotation_policy.") + cls;
                if (!rp.contains(cls)) return r.bad(field, "missing");
                try {
                    out = wallet::parse_rotation(rp.at(cls).get<std::string>());
                } catch (const std::exception&) {
                    r.bad(field, "expected \"fresh-address\" or \"reuse-address\"");
                }
            };
            policy("software", c.software_rotation);
            policy("hardware", c.hardware_rotation);
        }
    }

    auto issues = std::move(r.issues());
    if (issues.empty()) issues = validate(c);
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return c;
}

std::string to_json(const ScenarioConfig& c) {
    nlohmann::ordered_json j;
    j["seed"] = to_hex(c.seed);
    j["n_wallets"] = c.n_wallets;
    j["hardware_fraction"] = c.hardware_fraction;
    j["initial_new_fraction"] = c.initial_new_fraction;
    j["adoption_rate"] = c.adoption_rate;
    j["tx_per_tick"] = c.tx_per_tick;
    j["amount_distribution"] = {{"type", "uniform"}, {"min", c.amount_distribution.min},
                                {"max", c.amount_distribution.max}};
    j["rotation_policy"] = {{"software", std::string(wallet::to_string(c.software_rotation))},
                            {"hardware", std::string(wallet::to_string(c.hardware_rotation))}};
    j["reuse_fraction"] = c.reuse_fraction;
    j["finality_delay"] = c.finality_delay;
    j["attacker_break_delay"] = c.attacker_break_delay ? json(*c.attacker_break_delay) : json(nullptr);
    j["v2_activation"] = c.v2_activation;
    j["soft_deadline"] = c.soft_deadline;
    j["hard_deadline"] = c.hard_deadline;
    j["downgrade_allowed"] = c.downgrade_allowed;
    j["total_ticks"] = c.total_ticks;
    j["genesis_value"] = c.genesis_value;
    j["hardware_duty_cycle"] = c.hardware_duty_cycle;
    j["register_tree_height"] = c.register_tree_height;
    j["mss_height"] = c.mss_height;
    j["never_upgrade_fraction"] = c.never_upgrade_fraction;
    j["attacker_start_tick"] = c.attacker_start_tick;
    return j.dump(2);
}

}  // namespace pqcbdc::sim
