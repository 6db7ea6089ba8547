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

#include "pqcbdc/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pqcbdc::sim {

using crypto::SchemeId;
using wallet::Generation;
using wallet::Kind;
using wallet::RotationPolicy;
using wallet::Wallet;

namespace {

constexpr pki::Validity kForever{0, 1'000'000'000'000};

const ScenarioConfig& checked(const ScenarioConfig& config) {
    auto issues = validate(config);
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return config;
}

crypto::Drbg stream(const ScenarioConfig& config, std::string_view label) {
    return crypto::Drbg(config.seed).fork(label);
}

int ca_height(int n_wallets) {
    // Room for every wallet certificate twice (adoption re-issues) plus the register.
    int h = 2;
    while ((std::int64_t{1} << h) < 2 * static_cast<std::int64_t>(n_wallets) + 8) ++h;
    return std::min(h, crypto::mss::kMaxHeight);
}

crypto::KeyPair ca_pq_key(crypto::Drbg& rng, const ScenarioConfig& config) {
    crypto::SchemeConfig cfg;
    cfg.mss_height = ca_height(config.n_wallets);
    return crypto::keygen(SchemeId::PqMss, rng, cfg);
}

ledger::RegisterConfig register_config(const ScenarioConfig& config) {
    ledger::RegisterConfig rc;
    rc.receipt_tree_height = config.register_tree_height;
    return rc;
}

std::size_t share(double fraction, std::size_t n) {
    return std::min(n, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n))));
}

// Exactly k of the given indices, chosen uniformly.
std::vector<bool> choose(std::vector<std::size_t> candidates, std::size_t k, std::size_t n, crypto::Drbg& rng) {
    std::vector<bool> out(n, false);
    k = std::min(k, candidates.size());
    for (std::size_t i = 0; i < k; ++i) {
        auto j = i + rng.uniform(candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        out[candidates[i]] = true;
    }
    return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

World::World(ScenarioConfig config)
    : config_(checked(config)),
      workload_rng_(stream(config_, "workload")),
      adoption_rng_(stream(config_, "adoption")),
      pki_rng_(stream(config_, "pki")),
      ca_classical_(crypto::keygen(SchemeId::ClassicalSchnorr, pki_rng_)),
      ca_pq_(ca_pq_key(pki_rng_, config_)),
      root_cert_(pki::issue_root("root-ca", {&ca_classical_, &ca_pq_}, kForever, pki_rng_)),
      register_(stream(config_, "register"), register_config(config_)) {
    register_.set_migration(config_.v2_activation, config_.soft_deadline, config_.hard_deadline,
                            config_.downgrade_allowed);
    register_cert_ = pki::issue(root_cert_, {&ca_classical_, &ca_pq_}, "register",
                                pki::SubjectKeys{std::nullopt, pki::PqExtension{SchemeId::PqMss, register_.public_key()}},
                                pki::Role::Register, kForever, pki_rng_);
    attacker_.attacker_addr = ledger::address_of(as_bytes("quantum-attacker"));

    const auto n = static_cast<std::size_t>(config_.n_wallets);
    auto assign = stream(config_, "assign");
    auto hardware = choose(all_indices(n), share(config_.hardware_fraction, n), n, assign);
    auto is_new = choose(all_indices(n), share(config_.initial_new_fraction, n), n, assign);
    auto reuse = choose(all_indices(n), share(config_.reuse_fraction, n), n, assign);
    std::vector<std::size_t> old_ones;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_new[i]) old_ones.push_back(i);
    }
    never_upgrade_ = choose(old_ones, share(config_.never_upgrade_fraction, n), n, assign);

    auto wallet_rng = stream(config_, "wallets");
    wallet::WalletOptions options;
    options.mss_height = config_.mss_height;
    options.validity = kForever;
    wallets_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        wallet::Profile profile{hardware[i] ? Kind::Hardware : Kind::Software,
                                is_new[i] ? Generation::New : Generation::Old, true};
        auto rotation = reuse[i] ? RotationPolicy::ReuseAddress
                                 : (hardware[i] ? config_.hardware_rotation : config_.software_rotation);
        wallets_.push_back(Wallet::create(profile, rotation, root_cert_, {&ca_classical_, &ca_pq_}, wallet_rng, options));
        index_of_[wallets_.back().id()] = i;
        duty_phase_.push_back(hardware[i] ? static_cast<int>(assign.uniform(config_.hardware_duty_cycle)) : -1);
    }

    for (auto& w : wallets_) {
        auto token = register_.mint(config_.genesis_value, w.receive_address(ledger::kClassicalVersion),
                                    ledger::kClassicalVersion);
        w.receive_minted(token, register_.public_key());
    }
}

void World::observe(const Address& owner, Tick tick) {
    if (!revealed_.insert(owner).second || !attacker_enabled()) return;
    attacker_.pending.push_back({owner, std::max(tick + *config_.attacker_break_delay, config_.attacker_start_tick)});
}

void World::ingest_reveal_log() {
    const auto& log = register_.reveal_log();
    for (; reveal_cursor_ < log.size(); ++reveal_cursor_) {
        const auto& entry = log[reveal_cursor_];
        if (entry.scheme == SchemeId::ClassicalSchnorr) observe(ledger::address_of(entry.public_key), entry.tick);
    }
}

void World::attack(MetricsRow& row) {
    if (!attacker_enabled() || tick_ < config_.attacker_start_tick) return;
    while (!attacker_.pending.empty() && attacker_.pending.front().break_tick <= tick_) {
        auto owner = attacker_.pending.front().owner;
        attacker_.pending.pop_front();
        // The Shor oracle: the private key behind a revealed classical public key.
        for (const auto& w : wallets_) {
            if (const auto* key = w.key_for(owner)) {
                attacker_.broken.emplace(owner, key->duplicate());
                break;
            }
        }
    }
    if (attacker_.broken.empty()) return;

    std::map<Address, std::vector<const ledger::Token*>> targets;
    for (const auto& [id, token] : register_.live()) {
        if (attacker_.broken.count(token.owner)) targets[token.owner].push_back(&token);
    }
    bool stole = false;
    for (const auto& [owner, tokens] : targets) {
        auto& key = attacker_.broken.at(owner);
        ledger::TransferRequest req;
        Value total = 0;
        for (const auto* t : tokens) {
            req.inputs.push_back({t->id, key.public_key, {}});
            total += t->value;
        }
        req.outputs.push_back({total, attacker_.attacker_addr, ledger::kClassicalVersion});
        const auto digest = req.digest();
        for (auto& in : req.inputs) in.signature = crypto::sign(key, digest);
        try {
            register_.validate_transfer(req, tick_);
            attacker_.stolen_value += total;
            ++attacker_.forged_transfers;
            stole = true;
        } catch (const Error&) {
            ++attacker_.failed_forgeries;
        }
    }
    if (stole) {
        for (auto& w : wallets_) w.reconcile(register_);
    }
    row.thefts_value = attacker_.stolen_value;
}

void World::settle(PendingTransfer& p, Tick now, MetricsRow& row) {
    auto& sender = wallets_[p.sender];
    auto& receiver = wallets_[p.receiver];
    ledger::Receipt receipt;
    try {
        receipt = wallet::submit_payment(register_, p.payment, now);
    } catch (const Error& e) {
        wallet::abort_payment(sender, p.payment, register_);
        row.count_failure(e.code());
        return;
    }
    wallet::complete_payment(sender, receiver, p.payment, receipt, register_);
    ++row.tx[static_cast<std::size_t>(p.payment.label)];
    ++stats_.successful_transfers;
}

void World::settle_due(MetricsRow& row) {
    while (!pending_.empty() && pending_.front().settle_tick <= tick_) {
        settle(pending_.front(), tick_, row);
        pending_.pop_front();
    }
}

void World::workload(MetricsRow& row) {
    const auto n = wallets_.size();
    for (int k = 0; k < config_.tx_per_tick; ++k) {
        auto s = static_cast<std::size_t>(workload_rng_.uniform(n));
        auto r = static_cast<std::size_t>(workload_rng_.uniform(n - 1));
        if (r >= s) ++r;
        auto amount = workload_rng_.uniform_int(config_.amount_distribution.min, config_.amount_distribution.max);

        auto& sender = wallets_[s];
        wallet::PreparedPayment p;
        try {
            p = wallet::prepare_payment(sender, wallets_[r], amount, register_, tick_);
        } catch (const Error& e) {
            row.count_failure(e.code());
            continue;
        }
        if (!sender.online()) {
            wallet::defer_payment(sender, p, tick_);
            ++stats_.deferred_created;
            continue;
        }
        // On the wire from now on.
        for (const auto& in : p.request.inputs) {
            if (in.signature.scheme == SchemeId::ClassicalSchnorr) observe(ledger::address_of(in.owner_public_key), tick_);
        }
        PendingTransfer pt{std::move(p), s, r, tick_, tick_ + config_.finality_delay};
        if (config_.finality_delay == 0) {
            settle(pt, tick_, row);
        } else {
            pending_.push_back(std::move(pt));
        }
    }
}

void World::adopt() {
    if (tick_ < config_.v2_activation) return;
    adoption_credit_ += config_.adoption_rate;
    while (adoption_credit_ >= 1.0) {
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < wallets_.size(); ++i) {
            if (wallets_[i].profile().generation == Generation::Old && !never_upgrade_[i]) candidates.push_back(i);
        }
        if (candidates.empty()) {
            adoption_credit_ = 0;
            return;
        }
        auto pick = candidates[adoption_rng_.uniform(candidates.size())];
        wallets_[pick].adopt_new_generation(root_cert_, {&ca_classical_, &ca_pq_});
        ++stats_.adoptions;
        adoption_credit_ -= 1.0;
    }
}

void World::uploads(MetricsRow& row) {
    for (auto& w : wallets_) {
        if (w.profile().kind != Kind::Hardware || !w.online() || w.deferred().empty()) continue;
        for (auto& result : wallet::upload_deferred(w, register_, tick_)) {
            ++stats_.uploads;
            if (!result.receipt) {
                row.count_failure(*result.error);
                continue;
            }
            ++row.tx[static_cast<std::size_t>(result.record.label)];
            ++stats_.successful_transfers;
            auto it = index_of_.find(result.record.receiver);
            if (it != index_of_.end()) wallets_[it->second].accept_outputs(register_, *result.receipt);
        }
    }
}

void World::upgrades(MetricsRow& row) {
    for (auto& w : wallets_) {
        auto report = wallet::upgrade_holdings(w, register_, tick_);
        stats_.conversions += report.converted;
        for (const auto& [id, code] : report.failures) row.count_failure(code);
    }
}

void World::measure(MetricsRow& row) const {
    for (const auto& [id, token] : register_.live()) {
        if (token.owner == attacker_.attacker_addr) continue;
        if (token.version == ledger::kClassicalVersion) {
            row.live_v1_value += token.value;
            if (revealed_.count(token.owner)) row.at_risk_value += token.value;
        } else {
            row.live_v2_value += token.value;
        }
    }
    row.thefts_value = attacker_.stolen_value;
    row.stranded_value = tick_ > config_.hard_deadline ? row.live_v1_value : 0;
}

void World::step() {
    ++tick_;
    register_.advance_clock(tick_);
    for (std::size_t i = 0; i < wallets_.size(); ++i) {
        if (duty_phase_[i] >= 0) {
            wallets_[i].set_online((tick_ + duty_phase_[i]) % config_.hardware_duty_cycle == 0);
        }
    }

    MetricsRow row;
    row.tick = tick_;
    attack(row);
    settle_due(row);
    workload(row);
    ingest_reveal_log();
    adopt();
    uploads(row);
    upgrades(row);
    ingest_reveal_log();
    measure(row);
    series_.rows.push_back(row);
}

MetricsSeries run(const ScenarioConfig& config) {
    World world(config);
    while (!world.finished()) world.step();
    return world.series();
}

}  // namespace pqcbdc::sim
