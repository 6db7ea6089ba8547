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

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/ledger/register.hpp"
#include "pqcbdc/pki/pki.hpp"
#include "pqcbdc/sim/metrics.hpp"
#include "pqcbdc/sim/scenario.hpp"
#include "pqcbdc/wallet/payment.hpp"

namespace pqcbdc::sim {

using ledger::Address;

struct PendingBreak {
    Address owner{};
    Tick break_tick = 0;
};

struct AttackerState {
    std::deque<PendingBreak> pending;
    std::map<Address, crypto::KeyPair> broken;  // private keys recovered so far
    Value stolen_value = 0;
    Address attacker_addr{};
    std::size_t forged_transfers = 0;
    std::size_t failed_forgeries = 0;
};

struct PendingTransfer {
    wallet::PreparedPayment payment;
    std::size_t sender = 0;
    std::size_t receiver = 0;
    Tick submit_tick = 0;
    Tick settle_tick = 0;
};

struct WorldStats {
    std::size_t successful_transfers = 0;
    std::size_t deferred_created = 0;
    std::size_t uploads = 0;
    std::size_t conversions = 0;
    std::size_t adoptions = 0;
};

/// Genesis happens in the constructor (tick 0); each step() advances one tick:
/// attack, settle, workload, adoption, uploads and upgrades, metrics.
class World {
public:
    explicit World(ScenarioConfig config);

    void step();
    bool finished() const { return tick_ >= config_.total_ticks; }
    Tick now() const { return tick_; }

    const ScenarioConfig& config() const { return config_; }
    const ledger::Register& ledger() const { return register_; }
    const std::vector<wallet::Wallet>& wallets() const { return wallets_; }
    const AttackerState& attacker() const { return attacker_; }
    const MetricsSeries& series() const { return series_; }
    const WorldStats& stats() const { return stats_; }
    const std::vector<bool>& never_upgrade() const { return never_upgrade_; }
    const std::set<Address>& revealed() const { return revealed_; }
    const pki::Certificate& root_certificate() const { return root_cert_; }
    const pki::Certificate& register_certificate() const { return register_cert_; }
    std::size_t pending_transfers() const { return pending_.size(); }
    Value minted() const { return register_.minted_value(); }

private:
    void observe(const Address& owner, Tick tick);
    void ingest_reveal_log();
    void attack(MetricsRow& row);
    void settle(PendingTransfer& p, Tick now, MetricsRow& row);
    void settle_due(MetricsRow& row);
    void workload(MetricsRow& row);
    void adopt();
    void uploads(MetricsRow& row);
    void upgrades(MetricsRow& row);
    void measure(MetricsRow& row) const;
    bool attacker_enabled() const { return config_.attacker_break_delay.has_value(); }

    ScenarioConfig config_;
    crypto::Drbg workload_rng_;
    crypto::Drbg adoption_rng_;
    crypto::Drbg pki_rng_;
    crypto::KeyPair ca_classical_;
    crypto::KeyPair ca_pq_;
    pki::Certificate root_cert_;
    ledger::Register register_;
    pki::Certificate register_cert_;
    std::vector<wallet::Wallet> wallets_;
    std::map<wallet::WalletId, std::size_t> index_of_;
    std::vector<bool> never_upgrade_;
    std::vector<int> duty_phase_;  // -1 for software wallets
    std::deque<PendingTransfer> pending_;
    AttackerState attacker_;
    std::set<Address> revealed_;
    std::size_t reveal_cursor_ = 0;
    double adoption_credit_ = 0;
    Tick tick_ = 0;
    MetricsSeries series_;
    WorldStats stats_;
};

// Pure function of the config: identical configs give identical series.
MetricsSeries run(const ScenarioConfig& config);

}  // namespace pqcbdc::sim
