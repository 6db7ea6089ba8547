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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbdc/error.hpp"
#include "pqcbdc/ledger/token.hpp"
#include "pqcbdc/wallet/wallet.hpp"

namespace pqcbdc::sim {

using ledger::Tick;
using ledger::Value;

// Failure columns, in order. Anything else lands in the trailing "other" column.
inline constexpr std::array<ErrorCode, 8> kTrackedErrors{
    ErrorCode::InsufficientFunds,   ErrorCode::NoCommonVersion,        ErrorCode::DowngradeRequired,
    ErrorCode::DoubleSpend,         ErrorCode::TokenVersionExpired,    ErrorCode::UnsupportedVersion,
    ErrorCode::VersionDowngradeForbidden, ErrorCode::RegisterKeyExhausted};

inline constexpr std::size_t kCaseCount = 8;
inline constexpr std::size_t kFailureColumns = kTrackedErrors.size() + 1;

struct MetricsRow {
    Tick tick = 0;
    Value live_v1_value = 0;
    Value live_v2_value = 0;
    std::array<std::int64_t, kCaseCount> tx{};  // indexed by PaymentCase
    std::array<std::int64_t, kFailureColumns> failures{};
    Value thefts_value = 0;    // cumulative value moved to the attacker
    Value stranded_value = 0;  // honest v1 value left after the hard deadline
    Value at_risk_value = 0;   // honest v1 value resting under a revealed classical key

    void count_failure(ErrorCode code);
    std::int64_t tx_total() const;

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct MetricsSeries {
    std::vector<MetricsRow> rows;

    friend bool operator==(const MetricsSeries&, const MetricsSeries&) = default;
};

enum class ReportFormat { Csv, Json };

ReportFormat parse_format(std::string_view name);
std::vector<std::string> column_names();

// Throws EMPTY_SERIES for an empty series.
std::string report(const MetricsSeries& series, ReportFormat format);
MetricsSeries parse_report(std::string_view text, ReportFormat format);

}  // namespace pqcbdc::sim
