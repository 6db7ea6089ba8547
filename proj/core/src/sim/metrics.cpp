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

#include "pqcbdc/sim/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace pqcbdc::sim {

void MetricsRow::count_failure(ErrorCode code) {
    auto it = std::find(kTrackedErrors.begin(), kTrackedErrors.end(), code);
    ++failures[static_cast<std::size_t>(it - kTrackedErrors.begin())];
}

std::int64_t MetricsRow::tx_total() const {
    std::int64_t n = 0;
    for (auto v : tx) n += v;
    return n;
}

ReportFormat parse_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw Error(ErrorCode::MalformedEncoding, "unknown report format '" + std::string(name) + "'");
}

std::vector<std::string> column_names() {
    std::vector<std::string> cols{"tick", "live_v1_value", "live_v2_value"};
    for (auto c : wallet::kAllCases) cols.push_back("tx_" + std::string(wallet::to_string(c)));
    for (auto code : kTrackedErrors) {
        std::string name(to_string(code));
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
        cols.push_back("fail_" + name);
    }
    cols.push_back("fail_other");
    cols.push_back("thefts_value");
    cols.push_back("stranded_value");
    cols.push_back("at_risk_value");
    return cols;
}

namespace {

std::vector<std::int64_t> flatten(const MetricsRow& r) {
    std::vector<std::int64_t> v{r.tick, r.live_v1_value, r.live_v2_value};
    v.insert(v.end(), r.tx.begin(), r.tx.end());
    v.insert(v.end(), r.failures.begin(), r.failures.end());
    v.push_back(r.thefts_value);
    v.push_back(r.stranded_value);
    v.push_back(r.at_risk_value);
    return v;
}

MetricsRow unflatten(const std::vector<std::int64_t>& v) {
    if (v.size() != column_names().size()) throw Error(ErrorCode::MalformedEncoding, "wrong column count");
    MetricsRow r;
    std::size_t i = 0;
    r.tick = v[i++];
    r.live_v1_value = v[i++];
    r.live_v2_value = v[i++];
    for (auto& x : r.tx) x = v[i++];
    for (auto& x : r.failures) x = v[i++];
    r.thefts_value = v[i++];
    r.stranded_value = v[i++];
    r.at_risk_value = v[i++];
    return r;
}

std::int64_t parse_int(const std::string& cell) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != cell.size()) throw Error(ErrorCode::MalformedEncoding, "bad integer '" + cell + "'");
    return v;
}

}  // namespace

std::string report(const MetricsSeries& series, ReportFormat format) {
    if (series.rows.empty()) throw Error(ErrorCode::EmptySeries);
    const auto cols = column_names();
    if (format == ReportFormat::Json) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : series.rows) {
            nlohmann::ordered_json obj;
            auto values = flatten(r);
            for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = values[i];
            rows.push_back(std::move(obj));
        }
        return rows.dump(1) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += '\n';
    for (const auto& r : series.rows) {
        auto values = flatten(r);
        for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
        out += '\n';
    }
    return out;
}

MetricsSeries parse_report(std::string_view text, ReportFormat format) {
    const auto cols = column_names();
    MetricsSeries series;
    if (format == ReportFormat::Json) {
        try {
            auto rows = nlohmann::json::parse(text);
            if (!rows.is_array()) throw Error(ErrorCode::MalformedEncoding, "expected an array of rows");
            for (const auto& obj : rows) {
                std::vector<std::int64_t> values;
                for (const auto& c : cols) values.push_back(obj.at(c).get<std::int64_t>());
                series.rows.push_back(unflatten(values));
            }
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::MalformedEncoding, ex.what());
        }
        return series;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::EmptySeries);
    std::string expected;
    for (std::size_t i = 0; i < cols.size(); ++i) expected += (i ? "," : "") + cols[i];
    if (line != expected) throw Error(ErrorCode::MalformedEncoding, "unexpected CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::int64_t> values;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) values.push_back(parse_int(cell));
        series.rows.push_back(unflatten(values));
    }
    return series;
}

}  // namespace pqcbdc::sim
