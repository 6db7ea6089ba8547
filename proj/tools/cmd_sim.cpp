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
#include "pqcbdc/sim/metrics.hpp"
#include "pqcbdc/sim/scenario.hpp"
#include "pqcbdc/sim/world.hpp"

namespace pqcbdc::cli {

namespace {

struct SimArgs {
    std::string config;
    std::string in;
    std::string out;
    std::string format;
    std::string in_format;
    std::string seed;
};

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Explicit --format wins; otherwise the file extension decides, CSV by default.
sim::ReportFormat format_for(const std::string& explicit_name, const std::string& path) {
    if (!explicit_name.empty()) return sim::parse_format(explicit_name);
    return ends_with(path, ".json") ? sim::ReportFormat::Json : sim::ReportFormat::Csv;
}

void run_simulate(const SimArgs& a) {
    auto config = sim::parse_config(read_file(a.config));
    if (!a.seed.empty()) config.seed = sim::parse_seed(a.seed);
    auto series = sim::run(config);
    write_file(a.out, sim::report(series, format_for(a.format, a.out)));
    const auto& last = series.rows.back();
    print(json{{"ticks", series.rows.size()},
               {"out", a.out},
               {"live_v1_value", last.live_v1_value},
               {"live_v2_value", last.live_v2_value},
               {"thefts_value", last.thefts_value},
               {"stranded_value", last.stranded_value}}
              .dump(2));
}

void run_report(const SimArgs& a) {
    auto series = sim::parse_report(read_file(a.in), format_for(a.in_format, a.in));
    auto text = sim::report(series, format_for(a.format, a.out));
    if (a.out.empty()) return print(text);
    write_file(a.out, text);
}

}  // namespace

void add_sim_commands(CLI::App& app) {
    auto args = std::make_shared<SimArgs>();
    const auto formats = CLI::IsMember({"csv", "json"});

    auto* simulate = app.add_subcommand("simulate", "run a scenario and write its metrics");
    simulate->add_option("--config", args->config, "scenario JSON")->required();
    simulate->add_option("--out", args->out, "metrics file")->required();
    simulate->add_option("--format", args->format, "csv or json; defaults to the --out extension")->check(formats);
    simulate->add_option("--seed", args->seed, "override the config seed (64 hex digits or a label)");
    simulate->callback([args] { run_simulate(*args); });

    auto* report = app.add_subcommand("report", "convert a metrics file between formats");
    report->add_option("--in", args->in, "metrics file")->required();
    report->add_option("--in-format", args->in_format, "defaults to the --in extension")->check(formats);
    report->add_option("--format", args->format, "output format")->check(formats);
    report->add_option("--out", args->out, "output file; standard output if omitted");
    report->callback([args] { run_report(*args); });
}

}  // namespace pqcbdc::cli
