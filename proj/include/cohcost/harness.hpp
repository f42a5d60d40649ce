// Copyright 2026 The cohcost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef COHCOST_HARNESS_HPP
#define COHCOST_HARNESS_HPP

// Run orchestration behind the command-line tool. A run is described by a
// JSON config; the same config and seed always give byte-identical output.
//
// Config fields (all optional except "command"):
//   command     measures | relations | way | construct-sweep | cost-table | selftest
//   seed        unsigned integer, default 42
//   dims        [2, 3, 4, 8]         relations
//   f           ["sld", "wy"]        function names, see monotone.hpp
//   trials      1000                 relations
//   eps         [0.1, 0.05, 0.01]    construct-sweep, cost-table
//   rho, obs    file paths           measures (rho also way)
//   impl, b     file paths           way
//   spec        file path            construct-sweep (default: qubit spec)
//   grid        [m, L]               construct-sweep grid cross-check
//   norm_comm, norm_a   1.0, 1.0     cost-table
//   threads     1                    worker threads for ensembles
//   tolerance   1e-9                 relative slack for relation verdicts

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohcost/construct.hpp"

namespace cohcost {

struct RunConfig {
    std::string command;
    std::uint64_t seed = 42;
    std::vector<int> dims{2, 3, 4, 8};
    std::vector<std::string> f_names{"sld", "wy"};
    int trials = 1000;
    std::vector<double> eps_list{0.1, 0.05, 0.01};
    std::string rho_path;
    std::string obs_path;
    std::string impl_path;
    std::string b_path;
    std::string spec_path;
    std::optional<GridSpec> grid;
    double norm_comm = 1.0;
    double norm_a = 1.0;
    int threads = 1;
    double tolerance = 1e-9;
};

/// Raises ErrorKind::Parse for malformed JSON and ErrorKind::InvalidArgument
/// for values breaking the config invariants.
RunConfig parse_run_config(std::string_view json_text);
std::string canonical_config(const RunConfig &cfg);
/// FNV-1a (64 bit) of canonical_config.
std::uint64_t config_hash(const RunConfig &cfg);

struct RunResult {
    bool passed = false;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string output;              // CSV or JSON, per command
    std::vector<std::string> notes;  // human-readable, for stderr
};

RunResult run(const RunConfig &cfg);

RunResult run_measures(const RunConfig &cfg);
RunResult run_relations(const RunConfig &cfg);
RunResult run_way(const RunConfig &cfg);
RunResult run_construct_sweep(const RunConfig &cfg);
RunResult run_cost_table(const RunConfig &cfg);
RunResult run_selftest(const RunConfig &cfg);

}  // namespace cohcost

#endif  // COHCOST_HARNESS_HPP
