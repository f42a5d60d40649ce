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


// Command-line front end. Flags and an optional JSON config file are merged
// into one config object (flags win) and handed to cc_run.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohcost/cohcost.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct Flags {
    std::string config_path;
    std::string output_path;
    int threads = 0;
    double tolerance = -1.0;

    unsigned long long seed = 0;
    std::vector<int> dims;
    std::vector<std::string> f_names;
    int trials = 0;
    std::vector<double> eps;
    std::string rho, obs, impl, b, spec;
    std::vector<double> grid;
    double norm_comm = 0.0;
    double norm_a = 0.0;
};

int report_failure(cc_status status, const std::string &context) {
    std::cerr << "error: " << context << ": " << cc_status_name(status) << ": " << cc_last_error() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Coherence-cost toolkit: skew-information relations, measurement-error bounds, construction sweeps"};
    app.require_subcommand(1);
    Flags fl;

    app.add_option("--config", fl.config_path, "JSON config file; explicit flags override its fields")
        ->check(CLI::ExistingFile);
    app.add_option("--output", fl.output_path, "write the CSV/JSON result here instead of stdout");
    app.add_option("--threads", fl.threads, "worker threads (default 1)")->check(CLI::PositiveNumber);
    app.add_option("--tolerance", fl.tolerance, "tolerance for file-input validation")->check(CLI::NonNegativeNumber);
    app.add_flag("--version", [](std::int64_t) {
        std::cout << "cohcost " << cc_version() << "\n";
        std::exit(0);
    }, "print the version and exit");

    auto *measures = app.add_subcommand("measures", "variance, f-variance, skew information and U for a state and observable");
    measures->add_option("--rho", fl.rho, "density matrix JSON")->check(CLI::ExistingFile);
    measures->add_option("--obs", fl.obs, "observable JSON")->check(CLI::ExistingFile);
    measures->add_option("--f", fl.f_names, "monotone functions, comma separated")->delimiter(',');

    auto *relations = app.add_subcommand("relations", "random-instance sweep of the uncertainty relations (CSV)");
    relations->add_option("--dims", fl.dims, "dimensions, comma separated")->delimiter(',');
    relations->add_option("--trials", fl.trials, "instances per dimension and function");
    relations->add_option("--seed", fl.seed, "base seed");
    relations->add_option("--f", fl.f_names, "monotone functions, comma separated")->delimiter(',');

    auto *way = app.add_subcommand("way", "validate an implementation set and report its error bounds (JSON)");
    way->add_option("--impl", fl.impl, "implementation set JSON")->check(CLI::ExistingFile);
    way->add_option("--b", fl.b, "measured observable JSON")->check(CLI::ExistingFile);
    way->add_option("--rho", fl.rho, "system input state JSON (default: worst-case state)")->check(CLI::ExistingFile);
    way->add_option("--f", fl.f_names, "monotone functions, comma separated")->delimiter(',');

    auto *sweep = app.add_subcommand("construct-sweep", "exact and bounded errors of the construction at xi_eps (CSV)");
    sweep->add_option("--spec", fl.spec, "construction spec JSON (default: qubit)")->check(CLI::ExistingFile);
    sweep->add_option("--eps", fl.eps, "target errors, comma separated")->delimiter(',');
    sweep->add_option("--grid", fl.grid, "also simulate on a grid: m,L (spacing 1/m, half extent L)")
        ->delimiter(',')
        ->expected(2);
    sweep->add_option("--seed", fl.seed, "seed recorded in the rows");

    auto *costs = app.add_subcommand("cost-table", "lower and upper coherence-cost bounds per eps (CSV)");
    costs->add_option("--norm-comm", fl.norm_comm, "||[A,B]||");
    costs->add_option("--norm-a", fl.norm_a, "||A||");
    costs->add_option("--eps", fl.eps, "target errors, comma separated")->delimiter(',');
    costs->add_option("--f", fl.f_names, "monotone function")->delimiter(',');
    costs->add_option("--seed", fl.seed, "seed recorded in the rows");

    auto *selftest = app.add_subcommand("selftest", "run every invariant suite (CSV summary)");
    selftest->add_option("--seed", fl.seed, "base seed");

    CLI11_PARSE(app, argc, argv);
    CLI::App *sub = app.get_subcommands().front();

    json cfg = json::object();
    if (!fl.config_path.empty()) {
        std::ifstream in(fl.config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            cfg = json::parse(ss.str());
        } catch (const json::parse_error &e) {
            std::cerr << "error: " << fl.config_path << ": parse: " << e.what() << "\n";
            return 2;
        }
        if (!cfg.is_object()) {
            std::cerr << "error: " << fl.config_path << ": parse: expected a JSON object\n";
            return 2;
        }
    }
    cfg["command"] = sub->get_name();

    auto given = [&](const char *name) {
        const CLI::Option *opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (app.count("--threads")) cfg["threads"] = fl.threads;
    if (app.count("--tolerance")) cfg["tolerance"] = fl.tolerance;
    if (given("--seed")) cfg["seed"] = fl.seed;
    if (given("--dims")) cfg["dims"] = fl.dims;
    if (given("--f")) cfg["f"] = fl.f_names;
    if (given("--trials")) cfg["trials"] = fl.trials;
    if (given("--eps")) cfg["eps"] = fl.eps;
    if (given("--rho")) cfg["rho"] = fl.rho;
    if (given("--obs")) cfg["obs"] = fl.obs;
    if (given("--impl")) cfg["impl"] = fl.impl;
    if (given("--b")) cfg["b"] = fl.b;
    if (given("--spec")) cfg["spec"] = fl.spec;
    if (given("--grid")) cfg["grid"] = fl.grid;
    if (given("--norm-comm")) cfg["norm_comm"] = fl.norm_comm;
    if (given("--norm-a")) cfg["norm_a"] = fl.norm_a;

    char *output = nullptr;
    char *notes = nullptr;
    cc_run_summary summary{};
    const cc_status status = cc_run(cfg.dump().c_str(), &output, &notes, &summary);
    if (status != CC_OK) return report_failure(status, sub->get_name());

    int rc = 0;
    if (fl.output_path.empty()) {
        std::fputs(output, stdout);
    } else {
        std::ofstream out(fl.output_path, std::ios::binary);
        out << output;
        if (!out) {
            std::cerr << "error: cannot write " << fl.output_path << "\n";
            rc = 2;
        }
    }
    if (notes && *notes) std::cerr << notes;
    std::cerr << sub->get_name() << ": " << summary.checks << " checks, " << summary.violations << " violations\n";
    cc_string_free(output);
    cc_string_free(notes);
    if (rc != 0) return rc;
    return summary.passed ? 0 : 1;
}
