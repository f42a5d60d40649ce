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


#include "cohcost/harness.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "cohcost/costs.hpp"
#include "cohcost/error.hpp"
#include "cohcost/io.hpp"
#include "cohcost/uncertainty.hpp"
#include "harness_util.hpp"
#include "io_json.hpp"

namespace cohcost {

using detail::csv_field;
using detail::hex64;
using detail::num;

namespace {

[[noreturn]] void bad_config(const std::string &key, const std::string &reason) {
    fail(ErrorKind::InvalidArgument, "config /" + key + ": " + reason);
}

template <typename T>
T get_as(const json &j, const std::string &key) {
    try {
        return j.get<T>();
    } catch (const json::exception &) {
        fail(ErrorKind::Parse, "config /" + key + ": wrong type");
    }
}

std::vector<MonotoneFunction> functions_of(const RunConfig &cfg) {
    std::vector<MonotoneFunction> fs;
    for (const auto &name : cfg.f_names) fs.push_back(lookup(name));
    return fs;
}

bool holds_with(const RunConfig &cfg, double lhs, double rhs) {
    return lhs - rhs >= -cfg.tolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

struct Chunk {
    std::string csv;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string first_failure;
};

void tally(RunResult &r, const Chunk &c) {
    r.checks += c.checks;
    r.violations += c.violations;
    if (!c.first_failure.empty() && r.notes.size() < 20) r.notes.push_back(c.first_failure);
}

const std::set<std::string> &known_keys() {
    static const std::set<std::string> keys{"command", "seed", "dims", "f", "trials", "eps", "rho", "obs", "impl",
                                            "b", "spec", "grid", "norm_comm", "norm_a", "threads", "tolerance"};
    return keys;
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        fail(ErrorKind::Parse, std::string("config: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::Parse, "config: expected a JSON object");
    for (const auto &[key, _] : j.items())
        if (!known_keys().count(key)) bad_config(key, "unknown field");

    RunConfig cfg;
    if (!j.contains("command")) bad_config("command", "missing");
    cfg.command = get_as<std::string>(j["command"], "command");
    static const std::set<std::string> commands{"measures", "relations", "way", "construct-sweep", "cost-table",
                                                "selftest"};
    if (!commands.count(cfg.command)) bad_config("command", "unknown command '" + cfg.command + "'");

    if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j["seed"], "seed");
    if (j.contains("dims")) cfg.dims = get_as<std::vector<int>>(j["dims"], "dims");
    if (j.contains("f")) cfg.f_names = get_as<std::vector<std::string>>(j["f"], "f");
    if (j.contains("trials")) cfg.trials = get_as<int>(j["trials"], "trials");
    if (j.contains("eps")) cfg.eps_list = get_as<std::vector<double>>(j["eps"], "eps");
    if (j.contains("rho")) cfg.rho_path = get_as<std::string>(j["rho"], "rho");
    if (j.contains("obs")) cfg.obs_path = get_as<std::string>(j["obs"], "obs");
    if (j.contains("impl")) cfg.impl_path = get_as<std::string>(j["impl"], "impl");
    if (j.contains("b")) cfg.b_path = get_as<std::string>(j["b"], "b");
    if (j.contains("spec")) cfg.spec_path = get_as<std::string>(j["spec"], "spec");
    if (j.contains("grid") && !j["grid"].is_null()) {
        const auto g = get_as<std::vector<double>>(j["grid"], "grid");
        if (g.size() != 2 || g[0] < 1 || g[0] != std::floor(g[0]) || !(g[1] > 0))
            bad_config("grid", "expected [m, L] with integer m >= 1 and L > 0");
        cfg.grid = GridSpec{static_cast<int>(g[0]), g[1]};
    }
    if (j.contains("norm_comm")) cfg.norm_comm = get_as<double>(j["norm_comm"], "norm_comm");
    if (j.contains("norm_a")) cfg.norm_a = get_as<double>(j["norm_a"], "norm_a");
    if (j.contains("threads")) cfg.threads = get_as<int>(j["threads"], "threads");
    if (j.contains("tolerance")) cfg.tolerance = get_as<double>(j["tolerance"], "tolerance");

    if (cfg.trials < 1) bad_config("trials", "must be >= 1");
    if (cfg.threads < 1) bad_config("threads", "must be >= 1");
    if (!(cfg.tolerance >= 0.0)) bad_config("tolerance", "must be >= 0");
    for (int d : cfg.dims) {
        if (d < 1 || (cfg.command == "relations" && d < 2)) bad_config("dims", "dimension " + std::to_string(d) + " too small");
    }
    for (double e : cfg.eps_list)
        if (!(e > 0.0)) bad_config("eps", "values must be positive");
    if (cfg.f_names.empty()) bad_config("f", "at least one function is required");
    for (const auto &name : cfg.f_names) lookup(name);
    return cfg;
}

std::string canonical_config(const RunConfig &cfg) {
    json j{{"command", cfg.command}, {"seed", cfg.seed},       {"dims", cfg.dims},       {"f", cfg.f_names},
           {"trials", cfg.trials},   {"eps", cfg.eps_list},    {"rho", cfg.rho_path},    {"obs", cfg.obs_path},
           {"impl", cfg.impl_path},  {"b", cfg.b_path},        {"spec", cfg.spec_path},  {"norm_comm", cfg.norm_comm},
           {"norm_a", cfg.norm_a},   {"tolerance", cfg.tolerance}};
    j["grid"] = cfg.grid ? json{cfg.grid->subdivision, cfg.grid->half_extent} : json(nullptr);
    // threads changes scheduling only, never output, so it is left out
    return j.dump();
}

std::uint64_t config_hash(const RunConfig &cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_config(cfg)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

RunResult run(const RunConfig &cfg) {
    if (cfg.command == "measures") return run_measures(cfg);
    if (cfg.command == "relations") return run_relations(cfg);
    if (cfg.command == "way") return run_way(cfg);
    if (cfg.command == "construct-sweep") return run_construct_sweep(cfg);
    if (cfg.command == "cost-table") return run_cost_table(cfg);
    if (cfg.command == "selftest") return run_selftest(cfg);
    fail(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
}

RunResult run_measures(const RunConfig &cfg) {
    if (cfg.rho_path.empty() || cfg.obs_path.empty())
        fail(ErrorKind::InvalidArgument, "measures: both rho and obs files are required");
    const DensityMatrix rho = parse_density(read_text_file(cfg.rho_path));
    const HermitianOperator obs = parse_hermitian(read_text_file(cfg.obs_path));
    RunResult r;
    json reports = json::array();
    for (const auto &f : functions_of(cfg)) {
        const MeasureReport m = measure_report(rho, obs, f);
        reports.push_back(measure_report_json(m));
        const std::pair<const char *, bool> checks[] = {
            {"0 <= skew", m.skew >= -1e-12},
            {"skew <= v", m.skew <= m.v + 1e-10},
            {"vf <= v", m.vf <= m.v + 1e-10},
            {"u >= skew", m.u >= m.skew - 1e-10},
        };
        for (const auto &[name, ok] : checks) {
            ++r.checks;
            if (!ok) {
                ++r.violations;
                r.notes.push_back(std::string("measures: ") + name + " fails for " + f.name());
            }
        }
    }
    json out{{"command", "measures"}, {"seed", cfg.seed}, {"config_hash", hex64(config_hash(cfg))},
             {"reports", std::move(reports)}, {"passed", r.violations == 0}};
    r.output = out.dump(2) + "\n";
    r.passed = r.violations == 0;
    return r;
}

RunResult run_relations(const RunConfig &cfg) {
    const std::vector<MonotoneFunction> fs = functions_of(cfg);
    std::vector<bool> cond_y;
    for (const auto &f : fs) cond_y.push_back(check_cond_Y(f));
    const std::string hash = hex64(config_hash(cfg));

    struct Task {
        int dim;
        int trial;
    };
    std::vector<Task> tasks;
    for (int d : cfg.dims)
        for (int t = 0; t < cfg.trials; ++t) tasks.push_back({d, t});

    const auto chunks = detail::parallel_map(tasks.size(), cfg.threads, [&](std::size_t i) {
        const Task task = tasks[i];
        const std::uint64_t seed = mix_seed(cfg.seed, (static_cast<std::uint64_t>(task.dim) << 32) | static_cast<std::uint64_t>(task.trial));
        // every tenth instance uses a pure state to exercise the rank-deficient path
        const DensityMatrix rho = task.trial % 10 == 9 ? DensityMatrix::pure(random_state_vector(task.dim, mix_seed(seed, 0)))
                                                       : random_density(task.dim, mix_seed(seed, 0));
        const HermitianOperator a = random_hermitian(task.dim, mix_seed(seed, 1));
        const HermitianOperator b = random_hermitian(task.dim, mix_seed(seed, 2));

        Chunk c;
        auto emit = [&](const RelationVerdict &v, const std::string &f_name) {
            const bool ok = holds_with(cfg, v.lhs, v.rhs);
            ++c.checks;
            if (!ok) {
                ++c.violations;
                if (c.first_failure.empty())
                    c.first_failure = v.relation + " fails for f=" + f_name + " dim=" + std::to_string(task.dim) +
                                      " seed=" + std::to_string(seed) + " slack=" + num(v.slack);
            }
            c.csv += v.relation + "," + f_name + "," + std::to_string(task.dim) + "," + std::to_string(seed) + "," +
                     num(v.lhs) + "," + num(v.rhs) + "," + num(v.slack) + "," + (ok ? "true" : "false") + "," +
                     std::to_string(task.trial) + "," + hash + "\n";
        };
        emit(robertson(rho, a, b), "none");
        for (std::size_t k = 0; k < fs.size(); ++k) {
            emit(lemma1(rho, a, b, fs[k]), fs[k].name());
            emit(type1(rho, a, b, fs[k]), fs[k].name());
            if (cond_y[k]) emit(type2(rho, a, b, fs[k]), fs[k].name());
            emit(type3(rho, a, b, fs[k]), fs[k].name());
        }
        return c;
    });

    RunResult r;
    r.output = "relation,f_name,dim,seed,lhs,rhs,slack,holds,trial,config_hash\n";
    for (const auto &c : chunks) {
        r.output += c.csv;
        tally(r, c);
    }
    for (std::size_t k = 0; k < fs.size(); ++k)
        if (!cond_y[k]) r.notes.push_back("type2 skipped for f=" + fs[k].name() + " (condition not met)");
    r.passed = r.violations == 0;
    return r;
}

RunResult run_way(const RunConfig &cfg) {
    if (cfg.impl_path.empty() || cfg.b_path.empty())
        fail(ErrorKind::InvalidArgument, "way: both impl and b files are required");
    const ImplementationSet impl = parse_implementation(read_text_file(cfg.impl_path));
    const HermitianOperator b = parse_hermitian(read_text_file(cfg.b_path));
    const WorstError worst = worst_error(impl, b);
    const bool from_file = !cfg.rho_path.empty();
    const DensityMatrix rho = from_file ? parse_density(read_text_file(cfg.rho_path)) : DensityMatrix::pure(worst.worst_state);
    const std::vector<MonotoneFunction> fs = functions_of(cfg);

    const ErrorReport rep = error_report(impl, b, rho, fs);
    const TransferReport tr = commutator_transfer_check(impl, b, rho);
    const KorzekwaComparison kc = korzekwa_comparison(impl, b, rho);
    const EigenDecomposition kdec = eigh(HermitianOperator(conditional_error_operator(impl, b)));

    RunResult r;
    json checks = json::array();
    auto check = [&](const std::string &name, double lhs, double rhs, bool ok) {
        ++r.checks;
        if (!ok) {
            ++r.violations;
            r.notes.push_back("way: " + name + " fails (lhs " + num(lhs) + ", rhs " + num(rhs) + ")");
        }
        checks.push_back({{"name", name}, {"lhs", number_json(lhs)}, {"rhs", number_json(rhs)}, {"holds", ok}});
    };
    for (const auto &[name, bound] : rep.bound_f)
        check("way_ozawa:" + name, rep.epsilon_sq, bound, std::isfinite(bound) && holds_with(cfg, rep.epsilon_sq, bound));
    check("commutator_transfer", std::abs(tr.lhs), std::abs(tr.rhs), tr.holds);
    check("korzekwa_ordering", kc.bound_sld, std::max(kc.bound_korzekwa, kc.bound_original), kc.ordered);
    const double kmin = kdec.values(0);
    const double kmax = kdec.values(kdec.values.size() - 1);
    check("conditional_error_psd", kmin, 0.0, kmin >= -1e-10 * std::max(1.0, kmax));
    check("worst_error_dominates", worst.epsilon, rep.epsilon, worst.epsilon >= rep.epsilon - 1e-12);

    json out{{"command", "way"},
             {"seed", cfg.seed},
             {"config_hash", hex64(config_hash(cfg))},
             {"rho_source", from_file ? "file" : "worst_state"},
             {"a_s_shift", impl.a_s_shift()},
             {"error_report", error_report_json(rep)},
             {"worst_error", worst.epsilon},
             {"transfer",
              {{"lhs", {{"re", tr.lhs.real()}, {"im", tr.lhs.imag()}}},
               {"rhs", {{"re", tr.rhs.real()}, {"im", tr.rhs.imag()}}},
               {"residual", tr.residual},
               {"holds", tr.holds},
               {"invariant_violation", tr.invariant_violation}}},
             {"korzekwa",
              {{"bound_sld", number_json(kc.bound_sld)},
               {"bound_korzekwa", number_json(kc.bound_korzekwa)},
               {"bound_original", number_json(kc.bound_original)},
               {"ordered", kc.ordered}}},
             {"checks", std::move(checks)},
             {"passed", r.violations == 0}};
    r.output = out.dump(2) + "\n";
    r.passed = r.violations == 0;
    return r;
}

RunResult run_construct_sweep(const RunConfig &cfg) {
    const ConstructionSpec base = cfg.spec_path.empty() ? qubit_spec(1.0) : parse_construction_spec(read_text_file(cfg.spec_path));
    const std::string hash = hex64(config_hash(cfg));
    const double nc = base.norm_comm();
    const double na = base.norm_a();

    std::vector<double> targets = cfg.eps_list;
    const bool at_spec_xi = targets.empty();
    if (at_spec_xi) targets.push_back(std::nan(""));

    const auto chunks = detail::parallel_map(targets.size(), cfg.threads, [&](std::size_t i) {
        const double eps = targets[i];
        const ConstructionSpec spec = at_spec_xi ? base : base.with_xi(xi_for_epsilon(nc, na, eps));
        const double exact = exact_worst_error(spec);
        const double bound = error_bound(spec);
        const SeriesBound series = series_tail_bound(spec, 8);
        double grid_eps = std::nan("");
        if (cfg.grid) grid_eps = worst_error(discretize(spec, *cfg.grid), spec.b).epsilon;

        Chunk c;
        auto check = [&](bool ok, const std::string &what) {
            ++c.checks;
            if (!ok) {
                ++c.violations;
                if (c.first_failure.empty()) c.first_failure = "construct-sweep xi=" + num(spec.xi) + ": " + what;
            }
        };
        check(exact * exact <= bound * (1.0 + 1e-12) + 1e-15, "exact worst error squared exceeds error_bound");
        check(series.total <= bound + 1e-12 * std::max(1.0, bound), "series majorant exceeds error_bound");
        check(exact * exact <= series.total * (1.0 + 1e-12) + 1e-15, "exact worst error squared exceeds series majorant");
        if (!at_spec_xi) check(exact <= eps + 1e-12, "achieved worst error exceeds target eps");
        if (cfg.grid) check(std::abs(grid_eps - exact) <= 1e-6, "grid model disagrees with closed form");
        c.csv = num(spec.xi) + "," + num(exact) + "," + num(std::sqrt(bound)) + "," + num(spec.xi * spec.xi) + "," +
                num(eps) + "," + (cfg.grid ? num(grid_eps) : std::string()) + "," + std::to_string(cfg.seed) + "," +
                hash + "\n";
        return c;
    });

    RunResult r;
    r.output = "xi,eps_exact,eps_bound,cost,eps_target,eps_grid,seed,config_hash\n";
    for (const auto &c : chunks) {
        r.output += c.csv;
        tally(r, c);
    }
    r.passed = r.violations == 0;
    return r;
}

RunResult run_cost_table(const RunConfig &cfg) {
    const std::string hash = hex64(config_hash(cfg));
    RunResult r;
    r.output = "eps,f_name,lower_sqrt,upper_sqrt,achieved_sqrt,eps_times_lower,eps_times_upper,in_window,seed,config_hash\n";
    for (const auto &f : functions_of(cfg)) {
        const AsymptoticTable t = asymptotic_table(cfg.norm_comm, cfg.norm_a, cfg.eps_list, f);
        ++r.checks;
        if (!t.consistent) {
            ++r.violations;
            r.notes.push_back("cost-table: bounds inconsistent for f=" + f.name());
        }
        if (!t.equality_applies)
            r.notes.push_back("cost-table: f=" + f.name() + " has f(0) != 1/2; eps*lower -> " + num(t.lower_limit) +
                              " and eps*upper -> " + num(t.upper_limit) + " (gap " + num(t.coefficient_gap) + ")");
        for (const auto &row : t.rows) {
            if (!row.in_window) r.notes.push_back("cost-table: eps=" + num(row.eps) + " outside the validity window");
            r.output += num(row.eps) + "," + csv_field(row.f_name) + "," + num(row.lower_sqrt) + "," +
                        num(row.upper_sqrt) + "," + num(row.achieved_sqrt) + "," + num(row.eps * row.lower_sqrt) + "," +
                        num(row.eps * row.upper_sqrt) + "," + (row.in_window ? "true" : "false") + "," +
                        std::to_string(cfg.seed) + "," + hash + "\n";
        }
    }
    r.passed = r.violations == 0;
    return r;
}

}  // namespace cohcost
