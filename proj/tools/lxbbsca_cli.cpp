// Experiment runner for the lxbbsca library. Talks to the library through
// the public C API only; file formats and orchestration live here.
//
// Subcommands:
//   list     print the problem registry as CSV
//   run      execute an (algorithms x problems x trials) matrix and export
//            per-trial records, summaries, pairwise comparisons and traces
//   compare  recompute a pairwise comparison report from a results directory
//   traces   export median-of-trials convergence curves for one problem
//
// Exit codes: 0 success, 1 validation error, 2 runtime error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lxbbsca.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

void check(lxb_status status, const std::string& what) {
    if (status != LXB_OK) {
        const int code = status == LXB_ERROR_RUNTIME ? kExitRuntime : kExitValidation;
        fail(code, what + ": " + lxb_last_error());
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

// ---- problem / algorithm name resolution -----------------------------------

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (int i = 0; i < lxb_problem_count(); ++i) {
        const char* id = nullptr;
        check(lxb_problem_id_at(i, &id), "registry");
        ids.emplace_back(id);
    }
    return ids;
}

// Expands tokens: plain ids, "F3..F9" / "F3-F9" ranges, and the keywords
// all / benchmarks / engineering.
std::vector<std::string> expand_problems(const std::vector<std::string>& tokens) {
    const std::vector<std::string> known = registry_ids();
    auto is_benchmark = [](const std::string& id) { return id.size() >= 2 && id[0] == 'F'; };
    std::vector<std::string> out;
    auto push = [&](const std::string& id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    for (const std::string& raw : tokens) {
        if (raw.empty()) continue;
        if (raw == "all") {
            for (const auto& id : known) push(id);
            continue;
        }
        if (raw == "benchmarks") {
            for (const auto& id : known) {
                if (is_benchmark(id)) push(id);
            }
            continue;
        }
        if (raw == "engineering") {
            for (const auto& id : known) {
                if (!is_benchmark(id)) push(id);
            }
            continue;
        }
        const auto dots = raw.find("..");
        const auto dash = dots == std::string::npos ? raw.find('-') : std::string::npos;
        if ((dots != std::string::npos || dash != std::string::npos) && raw.size() > 2 &&
            raw[0] == 'F') {
            const std::size_t pos = dots != std::string::npos ? dots : dash;
            const std::size_t skip = dots != std::string::npos ? 2 : 1;
            const std::string lo = raw.substr(0, pos);
            const std::string hi = raw.substr(pos + skip);
            int a = 0, b = 0;
            if (std::sscanf(lo.c_str(), "F%d", &a) == 1 &&
                std::sscanf(hi.c_str(), "F%d", &b) == 1 && a >= 1 && b >= a) {
                for (int k = a; k <= b; ++k) push("F" + std::to_string(k));
                continue;
            }
        }
        push(raw);
    }
    for (const std::string& id : out) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            fail(kExitValidation, "unknown problem id: " + id);
        }
    }
    if (out.empty()) fail(kExitValidation, "problem list is empty");
    return out;
}

std::vector<lxb_algorithm> parse_algorithms(const std::vector<std::string>& tokens) {
    std::vector<lxb_algorithm> out;
    for (const std::string& name : tokens) {
        lxb_algorithm algo;
        if (lxb_algorithm_from_name(name.c_str(), &algo) != LXB_OK) {
            fail(kExitValidation, "unknown algorithm: " + name);
        }
        if (std::find(out.begin(), out.end(), algo) == out.end()) out.push_back(algo);
    }
    if (out.empty()) fail(kExitValidation, "algorithm list is empty");
    return out;
}

// ---- experiment configuration ----------------------------------------------

struct ExperimentConfig {
    std::vector<std::string> algorithms = {"LXBBSCA", "BBO", "LXBBO", "SCA"};
    std::vector<std::string> problems = {"all"};
    int trials = 30;
    long long budget = 0; // 0 = per-problem default (benchmarks 30000, engineering 1000)
    int population = 50;
    std::uint64_t seed = 1;
    std::string out_dir;
    std::string eq5_mode = "progress";
    std::string r2_mode = "two-pi";
    std::string wilcoxon = "signed-rank";
    std::string siv_replace = "donor-copy";
    std::string bridge_mode = "literal";
    double penalty_coeff = 1e6;
    double penalty_exp = 2.0;
    double mutation_rate = 0.01;
    double laplace_a = 0.0;
    double laplace_b = 0.5;
    double gamma_min = 0.0;
    double gamma_max = 1.0;
    double gamma_k = 2.0;
    int elitism = 2;
    bool integer_gear = false;
    int threads = 1;
};

long long budget_for(const ExperimentConfig& cfg, const std::string& problem_id) {
    if (cfg.budget > 0) return cfg.budget;
    return problem_id[0] == 'F' ? 30000 : 1000;
}

lxb_problem_options problem_options(const ExperimentConfig& cfg) {
    lxb_problem_options options;
    lxb_problem_options_init(&options);
    options.penalty_coefficient = cfg.penalty_coeff;
    options.penalty_exponent = cfg.penalty_exp;
    options.gear_integer = cfg.integer_gear ? 1 : 0;
    options.bridge_mode =
        cfg.bridge_mode == "system" ? LXB_BRIDGE_SYSTEM_RELIABILITY : LXB_BRIDGE_LITERAL_BOX;
    return options;
}

struct ConfigHandle {
    lxb_config* ptr = nullptr;
    ConfigHandle() { check(lxb_config_create(&ptr), "config"); }
    ~ConfigHandle() { lxb_config_destroy(ptr); }
    ConfigHandle(const ConfigHandle&) = delete;
    ConfigHandle& operator=(const ConfigHandle&) = delete;
};

struct ProblemHandle {
    lxb_problem* ptr = nullptr;
    explicit ProblemHandle(const std::string& id, const lxb_problem_options& options) {
        check(lxb_problem_open_opts(id.c_str(), &options, &ptr), "problem " + id);
    }
    ~ProblemHandle() { lxb_problem_close(ptr); }
    ProblemHandle(const ProblemHandle&) = delete;
    ProblemHandle& operator=(const ProblemHandle&) = delete;
};

void apply_config(const ExperimentConfig& cfg, long long budget, lxb_config* config) {
    check(lxb_config_set_population(config, cfg.population), "config");
    check(lxb_config_set_budget(config, budget), "config");
    check(lxb_config_set_elitism(config, cfg.elitism), "config");
    check(lxb_config_set_mutation_rate(config, cfg.mutation_rate), "config");
    check(lxb_config_set_laplace(config, cfg.laplace_a, cfg.laplace_b), "config");
    check(lxb_config_set_gamma(config, cfg.gamma_min, cfg.gamma_max, cfg.gamma_k), "config");
    check(lxb_config_set_eq5_mode(
              config, cfg.eq5_mode == "literal" ? LXB_EQ5_LITERAL : LXB_EQ5_PROGRESS),
          "config");
    check(lxb_config_set_r2_mode(config,
                                 cfg.r2_mode == "strict" ? LXB_R2_STRICT : LXB_R2_TWO_PI),
          "config");
    check(lxb_config_set_siv_replace_mode(config, cfg.siv_replace == "uniform-reset"
                                                      ? LXB_SIV_UNIFORM_RESET
                                                      : LXB_SIV_DONOR_COPY),
          "config");
}

// ---- output files ------------------------------------------------------------

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) fail(kExitRuntime, "cannot write " + path.string());
    return out;
}

void write_header(std::ofstream& out, const std::string& algorithm, const std::string& problem,
                  std::uint64_t base_seed, long long budget, int population, int trials) {
    out << "# algorithm=" << algorithm << "\n";
    out << "# problem=" << problem << "\n";
    out << "# seed_policy=base_seed+trial_index\n";
    out << "# base_seed=" << base_seed << "\n";
    out << "# budget=" << budget << "\n";
    out << "# population=" << population << "\n";
    out << "# trials=" << trials << "\n";
}

struct CellResult {
    std::string algorithm;
    std::string problem;
    lxb_summary summary{};
    std::vector<double> final_fitness;
    std::vector<double> best_position; // of the best trial
    double best_fitness = 0.0;
};

CellResult run_cell(const ExperimentConfig& cfg, const std::string& algo_name,
                    lxb_algorithm algo, const std::string& problem_id, const fs::path& out_dir) {
    const lxb_problem_options options = problem_options(cfg);
    ProblemHandle problem(problem_id, options);
    const long long budget = budget_for(cfg, problem_id);

    ConfigHandle config;
    apply_config(cfg, budget, config.ptr);

    lxb_trials* trials = nullptr;
    check(lxb_run_trials(problem.ptr, algo, config.ptr, cfg.trials, cfg.seed, cfg.threads,
                         &trials),
          algo_name + " on " + problem_id);

    lxb_problem_info info{};
    check(lxb_problem_info_get(problem.ptr, &info), "problem info");

    CellResult cell;
    cell.algorithm = algo_name;
    cell.problem = problem_id;
    check(lxb_trials_summary(trials, &cell.summary), "summary");

    // Per-trial records.
    auto records = open_out(out_dir / ("trials_" + algo_name + "_" + problem_id + ".csv"));
    write_header(records, algo_name, problem_id, cfg.seed, budget, cfg.population, cfg.trials);
    records << "trial,seed,best_fitness,evals_used,best_position\n";

    const fs::path trace_dir = out_dir / "traces";
    fs::create_directories(trace_dir);

    double best = 0.0;
    for (int i = 0; i < lxb_trials_count(trials); ++i) {
        const lxb_run* run = nullptr;
        check(lxb_trials_run(trials, i, &run), "trial access");
        double fitness = 0.0;
        long long evals = 0;
        std::uint64_t seed = 0;
        check(lxb_run_best_fitness(run, &fitness), "trial fitness");
        check(lxb_run_evals_used(run, &evals), "trial evals");
        check(lxb_run_seed(run, &seed), "trial seed");
        std::vector<double> position(static_cast<std::size_t>(info.dim));
        check(lxb_run_best_position(run, position.data(), info.dim), "trial position");

        std::vector<std::string> coords;
        for (double v : position) coords.push_back(fmt(v));
        records << i << ',' << seed << ',' << fmt(fitness) << ',' << evals << ','
                << join(coords, ";") << "\n";
        cell.final_fitness.push_back(fitness);
        if (i == 0 || fitness < best) {
            best = fitness;
            cell.best_position = position;
        }

        auto trace = open_out(trace_dir /
                              (algo_name + "_" + problem_id + "_t" + std::to_string(i) + ".csv"));
        write_header(trace, algo_name, problem_id, cfg.seed, budget, cfg.population, cfg.trials);
        trace << "eval_count,best_fitness\n";
        for (int k = 0; k < lxb_run_trace_size(run); ++k) {
            long long evals_k = 0;
            double best_k = 0.0;
            check(lxb_run_trace_point(run, k, &evals_k, &best_k), "trace point");
            trace << evals_k << ',' << fmt(best_k) << "\n";
        }
    }
    cell.best_fitness = best;

    // Engineering problems additionally get a report with the published
    // reference rows and a recomputed objective for each of them.
    if (std::string(info.kind) == "engineering") {
        auto report = open_out(out_dir / ("report_" + problem_id + "_" + algo_name + ".csv"));
        write_header(report, algo_name, problem_id, cfg.seed, budget, cfg.population, cfg.trials);
        std::vector<std::string> metric_names;
        for (int m = 0; m < lxb_problem_metric_count(problem.ptr); ++m) {
            const char* name = nullptr;
            check(lxb_problem_metric_name(problem.ptr, m, &name), "metric name");
            metric_names.emplace_back(name);
        }
        report << "source,technique";
        for (int d = 1; d <= info.dim; ++d) report << ",x" << d;
        report << ",objective_recomputed,objective_published,fitness_penalized";
        for (const auto& name : metric_names) report << ',' << name << "_recomputed";
        report << ",reliability_published,note\n";

        std::vector<double> lower(static_cast<std::size_t>(info.dim));
        std::vector<double> upper(static_cast<std::size_t>(info.dim));
        check(lxb_problem_bounds(problem.ptr, lower.data(), upper.data()), "bounds");

        auto emit_row = [&](const std::string& source, const std::string& technique,
                            const std::vector<double>& x, std::optional<double> published,
                            std::optional<double> penalized,
                            std::optional<double> published_reliability,
                            const std::string& note) {
            double raw = 0.0;
            check(lxb_problem_evaluate_raw(problem.ptr, x.data(), info.dim, &raw), "evaluate");
            report << source << ',' << technique;
            for (double v : x) report << ',' << fmt(v);
            report << ',' << fmt(raw) << ',' << (published ? fmt(*published) : std::string())
                   << ',' << (penalized ? fmt(*penalized) : std::string());
            for (int m = 0; m < static_cast<int>(metric_names.size()); ++m) {
                double value = 0.0;
                check(lxb_problem_metric_value(problem.ptr, m, x.data(), info.dim, &value),
                      "metric");
                report << ',' << fmt(value);
            }
            report << ','
                   << (published_reliability ? fmt(*published_reliability) : std::string());
            report << ',' << note << "\n";
        };

        emit_row("run", algo_name, cell.best_position, std::nullopt, cell.best_fitness,
                 std::nullopt, "");
        for (int rix = 0; rix < lxb_problem_reference_count(problem.ptr); ++rix) {
            lxb_reference_row row{};
            check(lxb_problem_reference_row(problem.ptr, rix, &row), "reference row");
            std::vector<double> x(row.vars, row.vars + row.n_vars);
            std::string note = "published reference";
            if (row.budget_note[0] != '\0') {
                note += "; budget ";
                note += row.budget_note;
            }
            for (int d = 0; d < info.dim; ++d) {
                if (x[d] < lower[d] || x[d] > upper[d]) {
                    note += "; outside variable bounds";
                    break;
                }
            }
            std::optional<double> reliability;
            if (row.has_reliability) reliability = row.reliability;
            emit_row("published_reference", row.technique, x, row.objective, std::nullopt,
                     reliability, note);
        }
    }

    lxb_trials_destroy(trials);
    return cell;
}

void write_comparison(const fs::path& path, const std::string& algo_a, const std::string& algo_b,
                      const std::vector<std::string>& problems,
                      const std::map<std::string, std::vector<double>>& fitness_a,
                      const std::map<std::string, std::vector<double>>& fitness_b,
                      const std::string& wilcoxon_mode_name) {
    const lxb_wilcoxon_mode mode = wilcoxon_mode_name == "rank-sum" ? LXB_WILCOXON_RANK_SUM
                                                                    : LXB_WILCOXON_SIGNED_RANK;
    auto out = open_out(path);
    out << "# comparison=" << algo_a << "_vs_" << algo_b << "\n";
    out << "# wilcoxon_mode=" << wilcoxon_mode_name << "\n";
    out << "# t_test=paired, two-sided, 95% confidence interval\n";
    out << "# records=trials_<algorithm>_<problem>.csv; seeds and budgets in manifest.txt\n";
    out << "problem,mean_diff,std_diff,std_error,ci_low,ci_high,t_p,t_conclusion,"
           "wilcoxon_z,wilcoxon_p,wilcoxon_sign\n";
    for (const std::string& problem : problems) {
        const auto& a = fitness_a.at(problem);
        const auto& b = fitness_b.at(problem);
        if (a.size() != b.size()) {
            fail(kExitRuntime, "trial counts differ for (" + algo_a + ", " + algo_b + ") on " +
                                   problem);
        }
        lxb_t_test t{};
        check(lxb_paired_t_test(a.data(), b.data(), static_cast<int>(a.size()), &t), "t test");
        lxb_wilcoxon w{};
        check(lxb_wilcoxon_test(a.data(), static_cast<int>(a.size()), b.data(),
                                static_cast<int>(b.size()), mode, &w),
              "wilcoxon");
        out << problem << ',' << fmt(t.mean_diff) << ',' << fmt(t.std_diff) << ','
            << fmt(t.std_error) << ',' << fmt(t.ci_low) << ',' << fmt(t.ci_high) << ','
            << fmt(t.p) << ',' << t.label << ',' << fmt(w.z) << ',' << fmt(w.p) << ','
            << w.sign << "\n";
    }
}

// ---- results-directory readers ------------------------------------------------

std::vector<double> read_final_fitness(const fs::path& file) {
    std::ifstream in(file);
    if (!in) fail(kExitRuntime, "missing trial records: " + file.string());
    std::string line;
    std::vector<double> out;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true; // column header
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() < 3) fail(kExitRuntime, "malformed trial record in " + file.string());
        out.push_back(std::strtod(cols[2].c_str(), nullptr));
    }
    if (out.empty()) fail(kExitRuntime, "no trial records in " + file.string());
    return out;
}

struct TraceCurve {
    std::vector<long long> evals;
    std::vector<double> best;
};

TraceCurve read_trace(const fs::path& file) {
    std::ifstream in(file);
    if (!in) fail(kExitRuntime, "missing trace: " + file.string());
    TraceCurve curve;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() != 2) fail(kExitRuntime, "malformed trace in " + file.string());
        curve.evals.push_back(std::strtoll(cols[0].c_str(), nullptr, 10));
        curve.best.push_back(std::strtod(cols[1].c_str(), nullptr));
    }
    return curve;
}

std::map<std::string, std::string> read_manifest(const fs::path& dir) {
    std::ifstream in(dir / "manifest.txt");
    if (!in) fail(kExitRuntime, "missing manifest.txt in " + dir.string());
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t half = values.size() / 2;
    return values.size() % 2 == 1 ? values[half] : 0.5 * (values[half - 1] + values[half]);
}

// ---- subcommands ---------------------------------------------------------------

int cmd_list() {
    std::cout << "id,name,kind,dim,lower,upper,f_min,constrained,noisy\n";
    for (const std::string& id : registry_ids()) {
        ProblemHandle problem(id, [] {
            lxb_problem_options o;
            lxb_problem_options_init(&o);
            return o;
        }());
        lxb_problem_info info{};
        check(lxb_problem_info_get(problem.ptr, &info), "info");
        std::vector<double> lower(static_cast<std::size_t>(info.dim));
        std::vector<double> upper(static_cast<std::size_t>(info.dim));
        check(lxb_problem_bounds(problem.ptr, lower.data(), upper.data()), "bounds");
        // Uniform boxes collapse to a single value per side.
        auto side = [](const std::vector<double>& v) {
            const bool uniform = std::all_of(v.begin(), v.end(),
                                             [&](double x) { return x == v.front(); });
            if (uniform) return fmt(v.front());
            std::vector<std::string> parts;
            for (double x : v) parts.push_back(fmt(x));
            return join(parts, ";");
        };
        std::cout << info.id << ',' << info.name << ',' << info.kind << ',' << info.dim << ','
                  << side(lower) << ',' << side(upper) << ','
                  << (info.has_known_minimum ? fmt(info.f_min) : std::string()) << ','
                  << info.constrained << ',' << info.noisy << "\n";
    }
    return 0;
}

int cmd_run(const ExperimentConfig& cfg) {
    if (cfg.out_dir.empty()) fail(kExitValidation, "run needs --out");
    if (cfg.trials < 1) fail(kExitValidation, "trials must be >= 1");
    const std::vector<std::string> problems = expand_problems(cfg.problems);
    const std::vector<lxb_algorithm> algorithms = parse_algorithms(cfg.algorithms);

    const fs::path out_dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) fail(kExitRuntime, "cannot create output directory " + out_dir.string());

    // Manifest first: full provenance for every file in the directory.
    {
        auto manifest = open_out(out_dir / "manifest.txt");
        manifest << "tool=lxbbsca-cli\n";
        manifest << "version=" << lxb_version() << "\n";
        std::vector<std::string> algo_names;
        for (lxb_algorithm a : algorithms) algo_names.push_back(lxb_algorithm_name(a));
        manifest << "algorithms=" << join(algo_names, ",") << "\n";
        manifest << "problems=" << join(problems, ",") << "\n";
        manifest << "trials=" << cfg.trials << "\n";
        manifest << "population=" << cfg.population << "\n";
        manifest << "base_seed=" << cfg.seed << "\n";
        manifest << "seed_policy=base_seed+trial_index\n";
        manifest << "eq5_mode=" << cfg.eq5_mode << "\n";
        manifest << "r2_mode=" << cfg.r2_mode << "\n";
        manifest << "wilcoxon=" << cfg.wilcoxon << "\n";
        manifest << "siv_replace=" << cfg.siv_replace << "\n";
        manifest << "bridge_mode=" << cfg.bridge_mode << "\n";
        manifest << "penalty_coeff=" << fmt(cfg.penalty_coeff) << "\n";
        manifest << "penalty_exp=" << fmt(cfg.penalty_exp) << "\n";
        manifest << "mutation_rate=" << fmt(cfg.mutation_rate) << "\n";
        manifest << "laplace_a=" << fmt(cfg.laplace_a) << "\n";
        manifest << "laplace_b=" << fmt(cfg.laplace_b) << "\n";
        manifest << "gamma_min=" << fmt(cfg.gamma_min) << "\n";
        manifest << "gamma_max=" << fmt(cfg.gamma_max) << "\n";
        manifest << "gamma_k=" << fmt(cfg.gamma_k) << "\n";
        manifest << "elitism=" << cfg.elitism << "\n";
        manifest << "integer_gear=" << (cfg.integer_gear ? 1 : 0) << "\n";
        for (const std::string& p : problems) {
            manifest << "budget." << p << "=" << budget_for(cfg, p) << "\n";
        }
    }

    // algorithm -> problem -> final fitness vector
    std::map<std::string, std::map<std::string, std::vector<double>>> fitness;
    std::map<std::string, std::vector<CellResult>> cells;
    for (lxb_algorithm algo : algorithms) {
        const std::string algo_name = lxb_algorithm_name(algo);
        for (const std::string& problem_id : problems) {
            CellResult cell = run_cell(cfg, algo_name, algo, problem_id, out_dir);
            fitness[algo_name][problem_id] = cell.final_fitness;
            cells[algo_name].push_back(std::move(cell));
        }
    }

    // Summary table per algorithm, problems as rows (Min Max Std Average Median).
    for (lxb_algorithm algo : algorithms) {
        const std::string algo_name = lxb_algorithm_name(algo);
        auto out = open_out(out_dir / ("summary_" + algo_name + ".csv"));
        out << "# algorithm=" << algo_name << "\n";
        out << "# trials=" << cfg.trials << "\n";
        out << "# seed_policy=base_seed+trial_index, base_seed=" << cfg.seed << "\n";
        for (const std::string& p : problems) {
            out << "# budget." << p << "=" << budget_for(cfg, p) << "\n";
        }
        out << "problem,min,max,std,average,median\n";
        for (const CellResult& cell : cells[algo_name]) {
            out << cell.problem << ',' << fmt(cell.summary.min) << ',' << fmt(cell.summary.max)
                << ',' << fmt(cell.summary.std) << ',' << fmt(cell.summary.average) << ','
                << fmt(cell.summary.median) << "\n";
        }
    }

    // Pairwise comparisons in configuration order.
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
            const std::string a = lxb_algorithm_name(algorithms[i]);
            const std::string b = lxb_algorithm_name(algorithms[j]);
            write_comparison(out_dir / ("compare_" + a + "_vs_" + b + ".csv"), a, b, problems,
                             fitness[a], fitness[b], cfg.wilcoxon);
        }
    }
    return 0;
}

int cmd_compare(const std::string& dir, const std::string& algo_a, const std::string& algo_b,
                const std::string& wilcoxon_mode) {
    const fs::path results(dir);
    if (!fs::is_directory(results)) fail(kExitRuntime, "not a results directory: " + dir);

    auto problems_of = [&](const std::string& algo) {
        std::set<std::string> problems;
        const std::string prefix = "trials_" + algo + "_";
        for (const auto& entry : fs::directory_iterator(results)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 4 &&
                name.substr(name.size() - 4) == ".csv") {
                problems.insert(name.substr(prefix.size(), name.size() - prefix.size() - 4));
            }
        }
        return problems;
    };

    const std::set<std::string> pa = problems_of(algo_a);
    const std::set<std::string> pb = problems_of(algo_b);
    if (pa.empty()) fail(kExitRuntime, "no trial records for (" + algo_a + ", *) in " + dir);
    if (pb.empty()) fail(kExitRuntime, "no trial records for (" + algo_b + ", *) in " + dir);

    std::vector<std::string> problems;
    for (const std::string& p : pa) {
        if (pb.count(p)) problems.push_back(p);
    }
    if (problems.empty()) {
        fail(kExitRuntime,
             "no common problems recorded for (" + algo_a + ", " + algo_b + ") in " + dir);
    }
    // Natural order: F2 before F10, engineering ids after the benchmarks.
    std::sort(problems.begin(), problems.end(), [](const std::string& a, const std::string& b) {
        int na = 0, nb = 0;
        const bool fa = std::sscanf(a.c_str(), "F%d", &na) == 1;
        const bool fb = std::sscanf(b.c_str(), "F%d", &nb) == 1;
        if (fa && fb) return na < nb;
        if (fa != fb) return fa;
        return a < b;
    });

    std::map<std::string, std::vector<double>> fa, fb;
    for (const std::string& p : problems) {
        fa[p] = read_final_fitness(results / ("trials_" + algo_a + "_" + p + ".csv"));
        fb[p] = read_final_fitness(results / ("trials_" + algo_b + "_" + p + ".csv"));
    }
    write_comparison(results / ("compare_" + algo_a + "_vs_" + algo_b + ".csv"), algo_a, algo_b,
                     problems, fa, fb, wilcoxon_mode);
    return 0;
}

int cmd_traces(const std::string& dir, const std::string& problem_id) {
    const fs::path results(dir);
    const fs::path trace_dir = results / "traces";
    if (!fs::is_directory(trace_dir)) fail(kExitRuntime, "no traces directory in " + dir);

    const auto manifest = read_manifest(results);
    const auto budget_key = "budget." + problem_id;
    if (!manifest.count(budget_key) || !manifest.count("population")) {
        fail(kExitRuntime, "manifest lacks budget/population entries for " + problem_id);
    }
    const long long budget = std::strtoll(manifest.at(budget_key).c_str(), nullptr, 10);
    const long long population = std::strtoll(manifest.at("population").c_str(), nullptr, 10);

    // Checkpoint grid spanning [population, budget].
    std::vector<long long> checkpoints;
    const int points = 100;
    for (int k = 0; k < points; ++k) {
        const long long cp =
            population + (budget - population) * static_cast<long long>(k) / (points - 1);
        if (checkpoints.empty() || cp > checkpoints.back()) checkpoints.push_back(cp);
    }

    bool any = false;
    for (const char* algo : {"BBO", "LXBBO", "SCA", "LXBBSCA"}) {
        std::vector<TraceCurve> curves;
        for (int trial = 0;; ++trial) {
            const fs::path file = trace_dir / (std::string(algo) + "_" + problem_id + "_t" +
                                               std::to_string(trial) + ".csv");
            if (!fs::exists(file)) break;
            curves.push_back(read_trace(file));
        }
        if (curves.empty()) continue;
        any = true;

        auto out = open_out(results / ("trace_median_" + std::string(algo) + "_" + problem_id +
                                       ".txt"));
        out << "# algorithm=" << algo << "\n";
        out << "# problem=" << problem_id << "\n";
        out << "# trials=" << curves.size() << "\n";
        out << "# budget=" << budget << "\n";
        out << "# population=" << population << "\n";
        out << "# seed_policy=base_seed+trial_index; base seed in manifest.txt\n";
        out << "# columns=eval_count median_best_fitness\n";
        for (long long cp : checkpoints) {
            std::vector<double> at;
            for (const TraceCurve& curve : curves) {
                double value = curve.best.empty() ? 0.0 : curve.best.front();
                for (std::size_t k = 0; k < curve.evals.size() && curve.evals[k] <= cp; ++k) {
                    value = curve.best[k];
                }
                at.push_back(value);
            }
            out << cp << ' ' << fmt(median_of(at)) << "\n";
        }
    }
    if (!any) fail(kExitRuntime, "no traces recorded for problem " + problem_id + " in " + dir);
    return 0;
}

// Applies config-file values for flags the user did not pass explicitly.
void merge_config_file(const std::string& path, CLI::App* run, ExperimentConfig& cfg) {
    std::ifstream in(path);
    if (!in) fail(kExitValidation, "cannot read config file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(kExitValidation, std::string("config file parse error: ") + e.what());
    }
    auto unset = [&](const std::string& flag) { return run->count(flag) == 0; };
    if (doc.contains("algorithms") && unset("--algorithms")) {
        cfg.algorithms = doc["algorithms"].get<std::vector<std::string>>();
    }
    if (doc.contains("problems") && unset("--problems")) {
        cfg.problems = doc["problems"].get<std::vector<std::string>>();
    }
    if (doc.contains("trials") && unset("--trials")) cfg.trials = doc["trials"].get<int>();
    if (doc.contains("budget") && unset("--budget")) {
        cfg.budget = doc["budget"].get<long long>();
    }
    if (doc.contains("pop") && unset("--pop")) cfg.population = doc["pop"].get<int>();
    if (doc.contains("seed") && unset("--seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("out") && unset("--out")) cfg.out_dir = doc["out"].get<std::string>();
    if (doc.contains("eq5_mode") && unset("--eq5-mode")) {
        cfg.eq5_mode = doc["eq5_mode"].get<std::string>();
    }
    if (doc.contains("r2_mode") && unset("--r2-mode")) {
        cfg.r2_mode = doc["r2_mode"].get<std::string>();
    }
    if (doc.contains("wilcoxon") && unset("--wilcoxon")) {
        cfg.wilcoxon = doc["wilcoxon"].get<std::string>();
    }
    if (doc.contains("siv_replace") && unset("--siv-replace")) {
        cfg.siv_replace = doc["siv_replace"].get<std::string>();
    }
    if (doc.contains("bridge_mode") && unset("--bridge-mode")) {
        cfg.bridge_mode = doc["bridge_mode"].get<std::string>();
    }
    if (doc.contains("penalty_coeff") && unset("--penalty-coeff")) {
        cfg.penalty_coeff = doc["penalty_coeff"].get<double>();
    }
    if (doc.contains("penalty_exp") && unset("--penalty-exp")) {
        cfg.penalty_exp = doc["penalty_exp"].get<double>();
    }
    if (doc.contains("mutation_rate") && unset("--mutation-rate")) {
        cfg.mutation_rate = doc["mutation_rate"].get<double>();
    }
    if (doc.contains("laplace_a") && unset("--laplace-a")) {
        cfg.laplace_a = doc["laplace_a"].get<double>();
    }
    if (doc.contains("laplace_b") && unset("--laplace-b")) {
        cfg.laplace_b = doc["laplace_b"].get<double>();
    }
    if (doc.contains("gamma_min") && unset("--gamma-min")) {
        cfg.gamma_min = doc["gamma_min"].get<double>();
    }
    if (doc.contains("gamma_max") && unset("--gamma-max")) {
        cfg.gamma_max = doc["gamma_max"].get<double>();
    }
    if (doc.contains("gamma_k") && unset("--gamma-k")) {
        cfg.gamma_k = doc["gamma_k"].get<double>();
    }
    if (doc.contains("elitism") && unset("--elitism")) cfg.elitism = doc["elitism"].get<int>();
    if (doc.contains("integer_gear") && unset("--integer-gear")) {
        cfg.integer_gear = doc["integer_gear"].get<bool>();
    }
    if (doc.contains("threads") && unset("--threads")) cfg.threads = doc["threads"].get<int>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiment harness for the lxbbsca optimization library"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "Print the problem registry as CSV");

    ExperimentConfig cfg;
    std::string config_file;
    auto* run = app.add_subcommand("run", "Run an experiment matrix and export reports");
    run->add_option("--algorithms", cfg.algorithms,
                    "Comma-separated algorithms (BBO, LXBBO, SCA, LXBBSCA)")
        ->delimiter(',');
    run->add_option("--problems", cfg.problems,
                    "Problem ids; supports F3..F9 ranges and all/benchmarks/engineering")
        ->delimiter(',');
    run->add_option("--trials", cfg.trials, "Independent trials per cell");
    run->add_option("--budget", cfg.budget,
                    "Objective evaluations per trial (0 = per-problem default)");
    run->add_option("--pop", cfg.population, "Population size");
    run->add_option("--seed", cfg.seed, "Base seed; trial i uses base_seed + i");
    run->add_option("--out", cfg.out_dir, "Output directory");
    run->add_option("--eq5-mode", cfg.eq5_mode, "Blend schedule: progress|literal")
        ->check(CLI::IsMember({"progress", "literal"}));
    run->add_option("--r2-mode", cfg.r2_mode, "Oscillation angle range: two-pi|strict")
        ->check(CLI::IsMember({"two-pi", "strict"}));
    run->add_option("--wilcoxon", cfg.wilcoxon, "Wilcoxon mode: signed-rank|rank-sum")
        ->check(CLI::IsMember({"signed-rank", "rank-sum"}));
    run->add_option("--siv-replace", cfg.siv_replace,
                    "Ensemble replacement branch: donor-copy|uniform-reset")
        ->check(CLI::IsMember({"donor-copy", "uniform-reset"}));
    run->add_option("--bridge-mode", cfg.bridge_mode,
                    "Bridge constraint: literal|system")
        ->check(CLI::IsMember({"literal", "system"}));
    run->add_option("--penalty-coeff", cfg.penalty_coeff, "Constraint penalty coefficient");
    run->add_option("--penalty-exp", cfg.penalty_exp, "Constraint penalty exponent");
    run->add_option("--mutation-rate", cfg.mutation_rate, "Per-variable mutation rate");
    run->add_option("--laplace-a", cfg.laplace_a, "Laplace spread location");
    run->add_option("--laplace-b", cfg.laplace_b, "Laplace spread scale (> 0)");
    run->add_option("--gamma-min", cfg.gamma_min, "Blend weight lower bound");
    run->add_option("--gamma-max", cfg.gamma_max, "Blend weight upper bound");
    run->add_option("--gamma-k", cfg.gamma_k, "Blend schedule exponent");
    run->add_option("--elitism", cfg.elitism, "Elites preserved per generation");
    run->add_flag("--integer-gear", cfg.integer_gear,
                  "Round gear-train variables before evaluating");
    run->add_option("--threads", cfg.threads, "Worker threads for trials");
    run->add_option("--config", config_file, "JSON config file; flags override it");

    std::string cmp_dir, cmp_a, cmp_b, cmp_wilcoxon = "signed-rank";
    auto* compare = app.add_subcommand("compare", "Pairwise report from recorded trials");
    compare->add_option("dir", cmp_dir, "Results directory")->required();
    compare->add_option("algo_a", cmp_a, "First algorithm")->required();
    compare->add_option("algo_b", cmp_b, "Second algorithm")->required();
    compare->add_option("--wilcoxon", cmp_wilcoxon, "signed-rank|rank-sum")
        ->check(CLI::IsMember({"signed-rank", "rank-sum"}));

    std::string tr_dir, tr_problem;
    auto* traces = app.add_subcommand("traces", "Median convergence curves for one problem");
    traces->add_option("dir", tr_dir, "Results directory")->required();
    traces->add_option("problem", tr_problem, "Problem id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitValidation;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (run->parsed()) {
            if (!config_file.empty()) merge_config_file(config_file, run, cfg);
            return cmd_run(cfg);
        }
        if (compare->parsed()) {
            lxb_algorithm a;
            if (lxb_algorithm_from_name(cmp_a.c_str(), &a) != LXB_OK) {
                fail(kExitValidation, "unknown algorithm: " + cmp_a);
            }
            if (lxb_algorithm_from_name(cmp_b.c_str(), &a) != LXB_OK) {
                fail(kExitValidation, "unknown algorithm: " + cmp_b);
            }
            return cmd_compare(cmp_dir, cmp_a, cmp_b, cmp_wilcoxon);
        }
        if (traces->parsed()) return cmd_traces(tr_dir, tr_problem);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
