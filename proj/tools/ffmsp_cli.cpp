// ffmsp: instance generation, single solves and benchmark suites from one
// binary.  See README.md for examples and docs/suite-format.md for the
// benchmark description format.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffmsp/bench.hpp"
#include "ffmsp/engine.hpp"
#include "ffmsp/problem_io.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string fasta_symbols(const std::string& path) {
    std::string sequence;
    for (const auto& rec : ffmsp::parse_fasta(slurp(path))) sequence += rec.sequence;
    return sequence;
}

// The JSON report deliberately carries no wall-clock data, so a rerun with
// the same seed and evaluation budget is byte-identical; timings go to
// stdout and the per-run CSVs instead.
ordered_json run_report(const ffmsp::RunRecord& rec) {
    ordered_json j;
    j["instance_id"] = rec.instance_id;
    j["algorithm"] = rec.algorithm;
    j["seed"] = rec.seed;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["d"] = rec.d;
    j["best_f"] = rec.best_f;
    j["best_h"] = rec.best_h;
    j["best_string"] = rec.best_string;
    j["evaluations"] = rec.evaluations;
    j["config"] = ordered_json{{"pop_size", rec.config.pop_size},
                               {"px", rec.config.p_x},
                               {"pm", rec.config.p_m},
                               {"alpha", rec.config.alpha},
                               {"init", ffmsp::to_string(rec.config.init_mode)},
                               {"xover", ffmsp::to_string(rec.config.crossover_mode)},
                               {"ls", ffmsp::to_string(rec.config.local_search)},
                               {"max_evals", rec.config.max_evals},
                               {"time_limit_s", rec.config.time_limit_s},
                               {"stop_at_optimum", rec.config.stop_at_optimum}};
    ordered_json traj = ordered_json::array();
    for (const auto& tp : rec.trajectory) {
        traj.push_back(ordered_json{{"evals", tp.evals},
                                    {"best_f", tp.best_f},
                                    {"best_h", tp.best_h}});
    }
    j["trajectory"] = std::move(traj);
    return j;
}

std::string trajectory_csv(const ffmsp::RunRecord& rec) {
    std::ostringstream out;
    out << "evals,best_f,best_h\n";
    char buf[64];
    for (const auto& tp : rec.trajectory) {
        std::snprintf(buf, sizeof buf, "%.17g", tp.best_h);
        out << tp.evals << ',' << tp.best_f << ',' << buf << '\n';
    }
    return out.str();
}

int cmd_gen(const std::string& fasta, int n, int m, double d_frac,
            const std::string& alphabet, std::uint64_t seed, const std::string& out) {
    const ffmsp::Alphabet sigma(alphabet);
    const ffmsp::Instance inst =
        fasta.empty()
            ? ffmsp::generate_random_instance(n, m, d_frac, sigma, seed)
            : ffmsp::extract_real_instance(fasta_symbols(fasta), n, m, d_frac, seed, sigma);
    ffmsp::save_instance(inst, out);
    std::cout << "wrote " << inst.id() << " (n=" << inst.n() << " m=" << inst.m()
              << " d=" << inst.threshold() << ") to " << out << "\n";
    return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& algo,
              const ffmsp::MAConfig& cfg, const std::string& out_json,
              const std::string& out_csv) {
    const ffmsp::Instance inst = ffmsp::load_instance(instance_path);
    const ffmsp::RunRecord rec = algo == "grasp" ? ffmsp::run_grasp_baseline(inst, cfg)
                                                 : ffmsp::run_ma(inst, cfg);
    if (!out_json.empty()) write_text(out_json, run_report(rec).dump(2) + "\n");
    if (!out_csv.empty()) write_text(out_csv, trajectory_csv(rec));
    std::cout << "instance " << rec.instance_id << ": best_f=" << rec.best_f << "/" << rec.n
              << " best_h=" << rec.best_h << " evaluations=" << rec.evaluations
              << " wall_ms=" << rec.wall_ms << "\n";
    return 0;
}

int cmd_bench(const std::string& spec_path, int workers, const std::string& out_dir) {
    const ffmsp::SuiteSpec spec = ffmsp::load_suite_spec(spec_path);
    std::filesystem::create_directories(out_dir);

    const std::size_t total = spec.d_fractions.size() * spec.n_values.size() *
                              spec.m_values.size() *
                              static_cast<std::size_t>(spec.instances_per_cell) *
                              static_cast<std::size_t>(spec.runs_per_instance) *
                              spec.algorithms.size();
    std::size_t done = 0;
    const auto progress = [&](const ffmsp::RunRecord& rec) {
        ++done;
        std::cerr << "[" << done << "/" << total << "] " << rec.instance_id << " "
                  << rec.algorithm << " run " << rec.run_index << " best_f=" << rec.best_f
                  << " (" << rec.wall_ms << " ms)\n";
    };
    const std::vector<ffmsp::RunRecord> records = ffmsp::run_suite(spec, workers, progress);

    const auto path = [&](const char* name) {
        return (std::filesystem::path(out_dir) / name).string();
    };
    {
        std::ofstream out(path("runs.csv"), std::ios::binary);
        ffmsp::write_runs_csv(records, out);
    }
    {
        std::ofstream out(path("sqt.csv"), std::ios::binary);
        ffmsp::write_sqt_csv(records, out);
    }
    {
        std::ofstream out(path("summary.csv"), std::ios::binary);
        ffmsp::write_summary_csv(ffmsp::summarize(records), out);
    }

    // Host metadata for honest cross-machine comparison of wall-clock runs;
    // everything time-dependent lives here, never in summary.csv.
    ordered_json meta;
    meta["spec"] = spec_path;
    meta["seed"] = spec.seed;
    meta["runs"] = records.size();
    meta["workers"] = workers;
    meta["hardware_threads"] = std::thread::hardware_concurrency();
    const auto now = std::chrono::system_clock::now();
    meta["unix_time"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    write_text(path("meta.json"), meta.dump(2) + "\n");

    std::cout << "wrote " << records.size() << " runs to " << out_dir
              << " (runs.csv, sqt.csv, summary.csv, meta.json)\n";
    return 0;
}

int cmd_summarize(const std::string& runs_path, const std::string& out_path) {
    std::ifstream in(runs_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + runs_path);
    const std::vector<ffmsp::RunRecord> records = ffmsp::read_runs_csv(in);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    ffmsp::write_summary_csv(ffmsp::summarize(records), out);
    std::cout << "summarized " << records.size() << " runs to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"far from most string: generation, solving and benchmarking"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random or FASTA-extracted instance");
    std::string gen_fasta, gen_alphabet = "ACGT", gen_out;
    int gen_n = 100, gen_m = 300;
    double gen_d_frac = 0.8;
    std::uint64_t gen_seed = 1;
    gen->add_option("--fasta", gen_fasta, "extract strings from this FASTA file");
    gen->add_option("--n", gen_n, "number of strings");
    gen->add_option("--m", gen_m, "string length");
    gen->add_option("--d-frac", gen_d_frac, "threshold as a fraction of m");
    gen->add_option("--alphabet", gen_alphabet, "alphabet symbols");
    gen->add_option("--seed", gen_seed, "generation seed");
    gen->add_option("--out", gen_out, "output instance file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "run one algorithm on one instance");
    std::string solve_instance, solve_algo = "ma", solve_init = "grasp";
    std::string solve_xover = "pr", solve_ls = "hc", solve_json, solve_csv;
    ffmsp::MAConfig cfg;
    solve->add_option("--instance", solve_instance, "instance file")->required();
    solve->add_option("--algo", solve_algo, "ma or grasp")
        ->check(CLI::IsMember({"ma", "grasp"}));
    solve->add_option("--init", solve_init, "population initialization: grasp or random")
        ->check(CLI::IsMember({"grasp", "random"}));
    solve->add_option("--xover", solve_xover, "recombination: pr or ux")
        ->check(CLI::IsMember({"pr", "ux"}));
    solve->add_option("--ls", solve_ls, "local search: hc or none")
        ->check(CLI::IsMember({"hc", "none"}));
    solve->add_option("--alpha", cfg.alpha, "construction greediness in [0, 1]");
    solve->add_option("--pop-size", cfg.pop_size, "population size");
    solve->add_option("--px", cfg.p_x, "recombination probability");
    solve->add_option("--pm", cfg.p_m, "mutation probability (-1 means 1/m)");
    solve->add_option("--time-limit-s", cfg.time_limit_s, "wall clock budget in seconds");
    solve->add_option("--max-evals", cfg.max_evals, "evaluation budget (0 = none)");
    solve->add_option("--seed", cfg.seed, "run seed");
    bool solve_no_stop = false;
    solve->add_flag("--no-stop-at-optimum", solve_no_stop, "keep running after f = n");
    solve->add_option("--out-json", solve_json, "write the run report here");
    solve->add_option("--out-csv", solve_csv, "write the improvement trajectory here");

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    std::string bench_spec, bench_dir;
    int bench_workers = 1;
    bench->add_option("--spec", bench_spec, "suite description file")->required();
    bench->add_option("--workers", bench_workers, "parallel workers");
    bench->add_option("--out-dir", bench_dir, "output directory")->required();

    // summarize
    auto* summ = app.add_subcommand("summarize", "aggregate a per-run CSV");
    std::string summ_runs, summ_out;
    summ->add_option("--runs", summ_runs, "per-run CSV (as written by bench)")->required();
    summ->add_option("--out", summ_out, "summary CSV destination")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return cmd_gen(gen_fasta, gen_n, gen_m, gen_d_frac, gen_alphabet, gen_seed,
                           gen_out);
        }
        if (solve->parsed()) {
            cfg.stop_at_optimum = !solve_no_stop;
            cfg.init_mode = ffmsp::parse_init_mode(solve_init);
            cfg.crossover_mode = ffmsp::parse_crossover_mode(solve_xover);
            cfg.local_search = ffmsp::parse_local_search(solve_ls);
            cfg.label = solve_algo;
            return cmd_solve(solve_instance, solve_algo, cfg, solve_json, solve_csv);
        }
        if (bench->parsed()) return cmd_bench(bench_spec, bench_workers, bench_dir);
        if (summ->parsed()) return cmd_summarize(summ_runs, summ_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
