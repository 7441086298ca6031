#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ffmsp/engine.hpp"

namespace ffmsp {

// Relative percentage distance to the best solution of the same instance:
// (best - sol) * 100 / best, with the degenerate best = 0 defined as 0.
double rpd(std::int64_t sol, std::int64_t best);

// Improvement of the reference algorithm over another, in percentage points
// of mean RPD.
double improvement_pct(double rpd_mean_other, double rpd_mean_ref);

struct AlgorithmSpec {
    std::string name;  // reporting label, unique within a suite
    std::string kind;  // "ma" | "grasp"
    MAConfig config;   // seed/label filled per run; empty budget inherits the suite's
};

struct SuiteSpec {
    std::string source = "random";  // "random" or a FASTA path
    std::string alphabet = "ACGT";
    std::vector<int> n_values;
    std::vector<int> m_values;
    std::vector<double> d_fractions;
    int instances_per_cell = 5;
    int runs_per_instance = 10;
    std::uint64_t seed = 1;
    std::uint64_t max_evals = 0;
    double time_limit_s = 0.0;
    std::vector<AlgorithmSpec> algorithms;

    void validate() const;
};

// Plain sectioned key = value text; see docs/suite-format.md for the grammar.
SuiteSpec parse_suite_spec(std::istream& in);
SuiteSpec load_suite_spec(const std::string& path);

struct SummaryRow {
    double d_frac = 0.0;  // threshold / m of the cell
    int n = 0;
    int m = 0;
    int d = 0;
    std::string algorithm;
    double mean_sol = 0.0;
    double rpd_mean = 0.0;
    double rpd_std = 0.0;
    // (other algorithm, rpd_mean(other) - rpd_mean(this)), sorted by name
    std::vector<std::pair<std::string, double>> improvement_vs;
};

// Generates the instance grid deterministically from the master seed and
// executes every (instance, algorithm, run) combination; run seeds derive
// from (master, instance id, algorithm name, run index).  workers > 1
// distributes runs over threads; records come back in a fixed order (cell,
// algorithm, instance, run) regardless of scheduling.  on_complete, if set,
// is invoked once per finished run from the worker that ran it (serialized).
std::vector<RunRecord> run_suite(const SuiteSpec& spec, int workers = 1,
                                 const std::function<void(const RunRecord&)>& on_complete = {});

// Per-cell, per-algorithm means; pure in the record order.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

void write_runs_csv(const std::vector<RunRecord>& records, std::ostream& out);
void write_sqt_csv(const std::vector<RunRecord>& records, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

// Reads back the columns write_runs_csv emits (other RunRecord fields stay
// default); accepts exactly that header.
std::vector<RunRecord> read_runs_csv(std::istream& in);

}  // namespace ffmsp
