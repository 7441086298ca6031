#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffmsp/budget.hpp"
#include "ffmsp/construct.hpp"
#include "ffmsp/heuristic.hpp"
#include "ffmsp/problem.hpp"
#include "ffmsp/rng.hpp"

namespace ffmsp {

enum class InitMode { grasp, random_init };
enum class CrossoverMode { pr, ux };
enum class LocalSearch { hc, none };

// Sub-stream ids of the master seed, one per stochastic component, so that
// toggling one component never perturbs the draws of the others.
namespace rng_streams {
inline constexpr std::uint64_t init = 0;       // random initialization strings
inline constexpr std::uint64_t selection = 1;  // tournament draws
inline constexpr std::uint64_t xover_coin = 2; // crossover-vs-clone decision
inline constexpr std::uint64_t ux_mix = 3;     // uniform crossover bits
inline constexpr std::uint64_t mutation = 4;   // mutation coins and redraws
inline constexpr std::uint64_t grasp = 5;      // GRASP beta and RCL picks
}  // namespace rng_streams

std::string to_string(InitMode mode);
std::string to_string(CrossoverMode mode);
std::string to_string(LocalSearch mode);
InitMode parse_init_mode(const std::string& s);
CrossoverMode parse_crossover_mode(const std::string& s);
LocalSearch parse_local_search(const std::string& s);

struct MAConfig {
    int pop_size = 100;
    double p_x = 0.9;
    double p_m = -1.0;  // sentinel: resolved to 1/m at run start
    double alpha = 0.1;
    InitMode init_mode = InitMode::grasp;
    CrossoverMode crossover_mode = CrossoverMode::pr;
    LocalSearch local_search = LocalSearch::hc;
    // Budget: at least one bound must be set.  max_evals counts h
    // computations; time_limit_s is wall clock.
    std::uint64_t max_evals = 0;
    double time_limit_s = 0.0;
    std::uint64_t seed = 0;
    // Once f reaches n no string can score better (h is then exactly
    // (n+1)*n for every such string), so searching further is pointless.
    bool stop_at_optimum = true;
    // Reporting name; empty picks "ma" / "grasp".
    std::string label;

    void validate() const;
};

struct Individual {
    CandidateString s;
    DistanceProfile profile;
    HeuristicValue h;
};

struct TrajectoryPoint {
    std::int64_t elapsed_ms = 0;
    std::uint64_t evals = 0;
    std::int64_t best_f = 0;
    double best_h = 0.0;
};

struct RunRecord {
    std::string instance_id;
    std::string algorithm;
    std::uint64_t seed = 0;
    int run_index = 0;
    int n = 0;
    int m = 0;
    int d = 0;
    std::int64_t best_f = 0;
    double best_h = 0.0;
    std::string best_string;
    std::uint64_t evaluations = 0;
    std::int64_t wall_ms = 0;
    std::vector<TrajectoryPoint> trajectory;  // appended at every improvement
    MAConfig config;                          // resolved echo (p_m concrete)
};

// Draws two members uniformly with replacement, returns the one with larger
// h.total; ties keep the first draw.
const Individual& binary_tournament(const std::vector<Individual>& pop, Rng& rng);

// Steady state: offspring replaces the current worst member (lowest h.total,
// first such index) iff strictly better.  Returns whether it entered.
bool replace(std::vector<Individual>& pop, Individual offspring);

// The memetic algorithm: GRASP or random initialization, tournament
// selection, PR or UX recombination with probability p_x (otherwise cloning),
// mutation, optional hill climbing, replace-worst survival.  Initialization
// always completes even if it overruns the budget, so the population
// invariant holds and a degenerate budget returns the best initial member.
// Deterministic for fixed (instance, seed, max_evals) budgets.  shared_tables
// may pass precomputed tables for inst's (m, sigma); null builds them
// locally.
RunRecord run_ma(const Instance& inst, const MAConfig& cfg,
                 const HeuristicTables* shared_tables = nullptr);

// Iterated GRASP baseline: construct with alpha, improve per cfg.local_search
// (default hill climbing), repeat until the budget runs out, tracking the
// best by h.  Ignores pop_size/p_x/p_m/init_mode/crossover_mode.
RunRecord run_grasp_baseline(const Instance& inst, const MAConfig& cfg,
                             const HeuristicTables* shared_tables = nullptr);

}  // namespace ffmsp
