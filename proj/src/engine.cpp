#include <cassert>
#include <chrono>
#include <random>
#include <stdexcept>
#include <utility>

#include "ffmsp/engine.hpp"
#include "ffmsp/operators.hpp"

namespace ffmsp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

EvalBudget make_budget(const MAConfig& cfg) {
    EvalBudget b;
    if (cfg.max_evals > 0) b.max_evals = cfg.max_evals;
    if (cfg.time_limit_s > 0.0) b.start_timer(cfg.time_limit_s);
    return b;
}

// Shared bookkeeping for both drivers: best-ever tracking plus the
// improvement trajectory.
struct BestTracker {
    Clock::time_point t0;
    const EvalBudget& budget;
    RunRecord& rec;
    CandidateString best;
    HeuristicValue best_h{};
    bool has_best = false;

    void consider(const CandidateString& s, const HeuristicValue& h) {
        if (has_best && h.total <= best_h.total) return;
        has_best = true;
        best = s;
        best_h = h;
        rec.trajectory.push_back(TrajectoryPoint{elapsed_ms(t0), budget.used,
                                                 static_cast<std::int64_t>(h.far_count),
                                                 h.total});
    }
};

MAConfig resolve(const Instance& inst, const MAConfig& cfg, const char* fallback) {
    cfg.validate();
    MAConfig rc = cfg;
    if (rc.p_m < 0.0) rc.p_m = 1.0 / inst.m();
    if (rc.label.empty()) rc.label = fallback;
    return rc;
}

void finish(RunRecord& rec, const Instance& inst, const MAConfig& rc,
            const BestTracker& tracker, const EvalBudget& budget,
            Clock::time_point t0) {
    rec.instance_id = inst.id();
    rec.algorithm = rc.label;
    rec.seed = rc.seed;
    rec.n = inst.n();
    rec.m = inst.m();
    rec.d = inst.threshold();
    rec.best_f = tracker.best_h.far_count;
    rec.best_h = tracker.best_h.total;
    rec.best_string = decode(tracker.best, inst.alphabet());
    rec.evaluations = budget.used;
    rec.wall_ms = elapsed_ms(t0);
    rec.config = rc;
}

}  // namespace

std::string to_string(InitMode mode) {
    return mode == InitMode::grasp ? "grasp" : "random";
}
std::string to_string(CrossoverMode mode) {
    return mode == CrossoverMode::pr ? "pr" : "ux";
}
std::string to_string(LocalSearch mode) {
    return mode == LocalSearch::hc ? "hc" : "none";
}

InitMode parse_init_mode(const std::string& s) {
    if (s == "grasp") return InitMode::grasp;
    if (s == "random") return InitMode::random_init;
    throw std::invalid_argument("unknown init mode: " + s);
}
CrossoverMode parse_crossover_mode(const std::string& s) {
    if (s == "pr") return CrossoverMode::pr;
    if (s == "ux") return CrossoverMode::ux;
    throw std::invalid_argument("unknown crossover mode: " + s);
}
LocalSearch parse_local_search(const std::string& s) {
    if (s == "hc") return LocalSearch::hc;
    if (s == "none") return LocalSearch::none;
    throw std::invalid_argument("unknown local search mode: " + s);
}

void MAConfig::validate() const {
    if (pop_size < 2) throw std::invalid_argument("pop_size must be >= 2");
    if (p_x < 0.0 || p_x > 1.0) throw std::invalid_argument("p_x must lie in [0, 1]");
    if (p_m > 1.0 || (p_m < 0.0 && p_m != -1.0)) {
        throw std::invalid_argument("p_m must lie in [0, 1] (or -1 for 1/m)");
    }
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
    if (max_evals == 0 && time_limit_s <= 0.0) {
        throw std::invalid_argument("at least one budget bound must be set");
    }
}

const Individual& binary_tournament(const std::vector<Individual>& pop, Rng& rng) {
    if (pop.empty()) throw std::logic_error("binary_tournament: empty population");
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    const Individual& a = pop[pick(rng)];
    const Individual& b = pop[pick(rng)];
    return a.h.total >= b.h.total ? a : b;
}

bool replace(std::vector<Individual>& pop, Individual offspring) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].h.total < pop[worst].h.total) worst = i;
    }
    if (offspring.h.total <= pop[worst].h.total) return false;
    pop[worst] = std::move(offspring);
    return true;
}

RunRecord run_ma(const Instance& inst, const MAConfig& cfg,
                 const HeuristicTables* shared_tables) {
    const auto t0 = Clock::now();
    const MAConfig rc = resolve(inst, cfg, "ma");
    const int n = inst.n();
    const int sigma = inst.alphabet().size();

    HeuristicTables local_tables;
    if (shared_tables == nullptr) {
        local_tables = build_tables(inst.m(), sigma);
        shared_tables = &local_tables;
    }
    const HeuristicTables& tables = *shared_tables;

    EvalBudget budget = make_budget(rc);
    Rng init_rng = make_stream(rc.seed, rng_streams::init);
    Rng sel_rng = make_stream(rc.seed, rng_streams::selection);
    Rng coin_rng = make_stream(rc.seed, rng_streams::xover_coin);
    Rng ux_rng = make_stream(rc.seed, rng_streams::ux_mix);
    Rng mut_rng = make_stream(rc.seed, rng_streams::mutation);
    Rng grasp_rng = make_stream(rc.seed, rng_streams::grasp);

    RunRecord rec;
    BestTracker tracker{t0, budget, rec};

    ColumnCounts counts;
    if (rc.init_mode == InitMode::grasp) counts = column_counts(inst);
    const GraspParams grasp_params{rc.alpha};

    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(rc.pop_size));
    for (int i = 0; i < rc.pop_size; ++i) {
        Individual ind;
        ind.s = rc.init_mode == InitMode::grasp
                    ? grasp_construct(inst, counts, grasp_params, grasp_rng)
                    : random_construct(inst, init_rng);
        ind.profile = build_profile(ind.s, inst);
        budget.charge();
        ind.h = h_value(ind.profile, inst, tables);
        tracker.consider(ind.s, ind.h);
        pop.push_back(std::move(ind));
    }

#ifndef NDEBUG
    std::uint64_t iter = 0;
#endif
    while (!budget.exhausted()) {
        if (rc.stop_at_optimum && tracker.best_h.far_count == n) break;

        CandidateString child;
        if (uniform01(coin_rng) < rc.p_x) {
            const Individual& pa = binary_tournament(pop, sel_rng);
            const Individual& pb = binary_tournament(pop, sel_rng);
            child = rc.crossover_mode == CrossoverMode::pr
                        ? path_relinking(pa.s, pb.s, inst, tables, budget)
                        : uniform_crossover(pa.s, pb.s, ux_rng);
        } else {
            child = binary_tournament(pop, sel_rng).s;
        }
        child = mutate(child, rc.p_m, sigma, mut_rng);

        Individual off;
        off.s = std::move(child);
        off.profile = build_profile(off.s, inst);
        budget.charge();
        off.h = h_value(off.profile, inst, tables);
        if (rc.local_search == LocalSearch::hc) {
            hill_climb_inplace(off.s, off.profile, off.h, inst, tables, budget);
        }
        tracker.consider(off.s, off.h);
        replace(pop, std::move(off));

#ifndef NDEBUG
        if (++iter % 10000 == 0) {
            const Individual& probe = pop[iter % pop.size()];
            const DistanceProfile fresh = build_profile(probe.s, inst);
            assert(h_value(fresh, inst, tables).total == probe.h.total);
        }
#endif
    }

    finish(rec, inst, rc, tracker, budget, t0);
    return rec;
}

RunRecord run_grasp_baseline(const Instance& inst, const MAConfig& cfg,
                             const HeuristicTables* shared_tables) {
    const auto t0 = Clock::now();
    const MAConfig rc = resolve(inst, cfg, "grasp");
    const int n = inst.n();

    HeuristicTables local_tables;
    if (shared_tables == nullptr) {
        local_tables = build_tables(inst.m(), inst.alphabet().size());
        shared_tables = &local_tables;
    }
    const HeuristicTables& tables = *shared_tables;

    EvalBudget budget = make_budget(rc);
    Rng grasp_rng = make_stream(rc.seed, rng_streams::grasp);

    RunRecord rec;
    BestTracker tracker{t0, budget, rec};

    const ColumnCounts counts = column_counts(inst);
    const GraspParams grasp_params{rc.alpha};

    bool first = true;
    while (first || !budget.exhausted()) {
        first = false;
        CandidateString s = grasp_construct(inst, counts, grasp_params, grasp_rng);
        DistanceProfile profile = build_profile(s, inst);
        budget.charge();
        HeuristicValue h = h_value(profile, inst, tables);
        if (rc.local_search == LocalSearch::hc) {
            hill_climb_inplace(s, profile, h, inst, tables, budget);
        }
        tracker.consider(s, h);
        if (rc.stop_at_optimum && tracker.best_h.far_count == n) break;
    }

    finish(rec, inst, rc, tracker, budget, t0);
    return rec;
}

}  // namespace ffmsp
