#include <cassert>
#include <random>
#include <stdexcept>
#include <utility>

#include "ffmsp/operators.hpp"

namespace ffmsp {

namespace {

#ifndef NDEBUG
// Incremental bookkeeping must agree exactly with a from-scratch rebuild; the
// profiles are integer-valued, so equality is exact.
bool profile_consistent(const DistanceProfile& p, const CandidateString& s,
                        const Instance& inst) {
    const DistanceProfile fresh = build_profile(s, inst);
    return p.d == fresh.d && p.c == fresh.c && p.near_count == fresh.near_count &&
           p.far_count == fresh.far_count;
}
#endif

}  // namespace

MoveSet move_set(const CandidateString& from, const CandidateString& to) {
    if (from.size() != to.size()) {
        throw std::invalid_argument("move_set: string lengths differ");
    }
    MoveSet delta;
    for (std::size_t j = 0; j < from.size(); ++j) {
        if (from[j] != to[j]) {
            delta.push_back(Move{static_cast<std::int32_t>(j), to[j]});
        }
    }
    return delta;
}

CandidateString path_relinking(const CandidateString& p1, const CandidateString& p2,
                               const Instance& inst, const HeuristicTables& t,
                               EvalBudget& budget) {
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("path_relinking: parent lengths differ");
    }

    DistanceProfile prof1 = build_profile(p1, inst);
    budget.charge();
    const HeuristicValue h1 = h_value(prof1, inst, t);
    DistanceProfile prof2 = build_profile(p2, inst);
    budget.charge();
    const HeuristicValue h2 = h_value(prof2, inst, t);

    // Worse parent initiates, better one guides; on a tie p1 initiates.
    const bool p1_initiates = h1.total <= h2.total;
    CandidateString s = p1_initiates ? p1 : p2;
    const CandidateString& guide = p1_initiates ? p2 : p1;
    DistanceProfile prof = p1_initiates ? std::move(prof1) : std::move(prof2);

    CandidateString best = guide;
    double best_h = p1_initiates ? h2.total : h1.total;

    MoveSet delta = move_set(s, guide);
    while (!delta.empty() && !budget.exhausted()) {
        std::size_t best_idx = 0;
        double best_move_h = -1.0;
        for (std::size_t k = 0; k < delta.size(); ++k) {
            if (budget.exhausted()) break;
            const auto [pos, sym] = delta[k];
            const std::uint8_t old = s[static_cast<std::size_t>(pos)];
            apply_substitution(prof, inst, pos, old, sym);
            budget.charge();
            const double cand_h = h_value(prof, inst, t).total;
            apply_substitution(prof, inst, pos, sym, old);
            if (cand_h > best_move_h) {
                best_move_h = cand_h;
                best_idx = k;
            }
        }
        if (best_move_h < 0.0) break;  // budget ran out before any candidate

        const auto [pos, sym] = delta[best_idx];
        apply_substitution(prof, inst, pos, s[static_cast<std::size_t>(pos)], sym);
        s[static_cast<std::size_t>(pos)] = sym;
        delta.erase(delta.begin() + static_cast<std::ptrdiff_t>(best_idx));
        if (best_move_h > best_h) {
            best_h = best_move_h;
            best = s;
        }
    }
    assert(profile_consistent(prof, s, inst));
    return best;
}

CandidateString uniform_crossover(const CandidateString& p1, const CandidateString& p2,
                                  Rng& rng) {
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("uniform_crossover: parent lengths differ");
    }
    CandidateString child(p1.size());
    for (std::size_t j = 0; j < p1.size(); ++j) {
        child[j] = uniform01(rng) < 0.5 ? p1[j] : p2[j];
    }
    return child;
}

CandidateString mutate(const CandidateString& s, double p_m, int sigma, Rng& rng) {
    if (p_m < 0.0 || p_m > 1.0) {
        throw std::invalid_argument("mutate: p_m must lie in [0, 1]");
    }
    CandidateString out = s;
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    for (auto& c : out) {
        if (uniform01(rng) < p_m) c = static_cast<std::uint8_t>(pick(rng));
    }
    return out;
}

void hill_climb_inplace(CandidateString& s, DistanceProfile& p, HeuristicValue& h,
                        const Instance& inst, const HeuristicTables& t,
                        EvalBudget& budget) {
    const int m = inst.m();
    const int sigma = inst.alphabet().size();
    bool improvement = true;
    while (improvement) {
        improvement = false;
        for (int j = 0; j < m; ++j) {
            for (int c = 0; c < sigma; ++c) {
                const std::uint8_t cur = s[static_cast<std::size_t>(j)];
                if (c == cur) continue;
                if (budget.exhausted()) return;
                apply_substitution(p, inst, j, cur, static_cast<std::uint8_t>(c));
                budget.charge();
                const HeuristicValue cand = h_value(p, inst, t);
                if (cand.total > h.total) {
                    s[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(c);
                    h = cand;
                    improvement = true;
                } else {
                    apply_substitution(p, inst, j, static_cast<std::uint8_t>(c), cur);
                }
            }
        }
        assert(profile_consistent(p, s, inst));
    }
}

CandidateString hill_climb(CandidateString s, const Instance& inst,
                           const HeuristicTables& t, EvalBudget& budget) {
    DistanceProfile p = build_profile(s, inst);
    budget.charge();
    HeuristicValue h = h_value(p, inst, t);
    hill_climb_inplace(s, p, h, inst, t, budget);
    return s;
}

}  // namespace ffmsp
