#pragma once

#include <cstdint>
#include <vector>

#include "ffmsp/budget.hpp"
#include "ffmsp/heuristic.hpp"
#include "ffmsp/problem.hpp"
#include "ffmsp/rng.hpp"

namespace ffmsp {

// One pending local move: set position pos to symbol.
struct Move {
    std::int32_t pos;
    std::uint8_t symbol;
};

// The difference set between an initiating and a guiding string; positions are
// distinct and each target symbol differs from the initiating string at
// creation time.  Kept sorted by position so argmax ties resolve to the lowest
// index.
using MoveSet = std::vector<Move>;

MoveSet move_set(const CandidateString& from, const CandidateString& to);

// Path-relinking crossover: walks from the worse parent (by h) to the better
// one, applying at each step the remaining move that maximizes h, and returns
// the best string seen along the path (endpoints included).  Every h
// computation, including the two endpoint evaluations, is charged to the
// budget; an exhausted budget truncates the walk and returns the best so far.
// Ties in the move argmax go to the lowest position.
CandidateString path_relinking(const CandidateString& p1, const CandidateString& p2,
                               const Instance& inst, const HeuristicTables& t,
                               EvalBudget& budget);

// Each position copied from p1 or p2 with probability 1/2.
CandidateString uniform_crossover(const CandidateString& p1, const CandidateString& p2,
                                  Rng& rng);

// Each position independently resampled uniformly over the alphabet with
// probability p_m; the redraw may repeat the current symbol, so the effective
// change rate is p_m * (1 - 1/sigma).
CandidateString mutate(const CandidateString& s, double p_m, int sigma, Rng& rng);

// First-improvement hill climbing over single-symbol substitutions: sweeps
// positions in order and symbols in alphabet order, accepts any strict h
// improvement immediately and continues the scan on the modified string,
// repeating sweeps until none improves.  The budget is checked before each
// candidate evaluation, so interruption always leaves a valid (possibly not
// locally optimal) string.  s/p/h must be mutually consistent on entry and
// remain so on return.
void hill_climb_inplace(CandidateString& s, DistanceProfile& p, HeuristicValue& h,
                        const Instance& inst, const HeuristicTables& t,
                        EvalBudget& budget);

CandidateString hill_climb(CandidateString s, const Instance& inst,
                           const HeuristicTables& t, EvalBudget& budget);

}  // namespace ffmsp
