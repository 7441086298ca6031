#pragma once

#include <cstdint>
#include <vector>

#include "ffmsp/problem.hpp"

namespace ffmsp {

/// Precomputed tables behind the surrogate objective.
///
/// T(L,k) counts, over the length-L sequences, the ways a random string can
/// shift its agreement balance by k; it satisfies
///   T(0,0) = 1, T(0,k) = 0 for k != 0,
///   T(L,k) = T(L-1,k-1) + (sigma-2) T(L-1,k) + T(L-1,k+1).
/// Raw T values grow like sigma^L and overflow any fixed-width integer for
/// realistic m, while the evaluation only ever consumes ratios T(L,k)/sigma^L.
/// The build therefore runs the recurrence on P(L,k) = T(L,k)/sigma^L, which
/// keeps every stored value inside [0,1]:
///   P(L,k) = [P(L-1,k-1) + (sigma-2) P(L-1,k) + P(L-1,k+1)] / sigma.
/// T(L,k) = T(L,-k), so only k >= 0 is stored, and each row is kept as a
/// running prefix sum so that any contiguous sum over k is two lookups.
///
/// Immutable after build; share freely across threads.
struct HeuristicTables {
    int sigma = 0;
    int max_len = 0;
    // q_prefix[L][c] = sum over k = 0..c of T(L,k)/sigma^L, for c in 0..L
    std::vector<std::vector<double>> q_prefix;

    // sum over c = c_lo..c_hi of T(c_hi,c)/sigma^c_hi; empty ranges yield 0.
    double range_sum(int c_hi, int c_lo) const {
        if (c_lo > c_hi) return 0.0;
        const std::vector<double>& row = q_prefix[static_cast<std::size_t>(c_hi)];
        double s = row[static_cast<std::size_t>(c_hi)];
        if (c_lo > 0) s -= row[static_cast<std::size_t>(c_lo) - 1];
        return s;
    }
};

// One-off O(max_len^2) build covering rows L = 0..max_len.
HeuristicTables build_tables(int max_len, int sigma);

/// Surrogate objective value. total = (n+1)*far_count + gpc with
/// gpc in [0, n), so the surrogate strictly respects the ordering of the
/// exact objective: more far strings always means a larger total.
struct HeuristicValue {
    int far_count = 0;
    double gpc = 0.0;
    double total = 0.0;

    bool operator==(const HeuristicValue&) const = default;
};

// Evaluates the surrogate from an up-to-date distance profile. O(n) when no
// reference is near, O(near_count * n) otherwise.
HeuristicValue h_value(const DistanceProfile& p, const Instance& inst, const HeuristicTables& t);

// Reference implementation: literal triple loop over an exact integer T
// table with rational arithmetic, rounded once at the end. Restricted to
// n <= 64 and m <= 64; test oracle only.
HeuristicValue h_value_naive(const CandidateString& x, const Instance& inst);

}  // namespace ffmsp
