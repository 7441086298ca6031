#pragma once

#include <cstdint>
#include <vector>

#include "ffmsp/problem.hpp"
#include "ffmsp/rng.hpp"

namespace ffmsp {

// Per-column symbol frequencies of an instance: counts[j * sigma + c] is the
// number of input strings whose j-th character equals symbol c.  vmin/vmax
// hold the per-column extremes used to build restricted candidate lists.
struct ColumnCounts {
    int sigma = 0;
    std::vector<std::int32_t> counts;
    std::vector<std::int32_t> vmin;
    std::vector<std::int32_t> vmax;
};

ColumnCounts column_counts(const Instance& inst);

struct GraspParams {
    // RCL width: 0 is fully greedy (only least-frequent symbols), 1 admits
    // every symbol no worse than the most frequent one.
    double alpha = 0.1;
};

// Greedy-randomized construction.  The relaxation beta is drawn uniformly
// from [0, alpha] once per call; column j then picks uniformly among symbols
// whose frequency is at most V_min(j) + beta * (V_max(j) - V_min(j)).
CandidateString grasp_construct(const Instance& inst, const ColumnCounts& counts,
                                const GraspParams& params, Rng& rng);

// Uniform random string over the instance alphabet.
CandidateString random_construct(const Instance& inst, Rng& rng);

}  // namespace ffmsp
