#include <algorithm>
#include <random>
#include <stdexcept>

#include "ffmsp/construct.hpp"

namespace ffmsp {

ColumnCounts column_counts(const Instance& inst) {
    const int n = inst.n();
    const int m = inst.m();
    ColumnCounts cc;
    cc.sigma = inst.alphabet().size();
    cc.counts.assign(static_cast<std::size_t>(m) * cc.sigma, 0);
    cc.vmin.assign(static_cast<std::size_t>(m), 0);
    cc.vmax.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) {
        const auto row = inst.row(i);
        for (int j = 0; j < m; ++j) {
            ++cc.counts[static_cast<std::size_t>(j) * cc.sigma + row[static_cast<std::size_t>(j)]];
        }
    }
    for (int j = 0; j < m; ++j) {
        const auto* col = cc.counts.data() + static_cast<std::size_t>(j) * cc.sigma;
        cc.vmin[static_cast<std::size_t>(j)] = *std::min_element(col, col + cc.sigma);
        cc.vmax[static_cast<std::size_t>(j)] = *std::max_element(col, col + cc.sigma);
    }
    return cc;
}

CandidateString grasp_construct(const Instance& inst, const ColumnCounts& counts,
                                const GraspParams& params, Rng& rng) {
    if (params.alpha < 0.0 || params.alpha > 1.0) {
        throw std::invalid_argument("grasp_construct: alpha must lie in [0, 1]");
    }
    const int m = inst.m();
    const int sigma = counts.sigma;
    const double beta = params.alpha * uniform01(rng);

    CandidateString x(static_cast<std::size_t>(m));
    std::vector<std::uint8_t> rcl;
    rcl.reserve(static_cast<std::size_t>(sigma));
    for (int j = 0; j < m; ++j) {
        const auto* col = counts.counts.data() + static_cast<std::size_t>(j) * sigma;
        const double mu = counts.vmin[static_cast<std::size_t>(j)] +
                          beta * (counts.vmax[static_cast<std::size_t>(j)] -
                                  counts.vmin[static_cast<std::size_t>(j)]);
        rcl.clear();
        for (int c = 0; c < sigma; ++c) {
            if (col[c] <= mu) rcl.push_back(static_cast<std::uint8_t>(c));
        }
        // vmin <= mu, so the RCL always holds at least one symbol.
        std::uniform_int_distribution<std::size_t> pick(0, rcl.size() - 1);
        x[static_cast<std::size_t>(j)] = rcl[pick(rng)];
    }
    return x;
}

CandidateString random_construct(const Instance& inst, Rng& rng) {
    const int m = inst.m();
    std::uniform_int_distribution<int> pick(0, inst.alphabet().size() - 1);
    CandidateString x(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        x[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(pick(rng));
    }
    return x;
}

}  // namespace ffmsp
