#include "ffmsp/heuristic.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ffmsp {

HeuristicTables build_tables(int max_len, int sigma) {
    if (sigma < 2) throw std::invalid_argument("build_tables: alphabet size must be >= 2");
    if (max_len < 1) throw std::invalid_argument("build_tables: max_len must be >= 1");

    HeuristicTables t;
    t.sigma = sigma;
    t.max_len = max_len;
    t.q_prefix.resize(static_cast<std::size_t>(max_len) + 1);

    std::vector<double> row{1.0};  // P(0, k) for k = 0..0
    t.q_prefix[0] = row;
    std::vector<double> next;
    for (int len = 1; len <= max_len; ++len) {
        next.assign(static_cast<std::size_t>(len) + 1, 0.0);
        // previous row holds k = 0..len-1; symmetry supplies k < 0
        auto prev = [&](int k) -> double {
            k = k < 0 ? -k : k;
            return k < len ? row[static_cast<std::size_t>(k)] : 0.0;
        };
        const double inv_sigma = 1.0 / sigma;
        for (int k = 0; k <= len; ++k) {
            next[static_cast<std::size_t>(k)] =
                (prev(k - 1) + (sigma - 2) * prev(k) + prev(k + 1)) * inv_sigma;
        }
        row = next;
        std::vector<double>& prefix = t.q_prefix[static_cast<std::size_t>(len)];
        prefix.resize(row.size());
        double acc = 0.0;
        for (std::size_t k = 0; k < row.size(); ++k) {
            acc += row[k];
            prefix[k] = acc;
        }
    }
    return t;
}

HeuristicValue h_value(const DistanceProfile& p, const Instance& inst, const HeuristicTables& t) {
    const int n = inst.n();
    if (static_cast<int>(p.d.size()) != n) {
        throw std::invalid_argument("h_value: profile size does not match instance");
    }
    if (t.sigma != inst.alphabet().size() || t.max_len < inst.m()) {
        throw std::invalid_argument("h_value: tables built for a different (m, sigma)");
    }

    HeuristicValue out;
    out.far_count = p.far_count;
    if (p.near_count == 0) {
        out.gpc = 0.0;
        out.total = static_cast<double>(n + 1) * out.far_count;
        return out;
    }

    const int d_thresh = inst.threshold();
    const std::int32_t* dist = p.d.data();
    const std::int32_t* comp = p.c.data();
    double sum_gpc = 0.0;
    for (int i = 0; i < n; ++i) {
        if (dist[i] >= d_thresh) continue;
        const int ci = comp[i];
        const std::vector<double>& row = t.q_prefix[static_cast<std::size_t>(ci)];
        const double row_total = row[static_cast<std::size_t>(ci)];
        double g = 1.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const int cj = comp[j];
            if (cj > ci) continue;  // empty sum
            g += row_total - (cj > 0 ? row[static_cast<std::size_t>(cj) - 1] : 0.0);
        }
        sum_gpc += g / ci;
    }
    out.gpc = sum_gpc / p.near_count;
    out.total = static_cast<double>(n + 1) * out.far_count + out.gpc;
    assert(out.gpc >= 0.0 && out.gpc < n + 1);
    assert(static_cast<int>(out.total / (n + 1)) == out.far_count);
    return out;
}

}  // namespace ffmsp
