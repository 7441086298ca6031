#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "ffmsp/heuristic.hpp"

namespace ffmsp {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Exact integer T table over the full support k in [-L, L]; row L is stored
// with offset L so index 0 corresponds to k = -L.
std::vector<std::vector<cpp_int>> build_exact_table(int max_len, int sigma) {
    std::vector<std::vector<cpp_int>> table(static_cast<std::size_t>(max_len) + 1);
    table[0] = {cpp_int(1)};
    for (int len = 1; len <= max_len; ++len) {
        const auto& prev = table[static_cast<std::size_t>(len) - 1];
        auto at = [&](int k) -> cpp_int {
            if (k < -(len - 1) || k > len - 1) return 0;
            return prev[static_cast<std::size_t>(k + len - 1)];
        };
        std::vector<cpp_int> row(static_cast<std::size_t>(2 * len) + 1);
        for (int k = -len; k <= len; ++k) {
            row[static_cast<std::size_t>(k + len)] =
                at(k - 1) + cpp_int(sigma - 2) * at(k) + at(k + 1);
        }
        table[static_cast<std::size_t>(len)] = std::move(row);
    }
    return table;
}

}  // namespace

HeuristicValue h_value_naive(const CandidateString& x, const Instance& inst) {
    const int n = inst.n();
    const int m = inst.m();
    if (n > 64 || m > 64) {
        throw std::invalid_argument("h_value_naive: refuses n > 64 or m > 64");
    }
    validate_candidate(x, inst);

    const int sigma = inst.alphabet().size();
    const int d_thresh = inst.threshold();

    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> comp(static_cast<std::size_t>(n));
    int near = 0;
    for (int i = 0; i < n; ++i) {
        dist[static_cast<std::size_t>(i)] = hamming(inst, x, i);
        comp[static_cast<std::size_t>(i)] = m - dist[static_cast<std::size_t>(i)];
        near += dist[static_cast<std::size_t>(i)] < d_thresh;
    }
    const int far = n - near;

    HeuristicValue out;
    out.far_count = far;
    if (near == 0) {
        out.gpc = 0.0;
        out.total = static_cast<double>(n + 1) * far;
        return out;
    }

    const auto table = build_exact_table(m, sigma);
    auto pow_sigma = [&](int e) {
        cpp_int p = 1;
        for (int k = 0; k < e; ++k) p *= sigma;
        return p;
    };

    cpp_rational sum_gpc = 0;
    for (int i = 0; i < n; ++i) {
        if (dist[static_cast<std::size_t>(i)] >= d_thresh) continue;
        const int ci = comp[static_cast<std::size_t>(i)];
        const cpp_int denom = pow_sigma(ci);
        cpp_rational g = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            cpp_rational sum_p = 0;
            for (int c = comp[static_cast<std::size_t>(j)]; c <= ci; ++c) {
                const cpp_int& t_val = table[static_cast<std::size_t>(ci)][
                    static_cast<std::size_t>(c + ci)];
                sum_p += cpp_rational(t_val, denom);
            }
            g += sum_p;
        }
        sum_gpc += g / ci;
    }
    const cpp_rational gpc = sum_gpc / near;
    out.gpc = gpc.convert_to<double>();
    out.total = (cpp_rational(n + 1) * far + gpc).convert_to<double>();
    return out;
}

}  // namespace ffmsp
