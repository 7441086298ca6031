#pragma once

// Exact-arithmetic reference computations for the test suites.  Everything
// here is written straight from the defining recurrences, independent of the
// library's normalized/prefix-sum implementations.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Row L holds T(L, k) for k = -L..L at index k + L.
//   T(0,0) = 1
//   T(L,k) = T(L-1,k-1) + (sigma-2) T(L-1,k) + T(L-1,k+1)
inline std::vector<std::vector<cpp_int>> t_table(int max_len, int sigma) {
    std::vector<std::vector<cpp_int>> table(static_cast<std::size_t>(max_len) + 1);
    table[0] = {1};
    for (int len = 1; len <= max_len; ++len) {
        const auto& prev = table[static_cast<std::size_t>(len) - 1];
        auto at = [&](int k) -> cpp_int {
            if (k < -(len - 1) || k > len - 1) return 0;
            return prev[static_cast<std::size_t>(k + len - 1)];
        };
        std::vector<cpp_int> row(static_cast<std::size_t>(2 * len) + 1);
        for (int k = -len; k <= len; ++k) {
            row[static_cast<std::size_t>(k + len)] = at(k - 1) + (sigma - 2) * at(k) + at(k + 1);
        }
        table[static_cast<std::size_t>(len)] = std::move(row);
    }
    return table;
}

inline cpp_int pow_int(int base, int exp) {
    cpp_int p = 1;
    for (int i = 0; i < exp; ++i) p *= base;
    return p;
}

// Sum of T(L, k) for k = lo..hi as an exact fraction of sigma^L.
inline cpp_rational range_ratio(const std::vector<std::vector<cpp_int>>& table, int sigma, int L,
                                int lo, int hi) {
    cpp_int s = 0;
    for (int k = lo; k <= hi; ++k) {
        if (k < -L || k > L) continue;
        s += table[static_cast<std::size_t>(L)][static_cast<std::size_t>(k + L)];
    }
    return cpp_rational(s, pow_int(sigma, L));
}

}  // namespace oracle
