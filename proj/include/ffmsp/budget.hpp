#pragma once

#include <chrono>
#include <cstdint>

namespace ffmsp {

// Shared evaluation budget for one run. One unit = one heuristic evaluation
// (full or incrementally updated profile). Wall-clock limits are checked
// against a deadline captured when the run starts.
struct EvalBudget {
    std::uint64_t max_evals = 0;  // 0 = unbounded
    std::uint64_t used = 0;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline{};

    static EvalBudget unlimited() { return {}; }

    static EvalBudget evals(std::uint64_t n) {
        EvalBudget b;
        b.max_evals = n;
        return b;
    }

    void start_timer(double seconds) {
        has_deadline = true;
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(seconds));
    }

    void charge(std::uint64_t k = 1) { used += k; }

    bool exhausted() const {
        if (max_evals != 0 && used >= max_evals) return true;
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) return true;
        return false;
    }

    bool bounded() const { return max_evals != 0 || has_deadline; }
};

}  // namespace ffmsp
