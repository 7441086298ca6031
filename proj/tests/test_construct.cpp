#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "ffmsp/construct.hpp"
#include "ffmsp/problem_io.hpp"

using namespace ffmsp;

namespace {

Instance from_text(const char* text) {
    std::istringstream in(text);
    return read_instance(in, "text");
}

// Both columns count A once, B twice, C three times.
Instance skewed_instance() {
    return from_text("6 2 1\nABC\nAA\nBB\nBB\nCC\nCC\nCC\n");
}

}  // namespace

TEST_CASE("column_counts tallies per-column frequencies") {
    const Instance inst = from_text("3 3 2\nACGT\nACG\nAAT\nCAG\n");
    const ColumnCounts cc = column_counts(inst);
    REQUIRE(cc.sigma == 4);
    // column 0: A=2 C=1, column 1: A=2 C=1, column 2: G=2 T=1
    CHECK(cc.counts == std::vector<std::int32_t>{2, 1, 0, 0, 2, 1, 0, 0, 0, 0, 2, 1});
    CHECK(cc.vmin == std::vector<std::int32_t>{0, 0, 0});
    CHECK(cc.vmax == std::vector<std::int32_t>{2, 2, 2});

    for (int j = 0; j < inst.m(); ++j) {
        std::int32_t sum = 0;
        for (int c = 0; c < cc.sigma; ++c) {
            sum += cc.counts[static_cast<std::size_t>(j) * cc.sigma + c];
        }
        CHECK(sum == inst.n());
    }
}

TEST_CASE("alpha = 0 is pure greedy: only least-frequent symbols") {
    const Instance inst = skewed_instance();
    const ColumnCounts cc = column_counts(inst);
    Rng rng = make_stream(9, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const CandidateString x = grasp_construct(inst, cc, GraspParams{0.0}, rng);
        REQUIRE(x.size() == 2);
        for (int j = 0; j < 2; ++j) {
            CHECK(cc.counts[static_cast<std::size_t>(j) * 3 + x[static_cast<std::size_t>(j)]] ==
                  cc.vmin[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("alpha = 0 breaks frequency ties uniformly") {
    const Instance inst = from_text("4 2 1\nABC\nAA\nBB\nCC\nCC\n");
    const ColumnCounts cc = column_counts(inst);
    Rng rng = make_stream(10, 0);
    std::set<std::uint8_t> seen;
    for (int trial = 0; trial < 400; ++trial) {
        const CandidateString x = grasp_construct(inst, cc, GraspParams{0.0}, rng);
        seen.insert(x[0]);
        CHECK(x[0] != 2);  // C is never minimal
        CHECK(x[1] != 2);
    }
    CHECK(seen == std::set<std::uint8_t>{0, 1});
}

TEST_CASE("picked symbols always respect the alpha-relaxed bound") {
    const Instance inst = skewed_instance();
    const ColumnCounts cc = column_counts(inst);
    Rng rng = make_stream(11, 0);
    // bound = vmin + alpha * (vmax - vmin) = 1 + 0.3 * 2 = 1.6: only A fits
    for (int trial = 0; trial < 300; ++trial) {
        const CandidateString x = grasp_construct(inst, cc, GraspParams{0.3}, rng);
        CHECK(x[0] == 0);
        CHECK(x[1] == 0);
    }
    // alpha = 0.6 admits B when beta >= 0.5/0.6, never C
    for (int trial = 0; trial < 300; ++trial) {
        const CandidateString x = grasp_construct(inst, cc, GraspParams{0.6}, rng);
        CHECK(x[0] != 2);
        CHECK(x[1] != 2);
    }
}

TEST_CASE("one beta per construction, not one per column") {
    // With a single shared beta, both columns widen their candidate lists
    // together, so P(BB) = P(beta >= 1/2) * (1/2)^2 = 1/8; independent
    // per-column betas would give 1/16.
    const Instance inst = skewed_instance();
    const ColumnCounts cc = column_counts(inst);
    Rng rng = make_stream(12, 0);
    const int trials = 4000;
    int bb = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const CandidateString x = grasp_construct(inst, cc, GraspParams{1.0}, rng);
        CHECK(x[0] != 2);  // C needs beta >= 1, a null event
        CHECK(x[1] != 2);
        bb += x[0] == 1 && x[1] == 1;
    }
    // mean 500 under the shared-beta model (sigma ~ 21), 250 under the
    // independent model -- far outside this window
    CHECK(bb > 380);
    CHECK(bb < 620);
}

TEST_CASE("construction is deterministic under a fixed stream") {
    const Instance inst = skewed_instance();
    const ColumnCounts cc = column_counts(inst);
    Rng a = make_stream(77, 3);
    Rng b = make_stream(77, 3);
    for (int trial = 0; trial < 50; ++trial) {
        CHECK(grasp_construct(inst, cc, GraspParams{0.5}, a) ==
              grasp_construct(inst, cc, GraspParams{0.5}, b));
        CHECK(random_construct(inst, a) == random_construct(inst, b));
    }
}

TEST_CASE("alpha outside [0, 1] is rejected") {
    const Instance inst = skewed_instance();
    const ColumnCounts cc = column_counts(inst);
    Rng rng(1);
    CHECK_THROWS_AS(grasp_construct(inst, cc, GraspParams{-0.1}, rng), std::invalid_argument);
    CHECK_THROWS_AS(grasp_construct(inst, cc, GraspParams{1.5}, rng), std::invalid_argument);
}

TEST_CASE("random_construct draws valid strings covering the alphabet") {
    const Instance inst = from_text("2 6 2\nACGT\nAAAAAA\nCCCCCC\n");
    Rng rng = make_stream(21, 0);
    std::set<std::uint8_t> seen;
    for (int trial = 0; trial < 100; ++trial) {
        const CandidateString x = random_construct(inst, rng);
        REQUIRE(x.size() == 6);
        for (auto s : x) {
            REQUIRE(s < 4);
            seen.insert(s);
        }
    }
    CHECK(seen.size() == 4);
}
