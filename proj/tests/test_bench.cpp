#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "ffmsp/bench.hpp"

using namespace ffmsp;

namespace {

const char* kSampleSpec = R"(# small benchmark grid
[suite]
source = random
alphabet = ACGT
n = 6
m = 20
d_frac = 0.8
instances_per_cell = 1
runs_per_instance = 3
seed = 9
max_evals = 60          # inherited by algorithms with no budget of their own

[algorithm ma-small]
kind = ma
pop_size = 10
px = 0.9
pm = 0.05
stop_at_optimum = false

[algorithm greedy]
kind = grasp
alpha = 0.2
max_evals = 40
)";

SuiteSpec sample_spec() {
    std::istringstream in(kSampleSpec);
    return parse_suite_spec(in);
}

RunRecord record(const std::string& instance_id, const std::string& algorithm,
                 std::int64_t best_f, int n, int m, int d) {
    RunRecord rec;
    rec.instance_id = instance_id;
    rec.algorithm = algorithm;
    rec.best_f = best_f;
    rec.best_h = static_cast<double>(best_f);
    rec.n = n;
    rec.m = m;
    rec.d = d;
    return rec;
}

bool same_outcome(const RunRecord& a, const RunRecord& b) {
    return a.instance_id == b.instance_id && a.algorithm == b.algorithm &&
           a.seed == b.seed && a.best_f == b.best_f && a.best_h == b.best_h &&
           a.best_string == b.best_string && a.evaluations == b.evaluations &&
           a.run_index == b.run_index;
}

}  // namespace

TEST_CASE("rpd matches its definition and rejects nonsense") {
    CHECK(rpd(100, 100) == 0.0);
    CHECK(rpd(80, 100) == 20.0);
    CHECK(rpd(0, 100) == 100.0);
    CHECK(rpd(0, 0) == 0.0);  // degenerate best
    CHECK_THROWS_AS(rpd(101, 100), std::invalid_argument);
    CHECK_THROWS_AS(rpd(-1, 100), std::invalid_argument);
    CHECK_THROWS_AS(rpd(1, -2), std::invalid_argument);
}

TEST_CASE("improvement is the difference of mean distances") {
    CHECK(improvement_pct(5.85, 1.14) == doctest::Approx(4.71).epsilon(1e-12));
    CHECK(improvement_pct(10.30, 1.27) == doctest::Approx(9.03).epsilon(1e-12));
    CHECK(improvement_pct(3.3, 3.3) == 0.0);
    CHECK(improvement_pct(1.0, 2.0) == doctest::Approx(-1.0));
}

TEST_CASE("suite specs parse sections, lists and comments") {
    const SuiteSpec spec = sample_spec();
    CHECK(spec.source == "random");
    CHECK(spec.alphabet == "ACGT");
    CHECK(spec.n_values == std::vector<int>{6});
    CHECK(spec.m_values == std::vector<int>{20});
    REQUIRE(spec.d_fractions.size() == 1);
    CHECK(spec.d_fractions[0] == 0.8);
    CHECK(spec.instances_per_cell == 1);
    CHECK(spec.runs_per_instance == 3);
    CHECK(spec.seed == 9);
    CHECK(spec.max_evals == 60);
    REQUIRE(spec.algorithms.size() == 2);
    CHECK(spec.algorithms[0].name == "ma-small");
    CHECK(spec.algorithms[0].kind == "ma");
    CHECK(spec.algorithms[0].config.pop_size == 10);
    CHECK(spec.algorithms[0].config.p_m == 0.05);
    CHECK_FALSE(spec.algorithms[0].config.stop_at_optimum);
    CHECK(spec.algorithms[1].name == "greedy");
    CHECK(spec.algorithms[1].kind == "grasp");
    CHECK(spec.algorithms[1].config.alpha == 0.2);
    CHECK(spec.algorithms[1].config.max_evals == 40);
    CHECK_NOTHROW(spec.validate());

    std::istringstream lists("[suite]\nn = 100, 200\nm = 300,600, 800\nd_frac = 0.75, 0.8,0.85\n");
    const SuiteSpec multi = parse_suite_spec(lists);
    CHECK(multi.n_values == std::vector<int>{100, 200});
    CHECK(multi.m_values == std::vector<int>{300, 600, 800});
    CHECK(multi.d_fractions == std::vector<double>{0.75, 0.8, 0.85});
}

TEST_CASE("suite spec errors carry their line number") {
    auto fails_with = [](const char* text, const char* message) {
        std::istringstream in(text);
        CHECK_THROWS_WITH_AS(parse_suite_spec(in), message, std::runtime_error);
    };
    fails_with("x = 1\n", "suite spec line 1: key outside any section");
    fails_with("[suite]\nbogus = 2\n", "suite spec line 2: unknown suite key 'bogus'");
    fails_with("[nonsense]\n", "suite spec line 1: unknown section 'nonsense'");
    fails_with("[suite\n", "suite spec line 1: unterminated section header");
    fails_with("[algorithm]\n", "suite spec line 1: algorithm section needs a name");
    fails_with("[suite]\n\nn = x\n", "suite spec line 3: expected an integer, got 'x'");
    fails_with("[algorithm a]\nkind = annealing\n", "suite spec line 2: kind must be ma or grasp");
    fails_with("[algorithm a]\nretries = 7\n", "suite spec line 2: unknown algorithm key 'retries'");
    fails_with("[suite]\nseed = -4\n", "suite spec line 2: expected a nonnegative integer, got '-4'");
    fails_with("[suite]\nnothing\n", "suite spec line 2: expected 'key = value'");
}

TEST_CASE("suite validation catches semantic mistakes") {
    SuiteSpec good = sample_spec();
    CHECK_NOTHROW(good.validate());

    SuiteSpec bad = good;
    bad.algorithms.push_back(bad.algorithms[0]);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // duplicate name

    bad = good;
    bad.max_evals = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // ma-small loses its budget

    bad = good;
    bad.m_values = {300};
    bad.d_fractions = {0.799, 0.801};  // both round to d = 240
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = good;
    bad.n_values.clear();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = good;
    bad.d_fractions = {1.2};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = good;
    bad.instances_per_cell = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = good;
    bad.algorithms.clear();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = good;
    bad.algorithms[0].kind = "tabu";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = good;
    bad.alphabet = "AAC";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("a suite runs every (instance, algorithm, run) combination in order") {
    const SuiteSpec spec = sample_spec();
    int seen = 0;
    const std::vector<RunRecord> records =
        run_suite(spec, 1, [&](const RunRecord&) { ++seen; });
    REQUIRE(records.size() == 6);  // 1 cell x 2 algorithms x 1 instance x 3 runs
    CHECK(seen == 6);

    for (const auto& rec : records) {
        CHECK(rec.instance_id == "random_n6_m20_d16_i1");
        CHECK(rec.n == 6);
        CHECK(rec.m == 20);
        CHECK(rec.d == 16);
    }
    for (int r = 0; r < 3; ++r) {
        CHECK(records[static_cast<std::size_t>(r)].algorithm == "ma-small");
        CHECK(records[static_cast<std::size_t>(r)].run_index == r);
        CHECK(records[static_cast<std::size_t>(3 + r)].algorithm == "greedy");
        CHECK(records[static_cast<std::size_t>(3 + r)].run_index == r);
    }

    // distinct run seeds, all derived from the master
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            CHECK(records[i].seed != records[j].seed);
        }
    }

    // budgets: ma-small inherits the suite's 60, greedy brought its own 40
    CHECK(records[0].config.max_evals == 60);
    CHECK(records[0].evaluations >= 60);  // stop_at_optimum is off for ma-small
    CHECK(records[3].config.max_evals == 40);
    CHECK(records[3].evaluations <= 40);  // the baseline never overshoots
}

TEST_CASE("suite results are reproducible and scheduling-independent") {
    const SuiteSpec spec = sample_spec();
    const std::vector<RunRecord> a = run_suite(spec);
    const std::vector<RunRecord> b = run_suite(spec);
    const std::vector<RunRecord> c = run_suite(spec, 2);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(same_outcome(a[i], b[i]));
        CHECK(same_outcome(a[i], c[i]));
    }

    // summaries are byte-identical across reruns (no timing inside)
    std::ostringstream sa, sb;
    write_summary_csv(summarize(a), sa);
    write_summary_csv(summarize(b), sb);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("summaries pool distances per cell and compare algorithms") {
    std::vector<RunRecord> records;
    records.push_back(record("i1", "alg_a", 80, 3, 10, 8));
    records.push_back(record("i1", "alg_b", 100, 3, 10, 8));

    const std::vector<SummaryRow> rows = summarize(records);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].algorithm == "alg_a");
    CHECK(rows[0].d_frac == doctest::Approx(0.8));
    CHECK(rows[0].mean_sol == doctest::Approx(80.0));
    CHECK(rows[0].rpd_mean == doctest::Approx(20.0));
    CHECK(rows[0].rpd_std == 0.0);
    REQUIRE(rows[0].improvement_vs.size() == 1);
    CHECK(rows[0].improvement_vs[0].first == "alg_b");
    CHECK(rows[0].improvement_vs[0].second == doctest::Approx(-20.0));
    CHECK(rows[1].algorithm == "alg_b");
    CHECK(rows[1].rpd_mean == doctest::Approx(0.0));
    REQUIRE(rows[1].improvement_vs.size() == 1);
    CHECK(rows[1].improvement_vs[0].second == doctest::Approx(20.0));

    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("the per-instance best anchors distances at zero") {
    std::vector<RunRecord> records;
    records.push_back(record("i1", "alg", 100, 3, 10, 8));
    records.push_back(record("i1", "alg", 80, 3, 10, 8));
    const std::vector<SummaryRow> rows = summarize(records);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].mean_sol == doctest::Approx(90.0));
    CHECK(rows[0].rpd_mean == doctest::Approx(10.0));
    CHECK(rows[0].rpd_std == doctest::Approx(std::sqrt(200.0)));
    CHECK(rows[0].improvement_vs.empty());
}

TEST_CASE("summaries do not depend on record order") {
    std::vector<RunRecord> records;
    records.push_back(record("i1", "alg_a", 80, 3, 10, 8));
    records.push_back(record("i1", "alg_b", 100, 3, 10, 8));
    records.push_back(record("i2", "alg_a", 50, 3, 10, 8));
    records.push_back(record("i2", "alg_b", 40, 3, 10, 8));
    records.push_back(record("q1", "alg_a", 7, 5, 12, 9));  // second cell

    std::vector<RunRecord> shuffled = records;
    std::mt19937_64 urbg(4);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(shuffled.begin(), shuffled.end(), urbg);
        const auto a = summarize(records);
        const auto b = summarize(shuffled);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].algorithm == b[i].algorithm);
            CHECK(a[i].n == b[i].n);
            CHECK(a[i].rpd_mean == b[i].rpd_mean);
            CHECK(a[i].rpd_std == b[i].rpd_std);
            CHECK(a[i].mean_sol == b[i].mean_sol);
        }
    }

    // cells ordered by (d_frac, n, m, algorithm): q1's 9/12 = 0.75 sorts first
    const auto rows = summarize(records);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].algorithm == "alg_a");
    CHECK(rows[0].m == 12);
    CHECK(rows[1].m == 10);
    CHECK(rows[2].m == 10);
}

TEST_CASE("the summary table lays out one improvement column per algorithm") {
    std::vector<RunRecord> records;
    records.push_back(record("i1", "alg_a", 80, 3, 10, 8));
    records.push_back(record("i1", "alg_b", 100, 3, 10, 8));
    std::ostringstream out;
    write_summary_csv(summarize(records), out);
    CHECK(out.str() ==
          "d_frac,n,m,algorithm,mean_sol,rpd_mean,rpd_std,imp_vs_alg_a,imp_vs_alg_b\n"
          "0.8,3,10,alg_a,80.00,20.00,0.00,,-20.00\n"
          "0.8,3,10,alg_b,100.00,0.00,0.00,20.00,\n");
}

TEST_CASE("run tables survive a round trip through CSV") {
    const std::vector<RunRecord> records = run_suite(sample_spec());
    std::ostringstream out;
    write_runs_csv(records, out);

    std::istringstream in(out.str());
    const std::vector<RunRecord> back = read_runs_csv(in);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].instance_id == records[i].instance_id);
        CHECK(back[i].algorithm == records[i].algorithm);
        CHECK(back[i].seed == records[i].seed);
        CHECK(back[i].n == records[i].n);
        CHECK(back[i].m == records[i].m);
        CHECK(back[i].d == records[i].d);
        CHECK(back[i].best_f == records[i].best_f);
        CHECK(back[i].best_h == records[i].best_h);  // %.17g is lossless
        CHECK(back[i].evaluations == records[i].evaluations);
        CHECK(back[i].wall_ms == records[i].wall_ms);
    }

    // summarizing the read-back archive gives the same table
    std::ostringstream s1, s2;
    write_summary_csv(summarize(records), s1);
    write_summary_csv(summarize(back), s2);
    CHECK(s1.str() == s2.str());

    std::istringstream bad_header("who,what\n");
    CHECK_THROWS_AS(read_runs_csv(bad_header), std::runtime_error);
    std::istringstream short_row(
        "instance_id,algorithm,seed,n,m,d,best_f,best_h,evaluations,wall_ms\nx,y,1\n");
    CHECK_THROWS_AS(read_runs_csv(short_row), std::runtime_error);
}

TEST_CASE("progress tables emit one row per improvement") {
    const std::vector<RunRecord> records = run_suite(sample_spec());
    std::size_t points = 0;
    for (const auto& rec : records) points += rec.trajectory.size();
    std::ostringstream out;
    write_sqt_csv(records, out);
    std::size_t lines = 0;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == points + 1);  // header plus one line per trajectory point
    CHECK(out.str().rfind("instance_id,algorithm,seed,elapsed_ms,best_f\n", 0) == 0);
}

TEST_CASE("suites can draw their instances from a FASTA source") {
    const std::string path = "/tmp/ffmsp_bench_source.fasta";
    {
        std::ofstream fa(path);
        REQUIRE(fa.good());
        fa << ">chr_test synthetic\n";
        std::mt19937_64 urbg(12);
        const char* sym = "ACGT";
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 50; ++j) fa << sym[urbg() % 4];
            fa << '\n';
        }
    }

    SuiteSpec spec = sample_spec();
    spec.source = path;
    spec.runs_per_instance = 1;
    spec.algorithms.erase(spec.algorithms.begin());  // keep only the grasp baseline

    const std::vector<RunRecord> records = run_suite(spec);
    REQUIRE(records.size() == 1);
    CHECK(records[0].instance_id == "real_n6_m20_d16_i1");
    CHECK(records[0].best_f >= 0);
    std::remove(path.c_str());
}
