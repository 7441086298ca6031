// Python bindings for the solver core.  Candidates cross the boundary as
// plain strings over the instance alphabet; all randomized entry points take
// explicit seeds, so Python sessions replay exactly like the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffmsp/bench.hpp"
#include "ffmsp/construct.hpp"
#include "ffmsp/engine.hpp"
#include "ffmsp/operators.hpp"
#include "ffmsp/problem_io.hpp"

namespace py = pybind11;
using namespace ffmsp;

namespace {

CandidateString to_candidate(const std::string& s, const Instance& inst) {
    CandidateString x = encode(s, inst.alphabet());
    validate_candidate(x, inst);
    return x;
}

Instance make_instance(const std::vector<std::string>& strings, int d,
                       const std::string& alphabet, const std::string& id) {
    if (strings.empty()) throw std::invalid_argument("make_instance: no strings");
    std::ostringstream text;
    text << strings.size() << ' ' << strings.front().size() << ' ' << d << '\n'
         << alphabet << '\n';
    for (const auto& s : strings) text << s << '\n';
    std::istringstream in(text.str());
    return read_instance(in, id);
}

MAConfig config_from_kwargs(int pop_size, double px, double pm, double alpha,
                            const std::string& init, const std::string& xover,
                            const std::string& ls, std::uint64_t max_evals,
                            double time_limit_s, std::uint64_t seed,
                            bool stop_at_optimum, const std::string& label) {
    MAConfig cfg;
    cfg.pop_size = pop_size;
    cfg.p_x = px;
    cfg.p_m = pm;
    cfg.alpha = alpha;
    cfg.init_mode = parse_init_mode(init);
    cfg.crossover_mode = parse_crossover_mode(xover);
    cfg.local_search = parse_local_search(ls);
    cfg.max_evals = max_evals;
    cfg.time_limit_s = time_limit_s;
    cfg.seed = seed;
    cfg.stop_at_optimum = stop_at_optimum;
    cfg.label = label;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_ffmsp, mod) {
    mod.doc() = "far from most string problem: instances, heuristic and solvers";

    py::class_<Instance>(mod, "Instance")
        .def_property_readonly("n", &Instance::n)
        .def_property_readonly("m", &Instance::m)
        .def_property_readonly("d", &Instance::threshold)
        .def_property_readonly("id", &Instance::id)
        .def_property_readonly("alphabet",
                               [](const Instance& inst) { return inst.alphabet().symbols(); })
        .def_property_readonly("strings",
                               [](const Instance& inst) {
                                   std::vector<std::string> out;
                                   out.reserve(static_cast<std::size_t>(inst.n()));
                                   for (int i = 0; i < inst.n(); ++i) {
                                       const auto row = inst.row(i);
                                       out.push_back(decode(
                                           CandidateString(row.begin(), row.end()),
                                           inst.alphabet()));
                                   }
                                   return out;
                               })
        .def("__repr__", [](const Instance& inst) {
            return "<Instance " + inst.id() + " n=" + std::to_string(inst.n()) +
                   " m=" + std::to_string(inst.m()) +
                   " d=" + std::to_string(inst.threshold()) + ">";
        });

    py::class_<TrajectoryPoint>(mod, "TrajectoryPoint")
        .def_readonly("elapsed_ms", &TrajectoryPoint::elapsed_ms)
        .def_readonly("evals", &TrajectoryPoint::evals)
        .def_readonly("best_f", &TrajectoryPoint::best_f)
        .def_readonly("best_h", &TrajectoryPoint::best_h);

    py::class_<RunRecord>(mod, "RunRecord")
        .def_readonly("instance_id", &RunRecord::instance_id)
        .def_readonly("algorithm", &RunRecord::algorithm)
        .def_readonly("seed", &RunRecord::seed)
        .def_readonly("n", &RunRecord::n)
        .def_readonly("m", &RunRecord::m)
        .def_readonly("d", &RunRecord::d)
        .def_readonly("best_f", &RunRecord::best_f)
        .def_readonly("best_h", &RunRecord::best_h)
        .def_readonly("best_string", &RunRecord::best_string)
        .def_readonly("evaluations", &RunRecord::evaluations)
        .def_readonly("wall_ms", &RunRecord::wall_ms)
        .def_readonly("trajectory", &RunRecord::trajectory)
        .def("__repr__", [](const RunRecord& rec) {
            return "<RunRecord " + rec.algorithm + " on " + rec.instance_id +
                   " best_f=" + std::to_string(rec.best_f) + ">";
        });

    mod.def("make_instance", &make_instance, py::arg("strings"), py::arg("d"),
            py::arg("alphabet") = "ACGT", py::arg("id") = "python",
            "build an instance from equal-length strings");
    mod.def(
        "generate_instance",
        [](int n, int m, double d_frac, const std::string& alphabet, std::uint64_t seed) {
            return generate_random_instance(n, m, d_frac, Alphabet(alphabet), seed);
        },
        py::arg("n"), py::arg("m"), py::arg("d_frac"), py::arg("alphabet") = "ACGT",
        py::arg("seed") = 1, "draw a uniform random instance");
    mod.def(
        "extract_instance",
        [](const std::string& sequence, int n, int m, double d_frac, std::uint64_t seed,
           const std::string& alphabet) {
            return extract_real_instance(sequence, n, m, d_frac, seed, Alphabet(alphabet));
        },
        py::arg("sequence"), py::arg("n"), py::arg("m"), py::arg("d_frac"),
        py::arg("seed") = 1, py::arg("alphabet") = "ACGT",
        "slice an instance out of a long symbol sequence");
    mod.def("load_instance", &load_instance, py::arg("path"));
    mod.def(
        "save_instance",
        [](const Instance& inst, const std::string& path) { save_instance(inst, path); },
        py::arg("instance"), py::arg("path"));

    mod.def(
        "hamming",
        [](const std::string& a, const std::string& b) {
            if (a.size() != b.size()) {
                throw std::invalid_argument("hamming: strings differ in length");
            }
            int dist = 0;
            for (std::size_t i = 0; i < a.size(); ++i) dist += a[i] != b[i];
            return dist;
        },
        py::arg("a"), py::arg("b"));
    mod.def(
        "objective",
        [](const Instance& inst, const std::string& s) {
            return objective(to_candidate(s, inst), inst);
        },
        py::arg("instance"), py::arg("s"),
        "number of input strings with Hamming distance >= d from s");
    mod.def(
        "h_value",
        [](const Instance& inst, const std::string& s) {
            const HeuristicTables t = build_tables(inst.m(), inst.alphabet().size());
            const HeuristicValue h =
                h_value(build_profile(to_candidate(s, inst), inst), inst, t);
            return py::make_tuple(h.far_count, h.gpc, h.total);
        },
        py::arg("instance"), py::arg("s"),
        "heuristic evaluation of s: (far_count, gpc, total)");

    mod.def(
        "grasp_construct",
        [](const Instance& inst, double alpha, std::uint64_t seed) {
            Rng rng = make_stream(seed, 0);
            const ColumnCounts counts = column_counts(inst);
            return decode(grasp_construct(inst, counts, GraspParams{alpha}, rng),
                          inst.alphabet());
        },
        py::arg("instance"), py::arg("alpha") = 0.1, py::arg("seed") = 1);
    mod.def(
        "hill_climb",
        [](const Instance& inst, const std::string& s, std::uint64_t max_evals) {
            const HeuristicTables t = build_tables(inst.m(), inst.alphabet().size());
            EvalBudget budget =
                max_evals > 0 ? EvalBudget::evals(max_evals) : EvalBudget::unlimited();
            return decode(hill_climb(to_candidate(s, inst), inst, t, budget),
                          inst.alphabet());
        },
        py::arg("instance"), py::arg("s"), py::arg("max_evals") = 0);
    mod.def(
        "path_relinking",
        [](const Instance& inst, const std::string& p1, const std::string& p2,
           std::uint64_t max_evals) {
            const HeuristicTables t = build_tables(inst.m(), inst.alphabet().size());
            EvalBudget budget =
                max_evals > 0 ? EvalBudget::evals(max_evals) : EvalBudget::unlimited();
            return decode(path_relinking(to_candidate(p1, inst), to_candidate(p2, inst),
                                         inst, t, budget),
                          inst.alphabet());
        },
        py::arg("instance"), py::arg("p1"), py::arg("p2"), py::arg("max_evals") = 0);
    mod.def(
        "uniform_crossover",
        [](const Instance& inst, const std::string& p1, const std::string& p2,
           std::uint64_t seed) {
            Rng rng = make_stream(seed, 0);
            return decode(uniform_crossover(to_candidate(p1, inst), to_candidate(p2, inst),
                                            rng),
                          inst.alphabet());
        },
        py::arg("instance"), py::arg("p1"), py::arg("p2"), py::arg("seed") = 1);
    mod.def(
        "mutate",
        [](const Instance& inst, const std::string& s, double pm, std::uint64_t seed) {
            Rng rng = make_stream(seed, 0);
            return decode(mutate(to_candidate(s, inst), pm, inst.alphabet().size(), rng),
                          inst.alphabet());
        },
        py::arg("instance"), py::arg("s"), py::arg("pm"), py::arg("seed") = 1);

    mod.def(
        "solve_ma",
        [](const Instance& inst, int pop_size, double px, double pm, double alpha,
           const std::string& init, const std::string& xover, const std::string& ls,
           std::uint64_t max_evals, double time_limit_s, std::uint64_t seed,
           bool stop_at_optimum, const std::string& label) {
            return run_ma(inst, config_from_kwargs(pop_size, px, pm, alpha, init, xover,
                                                   ls, max_evals, time_limit_s, seed,
                                                   stop_at_optimum, label));
        },
        py::arg("instance"), py::arg("pop_size") = 100, py::arg("px") = 0.9,
        py::arg("pm") = -1.0, py::arg("alpha") = 0.1, py::arg("init") = "grasp",
        py::arg("xover") = "pr", py::arg("ls") = "hc", py::arg("max_evals") = 0,
        py::arg("time_limit_s") = 0.0, py::arg("seed") = 0,
        py::arg("stop_at_optimum") = true, py::arg("label") = "",
        "run the memetic algorithm; one of max_evals/time_limit_s must be set");
    mod.def(
        "solve_grasp",
        [](const Instance& inst, double alpha, const std::string& ls,
           std::uint64_t max_evals, double time_limit_s, std::uint64_t seed,
           bool stop_at_optimum, const std::string& label) {
            return run_grasp_baseline(
                inst, config_from_kwargs(100, 0.9, -1.0, alpha, "grasp", "pr", ls,
                                         max_evals, time_limit_s, seed, stop_at_optimum,
                                         label));
        },
        py::arg("instance"), py::arg("alpha") = 0.1, py::arg("ls") = "hc",
        py::arg("max_evals") = 0, py::arg("time_limit_s") = 0.0, py::arg("seed") = 0,
        py::arg("stop_at_optimum") = true, py::arg("label") = "",
        "iterated greedy-randomized construction with local search");

    mod.def("rpd", &rpd, py::arg("sol"), py::arg("best"));
    mod.def("improvement_pct", &improvement_pct, py::arg("rpd_mean_other"),
            py::arg("rpd_mean_ref"));
}
