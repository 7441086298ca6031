#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ffmsp/bench.hpp"
#include "ffmsp/problem_io.hpp"

namespace ffmsp {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string::npos ? s.size() : comma;
        parts.push_back(trim(std::string_view(s).substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

[[noreturn]] void spec_fail(int line_no, const std::string& what) {
    throw std::runtime_error("suite spec line " + std::to_string(line_no) + ": " + what);
}

long long parse_ll(const std::string& v, int line_no) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        spec_fail(line_no, "expected an integer, got '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line_no) {
    try {
        std::size_t used = 0;
        const unsigned long long x = std::stoull(v, &used);
        if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        spec_fail(line_no, "expected a nonnegative integer, got '" + v + "'");
    }
}

double parse_d(const std::string& v, int line_no) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        spec_fail(line_no, "expected a number, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, int line_no) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    spec_fail(line_no, "expected true/false, got '" + v + "'");
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance with_id(const Instance& src, std::string id) {
    std::vector<std::uint8_t> data;
    data.reserve(static_cast<std::size_t>(src.n()) * static_cast<std::size_t>(src.m()));
    for (int i = 0; i < src.n(); ++i) {
        const auto row = src.row(i);
        data.insert(data.end(), row.begin(), row.end());
    }
    return Instance(src.alphabet(), std::move(data), src.n(), src.m(), src.threshold(),
                    std::move(id));
}

std::uint64_t instance_seed(std::uint64_t master, int n, int m, double d_frac, int index) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ mix64(master);
    h = hash_bytes(h, "instance");
    h = hash_u64(h, static_cast<std::uint64_t>(n));
    h = hash_u64(h, static_cast<std::uint64_t>(m));
    h = hash_u64(h, std::bit_cast<std::uint64_t>(d_frac));
    return hash_u64(h, static_cast<std::uint64_t>(index));
}

constexpr const char* kRunsHeader =
    "instance_id,algorithm,seed,n,m,d,best_f,best_h,evaluations,wall_ms";

}  // namespace

double rpd(std::int64_t sol, std::int64_t best) {
    if (sol < 0 || best < 0) throw std::invalid_argument("rpd: negative argument");
    if (sol > best) throw std::invalid_argument("rpd: sol exceeds best");
    if (best == 0) return 0.0;
    return static_cast<double>(best - sol) * 100.0 / static_cast<double>(best);
}

double improvement_pct(double rpd_mean_other, double rpd_mean_ref) {
    return rpd_mean_other - rpd_mean_ref;
}

void SuiteSpec::validate() const {
    if (n_values.empty() || m_values.empty() || d_fractions.empty()) {
        throw std::invalid_argument("suite spec: empty instance grid");
    }
    for (int n : n_values) {
        if (n < 2) throw std::invalid_argument("suite spec: n must be >= 2");
    }
    for (int m : m_values) {
        if (m < 1) throw std::invalid_argument("suite spec: m must be >= 1");
    }
    for (double f : d_fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw std::invalid_argument("suite spec: d_frac must lie in (0, 1]");
        }
    }
    if (instances_per_cell < 1 || runs_per_instance < 1) {
        throw std::invalid_argument("suite spec: counts must be >= 1");
    }
    if (algorithms.empty()) throw std::invalid_argument("suite spec: no algorithms");
    std::set<std::string> names;
    for (const auto& a : algorithms) {
        if (a.kind != "ma" && a.kind != "grasp") {
            throw std::invalid_argument("suite spec: unknown algorithm kind '" + a.kind + "'");
        }
        if (!names.insert(a.name).second) {
            throw std::invalid_argument("suite spec: duplicate algorithm name '" + a.name + "'");
        }
        const bool own_budget = a.config.max_evals > 0 || a.config.time_limit_s > 0.0;
        if (!own_budget && max_evals == 0 && time_limit_s <= 0.0) {
            throw std::invalid_argument("suite spec: no budget for algorithm '" + a.name + "'");
        }
    }
    Alphabet check(alphabet);  // throws on malformed alphabets
    // Distinct fractions must stay distinct after rounding to a threshold,
    // or two cells would silently merge.
    for (int m : m_values) {
        std::set<int> ds;
        for (double f : d_fractions) {
            if (!ds.insert(threshold_from_fraction(f, m)).second) {
                throw std::invalid_argument(
                    "suite spec: two d_frac values give the same threshold for m = " +
                    std::to_string(m));
            }
        }
    }
}

SuiteSpec parse_suite_spec(std::istream& in) {
    SuiteSpec spec;
    enum class Section { none, suite, algorithm };
    Section section = Section::none;
    AlgorithmSpec* algo = nullptr;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') spec_fail(line_no, "unterminated section header");
            const std::string inside = trim(std::string_view(line).substr(1, line.size() - 2));
            if (inside == "suite") {
                section = Section::suite;
                algo = nullptr;
            } else if (inside.rfind("algorithm", 0) == 0) {
                const std::string name = trim(std::string_view(inside).substr(9));
                if (name.empty()) spec_fail(line_no, "algorithm section needs a name");
                spec.algorithms.push_back(AlgorithmSpec{name, "ma", MAConfig{}});
                algo = &spec.algorithms.back();
                section = Section::algorithm;
            } else {
                spec_fail(line_no, "unknown section '" + inside + "'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) spec_fail(line_no, "expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string val = trim(std::string_view(line).substr(eq + 1));
        if (key.empty() || val.empty()) spec_fail(line_no, "expected 'key = value'");

        if (section == Section::none) spec_fail(line_no, "key outside any section");

        if (section == Section::suite) {
            if (key == "source") {
                spec.source = val;
            } else if (key == "alphabet") {
                spec.alphabet = val;
            } else if (key == "n") {
                spec.n_values.clear();
                for (const auto& p : split_list(val)) {
                    spec.n_values.push_back(static_cast<int>(parse_ll(p, line_no)));
                }
            } else if (key == "m") {
                spec.m_values.clear();
                for (const auto& p : split_list(val)) {
                    spec.m_values.push_back(static_cast<int>(parse_ll(p, line_no)));
                }
            } else if (key == "d_frac") {
                spec.d_fractions.clear();
                for (const auto& p : split_list(val)) {
                    spec.d_fractions.push_back(parse_d(p, line_no));
                }
            } else if (key == "instances_per_cell") {
                spec.instances_per_cell = static_cast<int>(parse_ll(val, line_no));
            } else if (key == "runs_per_instance") {
                spec.runs_per_instance = static_cast<int>(parse_ll(val, line_no));
            } else if (key == "seed") {
                spec.seed = parse_u64(val, line_no);
            } else if (key == "max_evals") {
                spec.max_evals = parse_u64(val, line_no);
            } else if (key == "time_limit_s") {
                spec.time_limit_s = parse_d(val, line_no);
            } else {
                spec_fail(line_no, "unknown suite key '" + key + "'");
            }
            continue;
        }

        // algorithm section
        if (key == "kind") {
            if (val != "ma" && val != "grasp") spec_fail(line_no, "kind must be ma or grasp");
            algo->kind = val;
        } else if (key == "init") {
            algo->config.init_mode = parse_init_mode(val);
        } else if (key == "xover") {
            algo->config.crossover_mode = parse_crossover_mode(val);
        } else if (key == "ls") {
            algo->config.local_search = parse_local_search(val);
        } else if (key == "alpha") {
            algo->config.alpha = parse_d(val, line_no);
        } else if (key == "pop_size") {
            algo->config.pop_size = static_cast<int>(parse_ll(val, line_no));
        } else if (key == "px") {
            algo->config.p_x = parse_d(val, line_no);
        } else if (key == "pm") {
            algo->config.p_m = parse_d(val, line_no);
        } else if (key == "max_evals") {
            algo->config.max_evals = parse_u64(val, line_no);
        } else if (key == "time_limit_s") {
            algo->config.time_limit_s = parse_d(val, line_no);
        } else if (key == "stop_at_optimum") {
            algo->config.stop_at_optimum = parse_bool(val, line_no);
        } else {
            spec_fail(line_no, "unknown algorithm key '" + key + "'");
        }
    }
    return spec;
}

SuiteSpec load_suite_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite spec " + path);
    return parse_suite_spec(in);
}

std::vector<RunRecord> run_suite(const SuiteSpec& spec, int workers,
                                 const std::function<void(const RunRecord&)>& on_complete) {
    spec.validate();
    const Alphabet alphabet(spec.alphabet);

    std::string real_sequence;
    const bool random_source = spec.source == "random";
    if (!random_source) {
        for (const auto& rec : parse_fasta(slurp(spec.source))) {
            real_sequence += rec.sequence;
        }
    }
    const std::string src_tag = random_source ? "random" : "real";

    struct Cell {
        std::vector<std::size_t> instance_idx;
    };
    std::vector<Cell> cells;
    std::vector<Instance> instances;
    for (double df : spec.d_fractions) {
        for (int n : spec.n_values) {
            for (int m : spec.m_values) {
                Cell cell;
                const int d = threshold_from_fraction(df, m);
                for (int k = 1; k <= spec.instances_per_cell; ++k) {
                    const std::uint64_t s = instance_seed(spec.seed, n, m, df, k);
                    Instance gen = random_source
                                       ? generate_random_instance(n, m, df, alphabet, s)
                                       : extract_real_instance(real_sequence, n, m, df, s,
                                                               alphabet);
                    std::string id = src_tag + "_n" + std::to_string(n) + "_m" +
                                     std::to_string(m) + "_d" + std::to_string(d) + "_i" +
                                     std::to_string(k);
                    cell.instance_idx.push_back(instances.size());
                    instances.push_back(with_id(gen, std::move(id)));
                }
                cells.push_back(std::move(cell));
            }
        }
    }

    std::map<int, HeuristicTables> tables;
    for (const Instance& inst : instances) {
        if (!tables.count(inst.m())) tables[inst.m()] = build_tables(inst.m(), alphabet.size());
    }

    struct Job {
        std::size_t inst;
        const AlgorithmSpec* algo;
        int run;
    };
    std::vector<Job> jobs;
    for (const Cell& cell : cells) {
        for (const AlgorithmSpec& algo : spec.algorithms) {
            for (std::size_t idx : cell.instance_idx) {
                for (int r = 0; r < spec.runs_per_instance; ++r) {
                    jobs.push_back(Job{idx, &algo, r});
                }
            }
        }
    }

    std::vector<RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex mutex;  // guards on_complete and first_error
    std::exception_ptr first_error;

    auto work = [&]() {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs.size() || failed.load()) return;
            try {
                const Job& job = jobs[j];
                const Instance& inst = instances[job.inst];
                MAConfig cfg = job.algo->config;
                cfg.label = job.algo->name;
                if (cfg.max_evals == 0 && cfg.time_limit_s <= 0.0) {
                    cfg.max_evals = spec.max_evals;
                    cfg.time_limit_s = spec.time_limit_s;
                }
                cfg.seed = derive_run_seed(spec.seed, inst.id(), job.algo->name, job.run);
                RunRecord rec = job.algo->kind == "ma"
                                    ? run_ma(inst, cfg, &tables.at(inst.m()))
                                    : run_grasp_baseline(inst, cfg, &tables.at(inst.m()));
                rec.run_index = job.run;
                if (on_complete) {
                    const std::lock_guard<std::mutex> lock(mutex);
                    on_complete(rec);
                }
                records[j] = std::move(rec);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    const std::size_t thread_count =
        std::min(static_cast<std::size_t>(std::max(workers, 1)), jobs.size());
    if (thread_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");

    std::map<std::string, std::int64_t> best_per_instance;
    for (const auto& rec : records) {
        auto [it, inserted] = best_per_instance.try_emplace(rec.instance_id, rec.best_f);
        if (!inserted && rec.best_f > it->second) it->second = rec.best_f;
    }

    using CellKey = std::tuple<int, int, int>;  // n, m, d
    std::map<CellKey, std::map<std::string, std::vector<std::pair<std::int64_t, double>>>>
        cells;
    for (const auto& rec : records) {
        cells[{rec.n, rec.m, rec.d}][rec.algorithm].push_back(
            {rec.best_f, rpd(rec.best_f, best_per_instance.at(rec.instance_id))});
    }

    std::vector<SummaryRow> rows;
    for (const auto& [key, algos] : cells) {
        std::map<std::string, double> cell_rpd_mean;
        for (const auto& [name, runs] : algos) {
            double s = 0.0;
            for (const auto& r : runs) s += r.second;
            cell_rpd_mean[name] = s / static_cast<double>(runs.size());
        }
        for (const auto& [name, runs] : algos) {
            SummaryRow row;
            std::tie(row.n, row.m, row.d) = key;
            row.d_frac = static_cast<double>(row.d) / row.m;
            row.algorithm = name;
            double sol = 0.0;
            for (const auto& r : runs) sol += static_cast<double>(r.first);
            row.mean_sol = sol / static_cast<double>(runs.size());
            row.rpd_mean = cell_rpd_mean.at(name);
            double ss = 0.0;
            for (const auto& r : runs) {
                const double dev = r.second - row.rpd_mean;
                ss += dev * dev;
            }
            row.rpd_std = runs.size() > 1
                              ? std::sqrt(ss / static_cast<double>(runs.size() - 1))
                              : 0.0;
            for (const auto& [other, other_mean] : cell_rpd_mean) {
                if (other == name) continue;
                row.improvement_vs.push_back(
                    {other, improvement_pct(other_mean, row.rpd_mean)});
            }
            rows.push_back(std::move(row));
        }
    }

    std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        return std::tie(a.d_frac, a.n, a.m, a.algorithm) <
               std::tie(b.d_frac, b.n, b.m, b.algorithm);
    });
    return rows;
}

void write_runs_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << kRunsHeader << '\n';
    for (const auto& rec : records) {
        out << rec.instance_id << ',' << rec.algorithm << ',' << rec.seed << ',' << rec.n
            << ',' << rec.m << ',' << rec.d << ',' << rec.best_f << ','
            << fmt("%.17g", rec.best_h) << ',' << rec.evaluations << ',' << rec.wall_ms
            << '\n';
    }
    if (!out) throw std::runtime_error("write_runs_csv: write failed");
}

void write_sqt_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << "instance_id,algorithm,seed,elapsed_ms,best_f\n";
    for (const auto& rec : records) {
        for (const auto& tp : rec.trajectory) {
            out << rec.instance_id << ',' << rec.algorithm << ',' << rec.seed << ','
                << tp.elapsed_ms << ',' << tp.best_f << '\n';
        }
    }
    if (!out) throw std::runtime_error("write_sqt_csv: write failed");
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    std::set<std::string> names;
    for (const auto& row : rows) names.insert(row.algorithm);

    out << "d_frac,n,m,algorithm,mean_sol,rpd_mean,rpd_std";
    for (const auto& name : names) out << ",imp_vs_" << name;
    out << '\n';

    for (const auto& row : rows) {
        out << fmt("%.6g", row.d_frac) << ',' << row.n << ',' << row.m << ','
            << row.algorithm << ',' << fmt("%.2f", row.mean_sol) << ','
            << fmt("%.2f", row.rpd_mean) << ',' << fmt("%.2f", row.rpd_std);
        for (const auto& name : names) {
            out << ',';
            const auto it = std::find_if(row.improvement_vs.begin(), row.improvement_vs.end(),
                                         [&](const auto& p) { return p.first == name; });
            // Self and absent columns stay empty.
            if (it != row.improvement_vs.end()) out << fmt("%.2f", it->second);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write_summary_csv: write failed");
}

std::vector<RunRecord> read_runs_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_runs_csv: empty input");
    if (trim(line) != kRunsHeader) {
        throw std::runtime_error("read_runs_csv: unexpected header '" + trim(line) + "'");
    }
    std::vector<RunRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto fields = split_list(stripped);
        if (fields.size() != 10) {
            throw std::runtime_error("read_runs_csv line " + std::to_string(line_no) +
                                     ": expected 10 fields, got " +
                                     std::to_string(fields.size()));
        }
        try {
            RunRecord rec;
            rec.instance_id = fields[0];
            rec.algorithm = fields[1];
            rec.seed = std::stoull(fields[2]);
            rec.n = std::stoi(fields[3]);
            rec.m = std::stoi(fields[4]);
            rec.d = std::stoi(fields[5]);
            rec.best_f = std::stoll(fields[6]);
            rec.best_h = std::stod(fields[7]);
            rec.evaluations = std::stoull(fields[8]);
            rec.wall_ms = std::stoll(fields[9]);
            records.push_back(std::move(rec));
        } catch (const std::exception& e) {
            throw std::runtime_error("read_runs_csv line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    return records;
}

}  // namespace ffmsp
