#include "ffmsp/problem_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ffmsp/rng.hpp"

namespace ffmsp {

std::vector<FastaRecord> parse_fasta(std::string_view text) {
    std::vector<FastaRecord> records;
    std::istringstream in{std::string(text)};
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '>') {
            saw_header = true;
            std::string name = line.substr(first + 1);
            // record name = first word of the header
            std::size_t cut = name.find_first_of(" \t");
            if (cut != std::string::npos) name.resize(cut);
            records.push_back({std::move(name), {}});
        } else {
            if (!saw_header) {
                throw std::runtime_error("fasta: sequence data before any '>' header");
            }
            for (char c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                records.back().sequence.push_back(
                    static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            }
        }
    }
    if (records.empty()) {
        throw std::runtime_error("fasta: no records found");
    }
    return records;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("instance: line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Instance read_instance(std::istream& in, std::string id) {
    std::string line;
    if (!std::getline(in, line)) parse_fail(1, "missing header");
    long long n = 0, m = 0, d = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m >> d)) parse_fail(1, "expected 'n m d'");
        std::string rest;
        if (hdr >> rest) parse_fail(1, "trailing tokens after 'n m d'");
    }
    if (n <= 1) parse_fail(1, "n must be > 1");
    if (m < 1) parse_fail(1, "m must be >= 1");
    if (d < 1 || d > m) parse_fail(1, "d must satisfy 1 <= d <= m");

    if (!std::getline(in, line)) parse_fail(2, "missing alphabet line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Alphabet alphabet = [&] {
        try {
            return Alphabet(line);
        } catch (const std::invalid_argument& e) {
            parse_fail(2, e.what());
        }
    }();

    std::vector<std::uint8_t> data;
    data.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    for (long long i = 0; i < n; ++i) {
        const int line_no = static_cast<int>(3 + i);
        if (!std::getline(in, line)) parse_fail(line_no, "expected a string, got end of file");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long long>(line.size()) != m) {
            parse_fail(line_no, "expected " + std::to_string(m) + " characters, got " +
                                    std::to_string(line.size()));
        }
        for (char c : line) {
            if (!alphabet.contains(c)) {
                parse_fail(line_no, std::string("symbol '") + c + "' not in alphabet");
            }
            data.push_back(static_cast<std::uint8_t>(alphabet.index(c)));
        }
    }
    return Instance(std::move(alphabet), std::move(data), static_cast<int>(n),
                    static_cast<int>(m), static_cast<int>(d), std::move(id));
}

void write_instance(const Instance& inst, std::ostream& out) {
    out << inst.n() << ' ' << inst.m() << ' ' << inst.threshold() << '\n';
    out << inst.alphabet().symbols() << '\n';
    for (int i = 0; i < inst.n(); ++i) out << inst.row_text(i) << '\n';
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(in, path);
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_instance(inst, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

int threshold_from_fraction(double d_fraction, int m) {
    if (!(d_fraction > 0.0) || d_fraction > 1.0) {
        throw std::invalid_argument("d_fraction must be in (0, 1]");
    }
    return static_cast<int>(std::floor(d_fraction * m + 0.5));
}

Instance generate_random_instance(int n, int m, double d_fraction, const Alphabet& alphabet,
                                  std::uint64_t seed) {
    if (n <= 1) throw std::invalid_argument("generate_random_instance: n must be > 1");
    if (m < 1) throw std::invalid_argument("generate_random_instance: m must be >= 1");
    const int d = threshold_from_fraction(d_fraction, m);
    Rng rng = make_stream(seed, 0);
    std::uniform_int_distribution<int> pick(0, alphabet.size() - 1);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    for (auto& s : data) s = static_cast<std::uint8_t>(pick(rng));
    return Instance(alphabet, std::move(data), n, m, d,
                    make_instance_id("random", n, m, d, seed));
}

Instance extract_real_instance(std::string_view sequence, int n, int m, double d_fraction,
                               std::uint64_t seed, const Alphabet& alphabet) {
    if (n <= 1) throw std::invalid_argument("extract_real_instance: n must be > 1");
    if (m < 1) throw std::invalid_argument("extract_real_instance: m must be >= 1");
    const int d = threshold_from_fraction(d_fraction, m);
    const std::size_t window = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
    if (sequence.size() < window) {
        throw std::runtime_error("extract_real_instance: sequence has " +
                                 std::to_string(sequence.size()) + " symbols, needs " +
                                 std::to_string(window));
    }
    Rng rng = make_stream(seed, 0);
    std::uniform_int_distribution<std::size_t> pick(0, sequence.size() - window);
    constexpr int kMaxRetries = 1000;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const std::size_t start = pick(rng);
        bool clean = true;
        for (std::size_t k = 0; k < window; ++k) {
            if (!alphabet.contains(sequence[start + k])) {
                clean = false;
                break;
            }
        }
        if (!clean) continue;
        std::vector<std::uint8_t> data(window);
        for (std::size_t k = 0; k < window; ++k) {
            data[k] = static_cast<std::uint8_t>(alphabet.index(sequence[start + k]));
        }
        return Instance(alphabet, std::move(data), n, m, d,
                        make_instance_id("real", n, m, d, seed));
    }
    throw std::runtime_error("extract_real_instance: no window free of foreign symbols after " +
                             std::to_string(kMaxRetries) + " draws");
}

std::string make_instance_id(std::string_view source, int n, int m, int d, std::uint64_t seed) {
    std::string id(source);
    id += "_n" + std::to_string(n);
    id += "_m" + std::to_string(m);
    id += "_d" + std::to_string(d);
    id += "_s" + std::to_string(seed);
    return id;
}

}  // namespace ffmsp
