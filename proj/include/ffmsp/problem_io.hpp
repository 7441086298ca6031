#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ffmsp/problem.hpp"

namespace ffmsp {

struct FastaRecord {
    std::string name;
    std::string sequence;  // concatenated, whitespace stripped, uppercased
};

// Parses FASTA text: '>' header lines, sequence lines following. Throws on
// empty input or sequence data before the first header.
std::vector<FastaRecord> parse_fasta(std::string_view text);

// Text format, UTF-8:
//   line 1: "n m d"
//   line 2: alphabet as one contiguous string, e.g. ACGT
//   then exactly n lines of exactly m alphabet characters
Instance read_instance(std::istream& in, std::string id = "unnamed");
void write_instance(const Instance& inst, std::ostream& out);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// n strings of length m drawn i.i.d. uniform over the alphabet;
// d = round(d_fraction * m), half up. Deterministic for a fixed seed.
Instance generate_random_instance(int n, int m, double d_fraction, const Alphabet& alphabet,
                                  std::uint64_t seed);

// Slices a seeded-random window of n*m consecutive symbols out of `sequence`
// into n strings of length m. Windows containing symbols outside the
// alphabet are rejected and re-drawn up to 1000 times before failing.
Instance extract_real_instance(std::string_view sequence, int n, int m, double d_fraction,
                               std::uint64_t seed, const Alphabet& alphabet = Alphabet::dna());

// "<source>_n<n>_m<m>_d<d>_s<seed>"
std::string make_instance_id(std::string_view source, int n, int m, int d, std::uint64_t seed);

int threshold_from_fraction(double d_fraction, int m);

}  // namespace ffmsp
