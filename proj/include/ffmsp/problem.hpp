#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ffmsp {

/// Ordered set of distinct symbols. Strings are stored as indices into the
/// alphabet everywhere inside the library; characters appear only at I/O
/// boundaries.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    static const Alphabet& dna();  // ACGT

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int index) const { return symbols_[static_cast<std::size_t>(index)]; }
    const std::string& symbols() const { return symbols_; }

    bool contains(char c) const { return lookup_[static_cast<unsigned char>(c)] >= 0; }

    // Throws std::invalid_argument on symbols outside the alphabet.
    int index(char c) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> lookup_;  // -1 = not a symbol
};

/// A candidate solution: m alphabet indices.
using CandidateString = std::vector<std::uint8_t>;

/// One problem instance: n strings of length m over an alphabet, plus the
/// distance threshold. Immutable after construction; safe to share across
/// threads read-only.
class Instance {
public:
    Instance(Alphabet alphabet, std::vector<std::uint8_t> symbols, int n, int m, int threshold,
             std::string id);

    const Alphabet& alphabet() const { return alphabet_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int threshold() const { return threshold_; }
    const std::string& id() const { return id_; }

    std::span<const std::uint8_t> row(int i) const {
        return {symbols_.data() + static_cast<std::size_t>(i) * m_, static_cast<std::size_t>(m_)};
    }

    std::uint8_t at(int i, int j) const {
        return symbols_[static_cast<std::size_t>(i) * m_ + j];
    }

    std::string row_text(int i) const;

private:
    Alphabet alphabet_;
    std::vector<std::uint8_t> symbols_;  // n*m, row-major
    int n_;
    int m_;
    int threshold_;
    std::string id_;
};

/// Per-reference Hamming bookkeeping for one candidate string. d[i] is the
/// distance to reference i, c[i] = m - d[i]. near_count counts references
/// with d[i] < threshold; far_count = n - near_count is the objective value.
/// Owned by a single search thread; supports O(n) single-symbol updates.
struct DistanceProfile {
    std::vector<std::int32_t> d;
    std::vector<std::int32_t> c;
    int near_count = 0;
    int far_count = 0;

    bool operator==(const DistanceProfile&) const = default;
};

// Number of positions at which a and b differ. Throws on length mismatch.
int hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
int hamming(const Instance& inst, const CandidateString& x, int row);

// Count of references at distance >= threshold from x.
int objective(const CandidateString& x, const Instance& inst);

DistanceProfile build_profile(const CandidateString& x, const Instance& inst);

// Adjusts p for substituting old_symbol -> new_symbol at pos. O(n).
void apply_substitution(DistanceProfile& p, const Instance& inst, int pos, std::uint8_t old_symbol,
                        std::uint8_t new_symbol);

// Updates p to the profile of x with new_symbol written at pos; x itself is
// left untouched (the caller composes the actual write). O(n).
void update_profile(DistanceProfile& p, const CandidateString& x, int pos,
                    std::uint8_t new_symbol, const Instance& inst);

// Throws unless x is a valid candidate for inst.
void validate_candidate(const CandidateString& x, const Instance& inst);

std::string decode(const CandidateString& x, const Alphabet& alphabet);
CandidateString encode(std::string_view text, const Alphabet& alphabet);

}  // namespace ffmsp
