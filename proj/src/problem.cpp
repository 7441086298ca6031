#include "ffmsp/problem.hpp"

#include <stdexcept>

namespace ffmsp {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.size() < 2) {
        throw std::invalid_argument("alphabet needs at least 2 symbols");
    }
    lookup_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto idx = static_cast<unsigned char>(symbols_[i]);
        if (lookup_[idx] >= 0) {
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] +
                                        "'");
        }
        lookup_[idx] = static_cast<std::int16_t>(i);
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a("ACGT");
    return a;
}

int Alphabet::index(char c) const {
    int idx = lookup_[static_cast<unsigned char>(c)];
    if (idx < 0) {
        throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet " + symbols_);
    }
    return idx;
}

Instance::Instance(Alphabet alphabet, std::vector<std::uint8_t> symbols, int n, int m,
                   int threshold, std::string id)
    : alphabet_(std::move(alphabet)),
      symbols_(std::move(symbols)),
      n_(n),
      m_(m),
      threshold_(threshold),
      id_(std::move(id)) {
    if (n_ <= 1) throw std::invalid_argument("instance needs n > 1 strings");
    if (m_ < 1) throw std::invalid_argument("instance needs m >= 1");
    if (threshold_ < 1 || threshold_ > m_) {
        throw std::invalid_argument("threshold must satisfy 1 <= d <= m");
    }
    if (symbols_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_)) {
        throw std::invalid_argument("instance data size does not match n*m");
    }
    const int sigma = alphabet_.size();
    for (std::uint8_t s : symbols_) {
        if (s >= sigma) throw std::invalid_argument("instance contains out-of-alphabet index");
    }
}

std::string Instance::row_text(int i) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(m_));
    for (std::uint8_t s : row(i)) out.push_back(alphabet_.symbol(s));
    return out;
}

int hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming: length mismatch");
    }
    int dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dist += a[i] != b[i];
    return dist;
}

int hamming(const Instance& inst, const CandidateString& x, int row) {
    return hamming(std::span<const std::uint8_t>(x), inst.row(row));
}

int objective(const CandidateString& x, const Instance& inst) {
    if (static_cast<int>(x.size()) != inst.m()) {
        throw std::invalid_argument("objective: candidate length != m");
    }
    int far = 0;
    for (int i = 0; i < inst.n(); ++i) {
        far += hamming(inst, x, i) >= inst.threshold();
    }
    return far;
}

DistanceProfile build_profile(const CandidateString& x, const Instance& inst) {
    if (static_cast<int>(x.size()) != inst.m()) {
        throw std::invalid_argument("build_profile: candidate length != m");
    }
    const int n = inst.n();
    const int m = inst.m();
    DistanceProfile p;
    p.d.resize(n);
    p.c.resize(n);
    p.near_count = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint8_t* ref = inst.row(i).data();
        int dist = 0;
        for (int j = 0; j < m; ++j) dist += x[static_cast<std::size_t>(j)] != ref[j];
        p.d[i] = dist;
        p.c[i] = m - dist;
        p.near_count += dist < inst.threshold();
    }
    p.far_count = n - p.near_count;
    return p;
}

void apply_substitution(DistanceProfile& p, const Instance& inst, int pos, std::uint8_t old_symbol,
                        std::uint8_t new_symbol) {
    if (old_symbol == new_symbol) return;
    const int n = inst.n();
    const int d_thresh = inst.threshold();
    for (int i = 0; i < n; ++i) {
        const std::uint8_t ref = inst.at(i, pos);
        const int delta = static_cast<int>(new_symbol != ref) - static_cast<int>(old_symbol != ref);
        if (delta == 0) continue;
        const int before = p.d[i];
        const int after = before + delta;
        p.d[i] = after;
        p.c[i] -= delta;
        if (before < d_thresh && after >= d_thresh) {
            --p.near_count;
        } else if (before >= d_thresh && after < d_thresh) {
            ++p.near_count;
        }
    }
    p.far_count = n - p.near_count;
}

void update_profile(DistanceProfile& p, const CandidateString& x, int pos,
                    std::uint8_t new_symbol, const Instance& inst) {
    if (pos < 0 || pos >= inst.m()) {
        throw std::invalid_argument("update_profile: position out of range");
    }
    if (new_symbol >= inst.alphabet().size()) {
        throw std::invalid_argument("update_profile: symbol out of range");
    }
    apply_substitution(p, inst, pos, x[static_cast<std::size_t>(pos)], new_symbol);
}

void validate_candidate(const CandidateString& x, const Instance& inst) {
    if (static_cast<int>(x.size()) != inst.m()) {
        throw std::invalid_argument("candidate length != m");
    }
    const int sigma = inst.alphabet().size();
    for (std::uint8_t s : x) {
        if (s >= sigma) throw std::invalid_argument("candidate contains out-of-alphabet index");
    }
}

std::string decode(const CandidateString& x, const Alphabet& alphabet) {
    std::string out;
    out.reserve(x.size());
    for (std::uint8_t s : x) out.push_back(alphabet.symbol(s));
    return out;
}

CandidateString encode(std::string_view text, const Alphabet& alphabet) {
    CandidateString out;
    out.reserve(text.size());
    for (char c : text) out.push_back(static_cast<std::uint8_t>(alphabet.index(c)));
    return out;
}

}  // namespace ffmsp
