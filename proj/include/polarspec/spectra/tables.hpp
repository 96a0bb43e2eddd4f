/*
Weight-distribution containers for bit-channel subcodes: input-output weight
tables, marginal spectra, 4-axis and 2-axis split spectra

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polarspec/bigcount.hpp"
#include "polarspec/code.hpp"
#include "polarspec/common.hpp"

namespace polarspec {

/// Input-weight convention of an IOWEF table.
enum class CodingMode { systematic, nonsystematic };

/// Which word set a table describes: the full subcode of a bit-channel or the
/// coset slice whose leading free bit is one (the polar subcode).
enum class WordSet { subcode, polar_subcode };

inline const char* to_string(CodingMode m) { return m == CodingMode::systematic ? "sys" : "nsys"; }

/// Marginal weight distribution: count of words per output weight d in 0..N.
template <class S>
struct Spectrum {
    int N = 0;
    int channel = 0;  // 1-based
    VecX<S> counts;   // index d

    Spectrum() = default;
    Spectrum(int codelength, int i) : N(codelength), channel(i), counts(zero_vector<S>(codelength + 1)) {}

    /// Smallest d >= 1 with a nonzero count; counts below `threshold` are
    /// treated as zero (relevant for approximate tables only).
    int d_min(double threshold = 0.5) const {
        for (int d = 1; d <= N; ++d) {
            if constexpr (is_exact_count_v<S>) {
                if (counts[d] != 0) return d;
            } else {
                if (counts[d] >= threshold) return d;
            }
        }
        throw std::invalid_argument("empty spectrum");
    }

    S total() const {
        S t = S(0);
        for (int d = 0; d <= N; ++d) t += counts[d];
        return t;
    }
};

/// Input-output weight table of one bit-channel. Rows are input weight
/// w in 0..N-i+1, columns output weight d in 0..N. Exact scalars hold counts;
/// for S = double the table may be in log domain (natural log of the count,
/// empty cells -inf).
template <class S>
struct Iowef {
    int N = 0;
    int channel = 0;  // 1-based
    CodingMode mode = CodingMode::systematic;
    WordSet words = WordSet::polar_subcode;
    bool log_domain = false;
    MatX<S> table;

    Iowef() = default;
    Iowef(int codelength, int i, CodingMode m, WordSet set, bool logs = false)
        : N(codelength), channel(i), mode(m), words(set), log_domain(logs) {
        const int rows = codelength - i + 2;  // w = 0..N-i+1
        table = constant_matrix<S>(rows, codelength + 1, empty_value());
    }

    S empty_value() const {
        if constexpr (is_exact_count_v<S>)
            return S(0);
        else
            return log_domain ? -std::numeric_limits<double>::infinity() : 0.0;
    }

    int w_max() const { return static_cast<int>(table.rows()) - 1; }

    S total() const {
        if (log_domain) throw std::invalid_argument("total: log-domain table");
        S t = S(0);
        for (int w = 0; w <= w_max(); ++w)
            for (int d = 0; d <= N; ++d) t += table(w, d);
        return t;
    }

    /// log of the summed count for log-domain tables.
    double total_log() const {
        if (!log_domain) throw std::invalid_argument("total_log: linear table");
        double m = -std::numeric_limits<double>::infinity();
        for (int w = 0; w <= w_max(); ++w)
            for (int d = 0; d <= N; ++d) m = std::max(m, double(table(w, d)));
        if (!std::isfinite(m)) return m;
        double acc = 0;
        for (int w = 0; w <= w_max(); ++w)
            for (int d = 0; d <= N; ++d) {
                const double v = double(table(w, d));
                if (std::isfinite(v)) acc += std::exp(v - m);
            }
        return m + std::log(acc);
    }
};

/// Exact-mode marginalization over input weight.
template <class S>
Spectrum<S> extract_polar_spectrum(const Iowef<S>& io) {
    if (io.log_domain)
        throw std::invalid_argument("extract_polar_spectrum: approximate (log-domain) tables are refused");
    Spectrum<S> sp(io.N, io.channel);
    for (int w = 0; w <= io.w_max(); ++w)
        for (int d = 0; d <= io.N; ++d) sp.counts[d] += io.table(w, d);
    return sp;
}

/// 4-axis split of the subcode of bit-channel i: k is the weight of the last
/// information position N, l of the other information positions i..N-1, m of
/// the last parity position i-1, n of the remaining parity positions 1..i-2.
/// For i = 1 both parity axes collapse (m = 0 and the n axis has length one).
template <class S>
struct FourSplit {
    int N = 0;
    int channel = 0;                  // 1-based
    std::array<MatX<S>, 4> slabs;     // slab(k, m), each (l_size x n_size)

    FourSplit() = default;
    FourSplit(int codelength, int i) : N(codelength), channel(i) {
        for (auto& s : slabs) s = zero_matrix<S>(l_size(), n_size());
    }

    int l_size() const { return N - channel + 1; }
    int n_size() const { return std::max(channel - 2, 0) + 1; }

    MatX<S>& slab(int k, int m) { return slabs[static_cast<std::size_t>(2 * k + m)]; }
    const MatX<S>& slab(int k, int m) const { return slabs[static_cast<std::size_t>(2 * k + m)]; }

    S& at(int k, int l, int m, int n) { return slab(k, m)(l, n); }
    const S& at(int k, int l, int m, int n) const { return slab(k, m)(l, n); }

    S total() const {
        S t = S(0);
        for (const auto& s : slabs) t += s.sum();
        return t;
    }
};

/// 2-axis split of the subcode of bit-channel i+1 re-grouped under channel i's
/// partition: p is the weight over the information positions i..N, q over the
/// parity positions 1..i-1.
template <class S>
struct TwoSplit {
    int N = 0;
    int channel = 0;  // i, 1-based; the counted words form the subcode of i+1
    MatX<S> table;    // rows p = 0..N-i+1, cols q = 0..i-1

    TwoSplit() = default;
    TwoSplit(int codelength, int i)
        : N(codelength), channel(i), table(zero_matrix<S>(codelength - i + 2, std::max(i, 1))) {}
};

// ---------------------------------------------------------------------------
// Structural checks. Each returns true when the property holds; exact scalars
// are compared exactly.
// ---------------------------------------------------------------------------

/// Words of the subcode have even weight for channels i >= 2. Holds for the
/// IOWEF in both exact and log-domain representations (empty log cells are
/// -inf) and for the 4-split tensor.
template <class S>
bool parity_holds(const Iowef<S>& io) {
    if (io.channel < 2) return true;
    for (int w = 0; w <= io.w_max(); ++w)
        for (int d = 1; d <= io.N; d += 2)
            if (io.table(w, d) != io.empty_value()) return false;
    return true;
}

template <class S>
bool parity_holds(const FourSplit<S>& u) {
    static_assert(is_exact_count_v<S>);
    if (u.channel < 2) return true;
    for (int k = 0; k <= 1; ++k)
        for (int m = 0; m <= 1; ++m)
            for (int l = 0; l < u.l_size(); ++l)
                for (int n = 0; n < u.n_size(); ++n)
                    if (((k + l + m + n) & 1) != 0 && u.at(k, l, m, n) != S(0)) return false;
    return true;
}

/// Complement symmetry: the all-ones word lies in every subcode, so counts are
/// invariant under complementing each coordinate group.
template <class S>
bool symmetry_holds(const FourSplit<S>& u) {
    const int i = u.channel;
    if (i == 1) {
        for (int k = 0; k <= 1; ++k)
            for (int l = 0; l < u.l_size(); ++l)
                if (u.at(k, l, 0, 0) != u.at(1 - k, u.N - 1 - l, 0, 0)) return false;
        return true;
    }
    for (int k = 0; k <= 1; ++k)
        for (int m = 0; m <= 1; ++m)
            for (int l = 0; l < u.l_size(); ++l)
                for (int n = 0; n < u.n_size(); ++n)
                    if (u.at(k, l, m, n) != u.at(1 - k, u.N - i - l, 1 - m, i - 2 - n)) return false;
    return true;
}

/// Subcode cardinality: 2^(N-i+1) words.
template <class S>
bool total_matches(const FourSplit<S>& u) {
    static_assert(is_exact_count_v<S>);
    return u.total() == (S(1) << (u.N - u.channel + 1));
}

/// Column-weight balance of exact systematic tables:
/// N * sum_w w*A(w,d) == d * (N-i+1) * A(d) for every d.
template <class S>
bool homogeneity_holds(const Iowef<S>& io, const Spectrum<S>& sp) {
    static_assert(is_exact_count_v<S>);
    if (io.mode != CodingMode::systematic || io.log_domain) throw std::invalid_argument("homogeneity: needs exact systematic table");
    const int span = io.N - io.channel + 1;
    for (int d = 0; d <= io.N; ++d) {
        S lhs = S(0);
        for (int w = 0; w <= io.w_max(); ++w) lhs += S(w) * io.table(w, d);
        if (S(io.N) * lhs != S(d) * S(span) * sp.counts[d]) return false;
    }
    return true;
}

}  // namespace polarspec
