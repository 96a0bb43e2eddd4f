/*
Exhaustive enumeration of bit-channel subcodes; the oracle every recursive
spectrum result is validated against

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "polarspec/code.hpp"
#include "polarspec/common.hpp"
#include "polarspec/spectra/tables.hpp"

namespace polarspec {

/// Full enumeration is allowed up to N = 32; beyond that only channels whose
/// free suffix has at most this many bits.
inline constexpr int kBruteForceSuffixBits = 21;

inline void check_enumeration_budget(int N, int i) {
    if (i < 1 || i > N) throw std::invalid_argument("bit-channel index out of range");
    if (N <= 32) return;
    if (N - i + 1 > kBruteForceSuffixBits)
        throw budget_error("enumeration of 2^" + std::to_string(N - i + 1) +
                           " suffixes exceeds the budget (N=" + std::to_string(N) +
                           ", i=" + std::to_string(i) + "); refusing rather than truncating");
}

template <class S>
struct BruteForceResult {
    Iowef<S> coset;        // polar subcode of channel i
    Iowef<S> subcode;      // full subcode of channel i
    FourSplit<S> split;    // 4-axis split of the subcode
};

namespace detail {

struct SubcodeTally {
    std::vector<std::uint64_t> split;    // [k][l][m][n] flattened
    std::vector<std::uint64_t> coset;    // [w][d]
    std::vector<std::uint64_t> subcode;  // [w][d]

    SubcodeTally(int l_size, int n_size, int w_size, int d_size)
        : split(static_cast<std::size_t>(4 * l_size * n_size), 0),
          coset(static_cast<std::size_t>(w_size * d_size), 0),
          subcode(static_cast<std::size_t>(w_size * d_size), 0) {}

    void merge(const SubcodeTally& other) {
        for (std::size_t j = 0; j < split.size(); ++j) split[j] += other.split[j];
        for (std::size_t j = 0; j < coset.size(); ++j) coset[j] += other.coset[j];
        for (std::size_t j = 0; j < subcode.size(); ++j) subcode[j] += other.subcode[j];
    }
};

inline std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

// Word-sized enumeration kernel, N <= 64.
inline void tally_word_range(int N, int i, CodingMode mode, std::uint64_t s_begin, std::uint64_t s_end,
                             SubcodeTally& t) {
    const int l_size = N - i + 1;
    const int n_size = std::max(i - 2, 0) + 1;
    const int d_size = N + 1;
    const std::uint64_t top = std::uint64_t{1} << (N - 1);
    const std::uint64_t lmask = low_mask(N - 1) & ~low_mask(i - 1);
    const std::uint64_t mbit = i >= 2 ? (std::uint64_t{1} << (i - 2)) : 0;
    const std::uint64_t nmask = i >= 3 ? low_mask(i - 2) : 0;
    const bool systematic = mode == CodingMode::systematic;

    for (std::uint64_t s = s_begin; s < s_end; ++s) {
        const std::uint64_t x = polar_transform_word(s << (i - 1), N);
        const int d = std::popcount(x);
        const int k = (x & top) ? 1 : 0;
        const int l = std::popcount(x & lmask);
        const int m = (x & mbit) ? 1 : 0;
        const int n = std::popcount(x & nmask);
        t.split[static_cast<std::size_t>(((k * l_size + l) * 2 + m) * n_size + n)]++;
        const int w = systematic ? k + l : std::popcount(s);
        const std::size_t cell = static_cast<std::size_t>(w * d_size + d);
        t.subcode[cell]++;
        if (s & 1) t.coset[cell]++;
    }
}

// Generic kernel for N > 64 (budget restricts the suffix length).
inline void tally_generic_range(int N, int i, CodingMode mode, std::uint64_t s_begin, std::uint64_t s_end,
                                SubcodeTally& t) {
    const int l_size = N - i + 1;
    const int n_size = std::max(i - 2, 0) + 1;
    const int d_size = N + 1;
    const bool systematic = mode == CodingMode::systematic;

    for (std::uint64_t s = s_begin; s < s_end; ++s) {
        BitVector u(N);
        for (int b = 0; b < N - i + 1; ++b)
            if ((s >> b) & 1) u.set(i - 1 + b, true);
        const BitVector x = polar_encode(u);
        const int d = x.weight();
        const int k = x.get(N - 1) ? 1 : 0;
        int l = 0;
        for (int j = i - 1; j < N - 1; ++j) l += x.get(j);
        const int m = (i >= 2 && x.get(i - 2)) ? 1 : 0;
        int n = 0;
        for (int j = 0; j < i - 2; ++j) n += x.get(j);
        t.split[static_cast<std::size_t>(((k * l_size + l) * 2 + m) * n_size + n)]++;
        const int w = systematic ? k + l : std::popcount(s);
        const std::size_t cell = static_cast<std::size_t>(w * d_size + d);
        t.subcode[cell]++;
        if (s & 1) t.coset[cell]++;
    }
}

}  // namespace detail

/// Enumerates every source suffix of bit-channel i, encodes it, and tallies
/// the 4-split spectrum of the subcode plus the IOWEFs of the subcode and of
/// its polar-subcode slice under the requested input-weight convention.
template <class S>
BruteForceResult<S> brute_force_subcode(int N, int i, CodingMode mode, int threads = 0) {
    log2_exact(N);
    check_enumeration_budget(N, i);

    const int l_size = N - i + 1;
    const int n_size = std::max(i - 2, 0) + 1;
    const int w_size = N - i + 2;
    const int d_size = N + 1;
    const std::uint64_t suffixes = std::uint64_t{1} << (N - i + 1);

    int workers = effective_threads(threads);
    if (suffixes < (std::uint64_t{1} << 16)) workers = 1;
    std::vector<detail::SubcodeTally> tallies(static_cast<std::size_t>(workers),
                                              detail::SubcodeTally(l_size, n_size, w_size, d_size));
    const std::uint64_t chunk = (suffixes + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    parallel_for(0, workers, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t wi = lo; wi < hi; ++wi) {
            const std::uint64_t begin = static_cast<std::uint64_t>(wi) * chunk;
            const std::uint64_t end = std::min(suffixes, begin + chunk);
            if (begin >= end) continue;
            auto& t = tallies[static_cast<std::size_t>(wi)];
            if (N <= 64)
                detail::tally_word_range(N, i, mode, begin, end, t);
            else
                detail::tally_generic_range(N, i, mode, begin, end, t);
        }
    }, workers);
    for (int wi = 1; wi < workers; ++wi) tallies[0].merge(tallies[static_cast<std::size_t>(wi)]);
    const auto& t = tallies[0];

    BruteForceResult<S> out{Iowef<S>(N, i, mode, WordSet::polar_subcode),
                            Iowef<S>(N, i, mode, WordSet::subcode), FourSplit<S>(N, i)};
    for (int k = 0; k <= 1; ++k)
        for (int l = 0; l < l_size; ++l)
            for (int m = 0; m <= 1; ++m)
                for (int n = 0; n < n_size; ++n) {
                    const auto v = t.split[static_cast<std::size_t>(((k * l_size + l) * 2 + m) * n_size + n)];
                    if (v) out.split.at(k, l, m, n) = count_from_u64<S>(v);
                }
    for (int w = 0; w < w_size; ++w)
        for (int d = 0; d < d_size; ++d) {
            const std::size_t cell = static_cast<std::size_t>(w * d_size + d);
            if (t.coset[cell]) out.coset.table(w, d) = count_from_u64<S>(t.coset[cell]);
            if (t.subcode[cell]) out.subcode.table(w, d) = count_from_u64<S>(t.subcode[cell]);
        }
    return out;
}

/// All codewords of the requested set as packed words (N <= 32 only; used by
/// the cyclic-closure and duality checks at small codelengths).
inline std::vector<std::uint64_t> enumerate_words(int N, int i, WordSet set) {
    log2_exact(N);
    if (N > 32) throw budget_error("enumerate_words: N > 32");
    check_enumeration_budget(N, i);
    const std::uint64_t suffixes = std::uint64_t{1} << (N - i + 1);
    std::vector<std::uint64_t> words;
    words.reserve(static_cast<std::size_t>(set == WordSet::subcode ? suffixes : suffixes / 2));
    for (std::uint64_t s = 0; s < suffixes; ++s) {
        if (set == WordSet::polar_subcode && !(s & 1)) continue;
        words.push_back(polar_transform_word(s << (i - 1), N));
    }
    return words;
}

}  // namespace polarspec
