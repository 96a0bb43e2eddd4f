/*
Exact recursion for systematic-coding weight tables: codelength doubling of
4-split spectra through repetition maps, the generalized MacWilliams
transform, and subtraction of adjacent subcodes

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <functional>
#include <vector>

#include "polarspec/spectra/brute_force.hpp"
#include "polarspec/spectra/krawtchouk.hpp"
#include "polarspec/spectra/tables.hpp"

namespace polarspec {

/// Doubles a 4-split spectrum through the repetition structure: every word of
/// the channel-(N+i) subcode at codelength 2N is (t,t) for a unique word t of
/// the channel-i subcode at codelength N. For i >= 2 the composite parity
/// group collects a full copy of t plus its small parity part, giving
/// h = k+l+m+2n; for i = 1 the two halves split the groups evenly (e=g=k,
/// f=h=l).
template <class S>
FourSplit<S> doubled_upper_split(const FourSplit<S>& base) {
    const int N = base.N;
    const int i = base.channel;
    FourSplit<S> out(2 * N, N + i);
    if (i == 1) {
        for (int k = 0; k <= 1; ++k)
            for (int l = 0; l < base.l_size(); ++l) {
                const S& v = base.at(k, l, 0, 0);
                if (v != S(0)) out.at(k, l, k, l) = v;
            }
        return out;
    }
    for (int k = 0; k <= 1; ++k)
        for (int m = 0; m <= 1; ++m)
            for (int l = 0; l < base.l_size(); ++l)
                for (int n = 0; n < base.n_size(); ++n) {
                    const S& v = base.at(k, l, m, n);
                    if (v != S(0)) out.at(k, l, m, k + l + m + 2 * n) = v;
                }
    return out;
}

/// 4-split spectrum of the rate-1 subcode (channel 1): both parity axes are
/// degenerate and the information positions split binomially.
template <class S>
FourSplit<S> rate_one_split(int N) {
    FourSplit<S> out(N, 1);
    for (int f = 0; f <= N - 1; ++f) {
        const S c = count_from_big<S>(binomial_big(N - 1, f));
        out.at(0, f, 0, 0) = c;
        out.at(1, f, 0, 0) = c;
    }
    return out;
}

/// Generalized MacWilliams step: 4-split spectrum of channel j from the
/// 4-split spectrum of its dual channel 2N+2-j. The four coordinate groups
/// transform independently with the axis pairing (e<->g', g<->e', f<->h',
/// h<->f'), so the quadruple sum separates into two matrix products per
/// (e',g') slab. Every output entry must come out a nonnegative integer after
/// the 2^(j-1) scaling; anything else signals an upstream bug.
template <class S>
FourSplit<S> macwilliams_4split(const FourSplit<S>& dual, int j) {
    static_assert(is_exact_count_v<S>);
    const int two_n = dual.N;
    if (j < 2 || j > two_n || j == two_n / 2 + 1)
        throw std::invalid_argument("macwilliams_4split: channel index outside the dual-pair range");
    if (dual.channel != two_n + 2 - j)
        throw std::invalid_argument("macwilliams_4split: dual spectrum has the wrong channel index");

    const MatX<S> Ka = krawtchouk<S>(two_n - j).entries;  // acts on (f, h')
    const MatX<S> Kb = krawtchouk<S>(j - 2).entries;      // acts on (h, f')

    std::array<MatX<S>, 4> partial;  // indexed by (e', g')
    for (int e2 = 0; e2 <= 1; ++e2)
        for (int g2 = 0; g2 <= 1; ++g2) {
            MatX<S> tmp;
            tmp = Ka.lazyProduct(dual.slab(e2, g2).transpose());
            partial[static_cast<std::size_t>(2 * e2 + g2)] = tmp.lazyProduct(Kb.transpose());
        }

    FourSplit<S> out(two_n, j);
    for (int e = 0; e <= 1; ++e)
        for (int g = 0; g <= 1; ++g) {
            MatX<S> acc = zero_matrix<S>(two_n - j + 1, j - 1);
            for (int e2 = 0; e2 <= 1; ++e2)
                for (int g2 = 0; g2 <= 1; ++g2) {
                    if (((e & g2) ^ (g & e2)) != 0)
                        acc -= partial[static_cast<std::size_t>(2 * e2 + g2)];
                    else
                        acc += partial[static_cast<std::size_t>(2 * e2 + g2)];
                }
            for (int f = 0; f <= two_n - j; ++f)
                for (int h = 0; h <= j - 2; ++h) {
                    S v = acc(f, h);
                    if (v < 0) throw consistency_error("macwilliams_4split: negative entry");
                    if (!divide_exact_pow2(v, j - 1))
                        throw consistency_error("macwilliams_4split: entry not divisible by 2^(j-1)");
                    out.at(e, f, g, h) = v;
                }
        }
    return out;
}

/// Information/parity regrouping T of one 4-split spectrum: rows w = k+l,
/// columns r = m+n.
template <class S>
MatX<S> info_parity_table(const FourSplit<S>& u) {
    const int rows = u.N - u.channel + 2;
    const int cols = std::max(u.channel, 1);
    MatX<S> t = zero_matrix<S>(rows, cols);
    for (int k = 0; k <= 1; ++k)
        for (int m = 0; m <= 1; ++m)
            for (int l = 0; l < u.l_size(); ++l)
                for (int n = 0; n < u.n_size(); ++n) {
                    const S& v = u.at(k, l, m, n);
                    if (v != S(0)) t(k + l, m + n) += v;
                }
    return t;
}

/// Words of the channel-(j+1) subcode regrouped under channel j's partition:
/// p spans the last parity position of channel j+1 together with all its
/// information positions, q the remaining parity positions.
template <class S>
TwoSplit<S> regrouped_split(const FourSplit<S>& u_next) {
    const int j = u_next.channel - 1;
    if (j < 1) throw std::invalid_argument("regrouped_split: needs channel >= 2");
    TwoSplit<S> v(u_next.N, j);
    for (int k = 0; k <= 1; ++k)
        for (int m = 0; m <= 1; ++m)
            for (int l = 0; l < u_next.l_size(); ++l)
                for (int n = 0; n < u_next.n_size(); ++n) {
                    const S& entry = u_next.at(k, l, m, n);
                    if (entry != S(0)) v.table(k + l + m, n) += entry;
                }
    return v;
}

/// Polar IOWEF of channel j (systematic input weights) by removing the
/// channel-(j+1) subcode from the channel-j subcode cell by cell.
template <class S>
Iowef<S> coset_iowef_from_splits(const FourSplit<S>& u_j, const FourSplit<S>& u_next) {
    const int M = u_j.N;
    const int j = u_j.channel;
    const MatX<S> t = info_parity_table(u_j);
    const TwoSplit<S> v = regrouped_split(u_next);
    Iowef<S> a(M, j, CodingMode::systematic, WordSet::polar_subcode);
    for (int w = 0; w <= M - j + 1; ++w)
        for (int r = 0; r <= j - 1 && r < static_cast<int>(t.cols()); ++r) {
            S val = t(w, r) - v.table(w, r);
            if (val < 0) throw consistency_error("coset iowef: negative count");
            if (val != S(0)) a.table(w, w + r) = val;
        }
    return a;
}

template <class S>
struct SysSpectra {
    int N = 0;
    int base_N = 0;
    std::vector<FourSplit<S>> splits;   // channel i at splits[i-1]
    std::vector<Iowef<S>> iowefs;       // polar subcode, systematic input weights
    std::vector<Spectrum<S>> spectra;   // marginals of iowefs
};

/// One codelength-doubling pass of the systematic recursion. Channels
/// 2N..N+2 come from the repetition map, N+1 from the rate-1 base, N..2 from
/// the MacWilliams transform of their duals, channel 1 binomially; the polar
/// IOWEFs follow by subcode subtraction, with the all-ones channel pinned to
/// its single word.
template <class S>
SysSpectra<S> systematic_doubling(const std::vector<FourSplit<S>>& level, int base_N, int threads = 0) {
    const int N = static_cast<int>(level.size());
    const int M = 2 * N;
    SysSpectra<S> out;
    out.N = M;
    out.base_N = base_N;
    out.splits.resize(static_cast<std::size_t>(M));

    for (int j = M; j >= N + 1; --j)
        out.splits[static_cast<std::size_t>(j - 1)] = doubled_upper_split(level[static_cast<std::size_t>(j - N - 1)]);
    parallel_for(2, N + 1, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t j = lo; j < hi; ++j)
            out.splits[static_cast<std::size_t>(j - 1)] =
                macwilliams_4split(out.splits[static_cast<std::size_t>(M + 1 - j)], static_cast<int>(j));
    }, threads);
    out.splits[0] = rate_one_split<S>(M);

    out.iowefs.resize(static_cast<std::size_t>(M));
    parallel_for(1, M, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t j = lo; j < hi; ++j)
            out.iowefs[static_cast<std::size_t>(j - 1)] =
                coset_iowef_from_splits(out.splits[static_cast<std::size_t>(j - 1)], out.splits[static_cast<std::size_t>(j)]);
    }, threads);
    Iowef<S> last(M, M, CodingMode::systematic, WordSet::polar_subcode);
    last.table(1, M) = S(1);
    out.iowefs[static_cast<std::size_t>(M - 1)] = std::move(last);

    out.spectra.reserve(static_cast<std::size_t>(M));
    for (const auto& io : out.iowefs) out.spectra.push_back(extract_polar_spectrum(io));
    return out;
}

/// Full systematic pipeline: brute-force base case, then repeated doubling up
/// to the target codelength. The optional per-level callback sees every level
/// including the base (used for cache persistence).
template <class S>
SysSpectra<S> build_systematic_spectra(
    int target_N, int base_N = 8, int threads = 0,
    const std::function<void(const SysSpectra<S>&)>& on_level = nullptr) {
    log2_exact(target_N);
    if (base_N != 8 && base_N != 16) throw std::invalid_argument("base codelength must be 8 or 16");
    if (target_N < base_N) throw std::invalid_argument("target codelength below base");
    if (target_N > 512)
        throw budget_error("exact systematic recursion above N=512 exceeds the desk-scale memory budget");
    if constexpr (std::is_same_v<S, Int512>) {
        if (target_N > 256)
            throw std::invalid_argument("fixed-width counts only safe up to N=256; use arbitrary precision");
    }

    SysSpectra<S> level;
    level.N = base_N;
    level.base_N = base_N;
    level.splits.reserve(static_cast<std::size_t>(base_N));
    for (int i = 1; i <= base_N; ++i) {
        auto bf = brute_force_subcode<S>(base_N, i, CodingMode::systematic, threads);
        level.splits.push_back(std::move(bf.split));
        level.iowefs.push_back(std::move(bf.coset));
        level.spectra.push_back(extract_polar_spectrum(level.iowefs.back()));
    }
    if (on_level) on_level(level);

    while (level.N < target_N) {
        SysSpectra<S> next = systematic_doubling(level.splits, base_N, threads);
        level = std::move(next);
        if (on_level) on_level(level);
    }
    return level;
}

}  // namespace polarspec
