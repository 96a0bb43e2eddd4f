/*
Code parameters, polar transform and systematic encoding over GF(2)

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polarspec/bitvec.hpp"

namespace polarspec {

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(int n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("codelength must be a power of two");
    return std::countr_zero(static_cast<unsigned>(n));
}

/// Code parameters. Bit-channel indices are 1-based everywhere in the public
/// API; the frozen set is the complement of info_set and all frozen bits are
/// zero.
struct CodeSpec {
    int n = 0;                  // log2 codelength
    int N = 0;                  // codelength
    int K = 0;                  // dimension
    std::vector<int> info_set;  // strictly increasing, values in 1..N
    bool systematic = false;

    CodeSpec() = default;

    CodeSpec(int codelength, std::vector<int> info, bool systematic_coding)
        : n(log2_exact(codelength)),
          N(codelength),
          K(static_cast<int>(info.size())),
          info_set(std::move(info)),
          systematic(systematic_coding) {
        if (K < 1 || K > N) throw std::invalid_argument("CodeSpec: dimension out of range");
        for (int r = 0; r < K; ++r) {
            if (info_set[static_cast<std::size_t>(r)] < 1 || info_set[static_cast<std::size_t>(r)] > N)
                throw std::invalid_argument("CodeSpec: info index out of range");
            if (r > 0 && info_set[static_cast<std::size_t>(r)] <= info_set[static_cast<std::size_t>(r) - 1])
                throw std::invalid_argument("CodeSpec: info set must be strictly increasing");
        }
    }

    bool is_info(int i) const {  // i is 1-based
        return std::binary_search(info_set.begin(), info_set.end(), i);
    }

    std::vector<int> frozen_set() const {
        std::vector<int> frozen;
        frozen.reserve(static_cast<std::size_t>(N - K));
        for (int i = 1; i <= N; ++i)
            if (!is_info(i)) frozen.push_back(i);
        return frozen;
    }
};

/// Indices of the information set at or above bit-channel i.
struct InfoSubset {
    int channel = 0;           // i, 1-based
    std::vector<int> indices;  // elements of the info set with value >= i
    int count = 0;             // K_i

    InfoSubset(const CodeSpec& spec, int i) : channel(i) {
        for (int a : spec.info_set)
            if (a >= i) indices.push_back(a);
        count = static_cast<int>(indices.size());
    }
};

/// In-place polar transform x = u * G_N over GF(2), G_N the n-fold Kronecker
/// power of [[1,0],[1,1]] without any bit-reversal permutation. Stages commute,
/// so they are applied in ascending stride order. Self-inverse.
inline std::uint64_t polar_transform_word(std::uint64_t x, int N) {
    if (N > 64 || !is_power_of_two(N)) throw std::invalid_argument("polar_transform_word: bad length");
    static constexpr std::uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (int s = 0; (1 << s) < N; ++s) x ^= (x >> (1 << s)) & kMask[s];
    return x;
}

inline BitVector polar_encode(const BitVector& u) {
    const int N = u.length();
    if (!is_power_of_two(N)) throw std::invalid_argument("polar_encode: length must be a power of two");
    if (N <= 64) return BitVector::from_word(polar_transform_word(u.to_word(), N), N);

    BitVector x = u;
    auto& words = x.words_mut();
    static constexpr std::uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (int h = 1; h < N; h <<= 1) {
        if (h < 64) {
            for (auto& w : words) w ^= (w >> h) & kMask[std::countr_zero(static_cast<unsigned>(h))];
        } else {
            const std::size_t stride = static_cast<std::size_t>(h) / 64;
            for (std::size_t w = 0; w < words.size(); ++w)
                if ((w & stride) == 0) words[w] ^= words[w + stride];
        }
    }
    return x;
}

/// Hamming weight of row i (1-based) of G_N: 2 to the popcount of i-1.
/// Follows from the Kronecker structure; verified exhaustively in tests.
inline int row_weight(int i, int N) {
    if (!is_power_of_two(N)) throw std::invalid_argument("row_weight: bad codelength");
    if (i < 1 || i > N) throw std::invalid_argument("row_weight: index out of range");
    return 1 << std::popcount(static_cast<unsigned>(i - 1));
}

/// Row i (1-based) of G_N, built explicitly: entry j is 1 iff the support of
/// j-1 is contained in the support of i-1.
inline BitVector generator_row(int i, int N) {
    if (i < 1 || i > N) throw std::invalid_argument("generator_row: index out of range");
    BitVector row(N);
    const unsigned src = static_cast<unsigned>(i - 1);
    for (int j = 0; j < N; ++j)
        if ((static_cast<unsigned>(j) & ~src) == 0) row.set(j, true);
    return row;
}

/// Systematic encoder for a fixed CodeSpec. Caches the GF(2) inverse of the
/// square submatrix of G_N restricted to the information set, which is lower
/// triangular with unit diagonal and therefore always invertible.
class SystematicEncoder {
  public:
    explicit SystematicEncoder(CodeSpec spec) : spec_(std::move(spec)) {
        if (!spec_.systematic) throw std::invalid_argument("SystematicEncoder: spec is not systematic");
        build_inverse();
    }

    const CodeSpec& spec() const { return spec_; }

    /// Returns the codeword x with x restricted to the info set equal to b and
    /// the unique source word u = x * G_N zero on the frozen set.
    BitVector encode(const BitVector& b) const {
        if (b.length() != spec_.K) throw std::invalid_argument("systematic encode: dimension mismatch");
        BitVector u(spec_.N);
        // u_A = b * inv(G_{A,A})
        for (int r = 0; r < spec_.K; ++r) {
            if (!b.get(r)) continue;
            for (int c = 0; c < spec_.K; ++c)
                if (inv_.get(r * spec_.K + c)) u.flip(spec_.info_set[static_cast<std::size_t>(c)] - 1);
        }
        return polar_encode(u);
    }

    BitVector extract_info(const BitVector& x) const {
        BitVector b(spec_.K);
        for (int r = 0; r < spec_.K; ++r) b.set(r, x.get(spec_.info_set[static_cast<std::size_t>(r)] - 1));
        return b;
    }

  private:
    void build_inverse() {
        const int K = spec_.K;
        // Work rows hold [G_{A,A} | I]; eliminate to [I | inv].
        std::vector<BitVector> rows(static_cast<std::size_t>(K), BitVector(2 * K));
        for (int r = 0; r < K; ++r) {
            const unsigned src = static_cast<unsigned>(spec_.info_set[static_cast<std::size_t>(r)] - 1);
            for (int c = 0; c < K; ++c) {
                const unsigned dst = static_cast<unsigned>(spec_.info_set[static_cast<std::size_t>(c)] - 1);
                if ((dst & ~src) == 0) rows[static_cast<std::size_t>(r)].set(c, true);
            }
            rows[static_cast<std::size_t>(r)].set(K + r, true);
        }
        for (int col = 0; col < K; ++col) {
            int pivot = -1;
            for (int r = col; r < K; ++r)
                if (rows[static_cast<std::size_t>(r)].get(col)) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw consistency_error_unreachable();
            std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(pivot)]);
            for (int r = 0; r < K; ++r)
                if (r != col && rows[static_cast<std::size_t>(r)].get(col))
                    rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(col)];
        }
        inv_ = BitVector(K * K);
        for (int r = 0; r < K; ++r)
            for (int c = 0; c < K; ++c)
                if (rows[static_cast<std::size_t>(r)].get(K + c)) inv_.set(r * K + c, true);
    }

    static std::logic_error consistency_error_unreachable() {
        return std::logic_error("G_{A,A} must be invertible");
    }

    CodeSpec spec_;
    BitVector inv_;  // K*K row-major inverse of G_{A,A}
};

}  // namespace polarspec
