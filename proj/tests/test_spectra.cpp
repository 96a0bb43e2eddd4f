/*
Tests for brute-force enumeration, Krawtchouk kernels and the exact
systematic recursion against hand-computed and enumerated oracles

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#include "doctest.h"

#include <unordered_set>

#include "polarspec/spectra/brute_force.hpp"
#include "polarspec/spectra/krawtchouk.hpp"
#include "polarspec/spectra/sys_recursion.hpp"

using namespace polarspec;

namespace {

int restricted_channel() { return 64 - kBruteForceSuffixBits + 1; }

template <class M>
bool same_matrix(const M& a, const M& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c)) return false;
    return true;
}

}  // namespace

TEST_CASE("krawtchouk matrices") {
    const auto k1 = krawtchouk<BigInt>(1);
    CHECK(k1.entries(0, 0) == 1);
    CHECK(k1.entries(0, 1) == 1);
    CHECK(k1.entries(1, 0) == 1);
    CHECK(k1.entries(1, 1) == -1);

    const auto k2 = krawtchouk<BigInt>(2);
    const int expect2[3][3] = {{1, 1, 1}, {2, 0, -2}, {1, -1, 1}};
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y) CHECK(k2.entries(x, y) == expect2[x][y]);

    SUBCASE("recurrence equals the closed form") {
        for (int M : {0, 1, 3, 7, 12, 24}) {
            const auto k = krawtchouk<BigInt>(M);
            for (int x = 0; x <= M; ++x)
                for (int y = 0; y <= M; ++y)
                    CHECK(k.entries(x, y) == krawtchouk_entry_direct<BigInt>(M, x, y));
        }
    }
    SUBCASE("first row all ones, first column binomial") {
        const auto k = krawtchouk<BigInt>(17);
        for (int y = 0; y <= 17; ++y) CHECK(k.entries(0, y) == 1);
        for (int x = 0; x <= 17; ++x) CHECK(k.entries(x, 0) == binomial_big(17, x));
    }
    SUBCASE("involution up to scale, M <= 64") {
        for (int M : {1, 2, 5, 16, 33, 64}) {
            const auto k = krawtchouk<BigInt>(M).entries;
            MatX<BigInt> prod;
            prod = k.lazyProduct(k);
            for (int x = 0; x <= M; ++x)
                for (int y = 0; y <= M; ++y)
                    CHECK(prod(x, y) == (x == y ? BigInt(1) << M : BigInt(0)));
        }
    }
}

TEST_CASE("brute force hand examples") {
    SUBCASE("all-ones channel") {
        const auto r = brute_force_subcode<BigInt>(4, 4, CodingMode::systematic);
        const auto sp = extract_polar_spectrum(r.coset);
        CHECK(sp.counts[4] == 1);
        CHECK(sp.total() == 1);
    }
    SUBCASE("channel 1 of N=4") {
        const auto r = brute_force_subcode<BigInt>(4, 1, CodingMode::systematic);
        const auto sp = extract_polar_spectrum(r.coset);
        CHECK(sp.counts[1] == 4);
        CHECK(sp.counts[3] == 4);
        CHECK(sp.total() == 8);
        CHECK(sp.counts[0] == 0);
    }
    SUBCASE("channel 3 of N=4, non-systematic input weights") {
        const auto r = brute_force_subcode<BigInt>(4, 3, CodingMode::nonsystematic);
        CHECK(r.coset.table(1, 2) == 1);
        CHECK(r.coset.table(2, 2) == 1);
        CHECK(r.coset.total() == 2);
    }
    SUBCASE("channel 3 of N=4, systematic input weights") {
        const auto r = brute_force_subcode<BigInt>(4, 3, CodingMode::systematic);
        CHECK(r.coset.table(1, 2) == 2);
        const auto sp = extract_polar_spectrum(r.coset);
        CHECK(sp.counts[2] == 2);
    }
    SUBCASE("budget refusal") {
        CHECK_THROWS_AS(brute_force_subcode<BigInt>(64, 2, CodingMode::systematic), budget_error);
        CHECK_NOTHROW(brute_force_subcode<BigInt>(64, restricted_channel(), CodingMode::systematic));
    }
}

TEST_CASE("brute force structural invariants at N=8,16") {
    for (int N : {8, 16}) {
        for (int i = 1; i <= N; ++i) {
            const auto r = brute_force_subcode<BigInt>(N, i, CodingMode::systematic);
            CHECK(parity_holds(r.split));
            CHECK(symmetry_holds(r.split));
            CHECK(total_matches(r.split));
            CHECK(r.coset.total() == BigInt(1) << (N - i));
            CHECK(r.subcode.total() == BigInt(1) << (N - i + 1));
            const auto sp = extract_polar_spectrum(r.coset);
            CHECK(homogeneity_holds(r.coset, sp));
            CHECK(sp.counts[0] == 0);
            if (i >= 2) CHECK(parity_holds(r.coset));
        }
    }
}

TEST_CASE("macwilliams transform against enumeration at 2N=8") {
    std::vector<FourSplit<BigInt>> splits;
    for (int i = 1; i <= 8; ++i)
        splits.push_back(brute_force_subcode<BigInt>(8, i, CodingMode::systematic).split);

    SUBCASE("both directions of every dual pair") {
        for (int j : {2, 3, 4, 6, 7, 8}) {  // j=5 is the self-dual channel, excluded
            const auto got = macwilliams_4split(splits[static_cast<std::size_t>(8 + 2 - j - 1)], j);
            const auto& want = splits[static_cast<std::size_t>(j - 1)];
            for (int k = 0; k <= 1; ++k)
                for (int m = 0; m <= 1; ++m) CHECK(same_matrix(got.slab(k, m), want.slab(k, m)));
        }
    }
    SUBCASE("self-dual channel refused") {
        CHECK_THROWS_AS(macwilliams_4split(splits[4], 5), std::invalid_argument);
    }
}

TEST_CASE("systematic recursion equals brute force at N=16 from base 8") {
    const auto got = build_systematic_spectra<BigInt>(16, 8);
    REQUIRE(got.N == 16);
    for (int i = 1; i <= 16; ++i) {
        const auto want = brute_force_subcode<BigInt>(16, i, CodingMode::systematic);
        CHECK(same_matrix(got.iowefs[static_cast<std::size_t>(i - 1)].table, want.coset.table));
        for (int k = 0; k <= 1; ++k)
            for (int m = 0; m <= 1; ++m)
                CHECK(same_matrix(got.splits[static_cast<std::size_t>(i - 1)].slab(k, m), want.split.slab(k, m)));
    }
}

TEST_CASE("systematic recursion base independence at N=32") {
    const auto from8 = build_systematic_spectra<BigInt>(32, 8);
    const auto from16 = build_systematic_spectra<BigInt>(32, 16);
    for (int i = 1; i <= 32; ++i)
        CHECK(same_matrix(from8.iowefs[static_cast<std::size_t>(i - 1)].table,
                          from16.iowefs[static_cast<std::size_t>(i - 1)].table));
    SUBCASE("fixed-width and arbitrary-precision counts agree") {
        const auto fw = build_systematic_spectra<Int512>(32, 8);
        for (int i = 1; i <= 32; ++i)
            for (int d = 0; d <= 32; ++d)
                CHECK(BigInt(fw.spectra[static_cast<std::size_t>(i - 1)].counts[d]) ==
                      from8.spectra[static_cast<std::size_t>(i - 1)].counts[d]);
    }
}

TEST_CASE("systematic recursion invariants and pinned channels") {
    const auto got = build_systematic_spectra<BigInt>(32, 8);
    for (int i = 1; i <= 32; ++i) {
        const auto& io = got.iowefs[static_cast<std::size_t>(i - 1)];
        const auto& sp = got.spectra[static_cast<std::size_t>(i - 1)];
        CHECK(io.total() == BigInt(1) << (32 - i));
        CHECK(homogeneity_holds(io, sp));
        CHECK(parity_holds(got.splits[static_cast<std::size_t>(i - 1)]));
        CHECK(symmetry_holds(got.splits[static_cast<std::size_t>(i - 1)]));
    }
    CHECK(got.iowefs[31].table(1, 32) == 1);
    CHECK(got.iowefs[31].total() == 1);
}

TEST_CASE("subcode duality and cyclic closure at small codelengths") {
    for (int N : {8, 16}) {
        std::vector<std::vector<std::uint64_t>> subcodes(static_cast<std::size_t>(N));
        for (int i = 1; i <= N; ++i) subcodes[static_cast<std::size_t>(i - 1)] = enumerate_words(N, i, WordSet::subcode);

        SUBCASE("classical MacWilliams between marginal WEFs of dual pairs") {
            const auto K = krawtchouk<BigInt>(N).entries;
            for (int i = N / 2 + 1; i <= N; ++i) {
                VecX<BigInt> wef = zero_vector<BigInt>(N + 1), dual_wef = zero_vector<BigInt>(N + 1);
                for (auto w : subcodes[static_cast<std::size_t>(i - 1)]) wef[std::popcount(w)] += 1;
                for (auto w : subcodes[static_cast<std::size_t>(N + 2 - i - 1)]) dual_wef[std::popcount(w)] += 1;
                const BigInt size = BigInt(1) << (N - i + 1);
                for (int dd = 0; dd <= N; ++dd) {
                    BigInt acc = 0;
                    for (int d = 0; d <= N; ++d) acc += wef[d] * K(dd, d);
                    CHECK(acc == size * dual_wef[dd]);
                }
            }
        }
        SUBCASE("cyclic closure of subcodes and polar subcodes") {
            for (int i = 1; i <= N; ++i) {
                const std::unordered_set<std::uint64_t> members(subcodes[static_cast<std::size_t>(i - 1)].begin(),
                                                                subcodes[static_cast<std::size_t>(i - 1)].end());
                for (auto w : subcodes[static_cast<std::size_t>(i - 1)]) {
                    const std::uint64_t rot = ((w << 1) | (w >> (N - 1))) & ((N == 64) ? ~0ull : ((1ull << N) - 1));
                    CHECK(members.count(rot) == 1);
                }
                const auto coset = enumerate_words(N, i, WordSet::polar_subcode);
                const std::unordered_set<std::uint64_t> coset_members(coset.begin(), coset.end());
                for (auto w : coset) {
                    const std::uint64_t rot = ((w << 1) | (w >> (N - 1))) & ((1ull << N) - 1);
                    CHECK(coset_members.count(rot) == 1);
                }
            }
        }
    }
}
