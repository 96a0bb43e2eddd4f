/*
Tests for the GF(2) substrate: transform, row weights, systematic coding

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#include "doctest.h"

#include <random>

#include "polarspec/code.hpp"

using namespace polarspec;

namespace {

BitVector random_word(int N, std::mt19937_64& rng) {
    BitVector v(N);
    for (int j = 0; j < N; ++j) v.set(j, (rng() & 1) != 0);
    return v;
}

// Multiply u by an explicitly built G_N, entry by entry.
BitVector encode_by_matrix(const BitVector& u) {
    const int N = u.length();
    BitVector x(N);
    for (int i = 1; i <= N; ++i)
        if (u.get(i - 1)) x ^= generator_row(i, N);
    return x;
}

}  // namespace

TEST_CASE("polar transform matches hand examples") {
    CHECK(polar_encode(BitVector{0, 0, 0, 0}) == BitVector{0, 0, 0, 0});
    CHECK(polar_encode(BitVector{0, 0, 0, 1}) == BitVector{1, 1, 1, 1});
    CHECK(polar_encode(BitVector{1, 1, 1, 1}) == BitVector{0, 0, 0, 1});
    CHECK_THROWS_AS(polar_encode(BitVector(6)), std::invalid_argument);
}

TEST_CASE("polar transform equals explicit matrix multiply") {
    std::mt19937_64 rng(7);
    for (int N : {2, 4, 8, 16, 64, 128, 256}) {
        for (int rep = 0; rep < 8; ++rep) {
            const BitVector u = random_word(N, rng);
            CHECK(polar_encode(u) == encode_by_matrix(u));
        }
    }
}

TEST_CASE("polar transform is an involution and linear") {
    std::mt19937_64 rng(11);
    for (int N = 2; N <= 1024; N *= 2) {
        const BitVector u = random_word(N, rng);
        const BitVector v = random_word(N, rng);
        CHECK(polar_encode(polar_encode(u)) == u);
        CHECK(polar_encode(u ^ v) == (polar_encode(u) ^ polar_encode(v)));
    }
}

TEST_CASE("row weights") {
    CHECK(row_weight(1, 8) == 1);
    CHECK(row_weight(8, 8) == 8);
    CHECK(row_weight(4, 4) == 4);
    CHECK(row_weight(3, 4) == 2);
    CHECK_THROWS_AS(row_weight(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(row_weight(9, 8), std::invalid_argument);
    for (int N : {2, 4, 8, 16, 32, 64, 128, 256})
        for (int i = 1; i <= N; ++i) CHECK(row_weight(i, N) == generator_row(i, N).weight());
}

TEST_CASE("code spec validation") {
    CHECK_THROWS_AS(CodeSpec(6, {1, 2}, false), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(4, {}, false), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(4, {2, 2}, false), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(4, {0, 1}, false), std::invalid_argument);
    const CodeSpec spec(8, {4, 6, 7, 8}, false);
    CHECK(spec.K == 4);
    CHECK(spec.frozen_set() == std::vector<int>{1, 2, 3, 5});
    const InfoSubset sub(spec, 6);
    CHECK(sub.count == 3);
    CHECK(sub.indices == std::vector<int>{6, 7, 8});
}

TEST_CASE("systematic encoding") {
    SUBCASE("hand example N=2") {
        SystematicEncoder enc(CodeSpec(2, {2}, true));
        CHECK(enc.encode(BitVector{1}) == BitVector{1, 1});
        CHECK(enc.encode(BitVector{0}) == BitVector{0, 0});
    }
    SUBCASE("round trip and frozen source bits") {
        std::mt19937_64 rng(3);
        for (int N : {4, 16, 64, 256}) {
            std::vector<int> info;
            for (int i = 1; i <= N; ++i)
                if (rng() % 3 != 0 || i == N) info.push_back(i);
            SystematicEncoder enc(CodeSpec(N, info, true));
            for (int rep = 0; rep < 10; ++rep) {
                const BitVector b = random_word(enc.spec().K, rng);
                const BitVector x = enc.encode(b);
                CHECK(enc.extract_info(x) == b);
                const BitVector u = polar_encode(x);  // G is self-inverse
                CHECK(polar_encode(u) == x);
                for (int i : enc.spec().frozen_set()) CHECK(u.get(i - 1) == false);
            }
        }
    }
    SUBCASE("dimension mismatch refused") {
        SystematicEncoder enc(CodeSpec(4, {3, 4}, true));
        CHECK_THROWS_AS(enc.encode(BitVector(3)), std::invalid_argument);
    }
}
