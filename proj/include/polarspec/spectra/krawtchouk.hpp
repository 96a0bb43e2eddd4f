/*
Integer Krawtchouk matrices, the transform kernels of the binary MacWilliams
identities

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include "polarspec/bigcount.hpp"
#include "polarspec/common.hpp"

namespace polarspec {

/// Entry (x,y) equals sum_z (-1)^z C(y,z) C(M-y,x-z); row 0 is all ones and
/// K*K = 2^M * I. Built with the three-term degree recurrence, which
/// reproduces the closed form exactly (cross-checked in tests).
template <class S>
struct KrawtchoukMatrix {
    int order = 0;  // M
    MatX<S> entries;  // (M+1) x (M+1), rows x, cols y
};

template <class S>
KrawtchoukMatrix<S> krawtchouk(int M) {
    if (M < 0) throw std::invalid_argument("krawtchouk: negative order");
    KrawtchoukMatrix<S> K;
    K.order = M;
    K.entries = zero_matrix<S>(M + 1, M + 1);
    for (int y = 0; y <= M; ++y) {
        K.entries(0, y) = S(1);
        if (M >= 1) K.entries(1, y) = S(M - 2 * y);
        for (int x = 1; x < M; ++x) {
            // (x+1) K_{x+1} = (M-2y) K_x - (M-x+1) K_{x-1}
            S v = S(M - 2 * y) * K.entries(x, y) - S(M - x + 1) * K.entries(x - 1, y);
            const S q = v / S(x + 1);
            if (q * S(x + 1) != v) throw consistency_error("krawtchouk recurrence not integral");
            K.entries(x + 1, y) = q;
        }
    }
    return K;
}

/// Closed-form evaluation, used as an independent check of the recurrence.
template <class S>
S krawtchouk_entry_direct(int M, int x, int y) {
    S acc = S(0);
    for (int z = 0; z <= x; ++z) {
        const S term = count_from_big<S>(binomial_big(y, z) * binomial_big(M - y, x - z));
        acc += (z & 1) ? -term : term;
    }
    return acc;
}

}  // namespace polarspec
