/*
Count scalars for weight spectra: exact big integers, exact rationals and
plain doubles, with the few shared helpers the templated engine needs

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace polarspec {

using BigInt = boost::multiprecision::cpp_int;
using Int512 = boost::multiprecision::int512_t;
using BigRational = boost::multiprecision::cpp_rational;

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// With this Boost/Eigen pairing, copy-constructing a matrix directly from an
// Eigen expression trips a non-SFINAE-safe conversion probe inside
// boost::multiprecision. Matrices of multiprecision scalars are therefore
// built with these helpers (or plain assignment), never from expressions.
template <class S>
MatX<S> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
    MatX<S> m;
    m.setZero(rows, cols);
    return m;
}

template <class S>
MatX<S> constant_matrix(Eigen::Index rows, Eigen::Index cols, const S& v) {
    MatX<S> m;
    m.setConstant(rows, cols, v);
    return m;
}

template <class S>
VecX<S> zero_vector(Eigen::Index size) {
    VecX<S> v;
    v.setZero(size);
    return v;
}

template <class S>
struct is_exact_count : std::true_type {};
template <>
struct is_exact_count<double> : std::false_type {};
template <class S>
inline constexpr bool is_exact_count_v = is_exact_count<S>::value;

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;  // always exact at this point
    }
    return r;
}

/// Pascal triangle rows 0..n_max as exact integers.
inline std::vector<std::vector<BigInt>> binomial_rows(int n_max) {
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
                                               rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
    }
    return rows;
}

template <class S>
S count_from_u64(std::uint64_t v) {
    return S(v);
}

template <class S>
S count_from_big(const BigInt& v) {
    return static_cast<S>(v);
}
template <>
inline double count_from_big<double>(const BigInt& v) {
    return v.template convert_to<double>();
}

inline double to_double_count(double v) { return v; }
template <class B, boost::multiprecision::expression_template_option E>
double to_double_count(const boost::multiprecision::number<B, E>& v) {
    return v.template convert_to<double>();
}

/// Natural log of a positive count, accurate to double precision even when the
/// count itself overflows double range.
inline double log_count(double v) { return std::log(v); }

template <class B, boost::multiprecision::expression_template_option E>
double log_count(const boost::multiprecision::number<B, E>& v) {
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    const BigInt x(v);
    const long bits = static_cast<long>(boost::multiprecision::msb(x));
    if (bits < 960) return std::log(x.template convert_to<double>());
    const BigInt top = x >> (bits - 52);
    return std::log(top.template convert_to<double>()) + static_cast<double>(bits - 52) * M_LN2;
}

inline double log_count(const BigRational& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    return log_count(BigInt(numerator(v))) - log_count(BigInt(denominator(v)));
}

/// Divides v by 2^bits in place; returns false if the division is not exact.
template <class S>
bool divide_exact_pow2(S& v, int bits) {
    if (bits == 0) return true;
    const S q = v >> bits;
    if ((q << bits) != v) return false;
    v = q;
    return true;
}

}  // namespace polarspec
