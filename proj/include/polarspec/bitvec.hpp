/*
Packed GF(2) word type for codewords and source words

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarspec {

/// Fixed-length binary word. Bit j (0-based) is codeword position j+1.
class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(int length) : length_(length) {
        if (length < 0) throw std::invalid_argument("BitVector: negative length");
        words_.assign(word_count(length), 0);
    }

    BitVector(std::initializer_list<int> bits) : BitVector(static_cast<int>(bits.size())) {
        int j = 0;
        for (int b : bits) set(j++, b != 0);
    }

    static BitVector from_word(std::uint64_t word, int length) {
        BitVector v(length);
        if (length > 0) v.words_[0] = length >= 64 ? word : (word & ((std::uint64_t{1} << length) - 1));
        return v;
    }

    int length() const { return length_; }

    bool get(int j) const { return (words_[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u; }

    void set(int j, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (value)
            words_[static_cast<std::size_t>(j) >> 6] |= mask;
        else
            words_[static_cast<std::size_t>(j) >> 6] &= ~mask;
    }

    void flip(int j) { words_[static_cast<std::size_t>(j) >> 6] ^= std::uint64_t{1} << (j & 63); }

    int weight() const {
        int w = 0;
        for (std::uint64_t word : words_) w += std::popcount(word);
        return w;
    }

    BitVector operator^(const BitVector& other) const {
        if (other.length_ != length_) throw std::invalid_argument("BitVector: length mismatch");
        BitVector out(length_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] ^ other.words_[w];
        return out;
    }

    BitVector& operator^=(const BitVector& other) {
        if (other.length_ != length_) throw std::invalid_argument("BitVector: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    bool operator==(const BitVector& other) const {
        return length_ == other.length_ && words_ == other.words_;
    }
    bool operator!=(const BitVector& other) const { return !(*this == other); }

    /// Cyclic shift by one position toward higher indices (position j -> j+1).
    BitVector rotated_once() const {
        BitVector out(length_);
        for (int j = 0; j < length_; ++j)
            if (get(j)) out.set((j + 1) % length_, true);
        return out;
    }

    std::uint64_t to_word() const {
        if (length_ > 64) throw std::invalid_argument("BitVector: does not fit in 64 bits");
        return words_.empty() ? 0 : words_[0];
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words_mut() { return words_; }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(length_), '0');
        for (int j = 0; j < length_; ++j)
            if (get(j)) s[static_cast<std::size_t>(j)] = '1';
        return s;
    }

  private:
    static std::size_t word_count(int length) { return (static_cast<std::size_t>(length) + 63) / 64; }

    int length_ = 0;
    std::vector<std::uint64_t> words_;
};

inline int hamming_distance(const BitVector& a, const BitVector& b) { return (a ^ b).weight(); }

}  // namespace polarspec
