#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgrow {

// Fixed-length vector over GF(2), packed into 64-bit words.
// Invariant: bits at positions >= size() in the last word are zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_string(const std::string& s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v) {
        check_index(i);
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    bool is_zero() const {
        for (uint64_t x : words_)
            if (x) return false;
        return true;
    }

    bool any() const { return !is_zero(); }

    // Inner product mod 2.
    bool dot(const BitVector& o) const {
        check_same_size(o);
        uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
        return std::popcount(acc) & 1u;
    }

    BitVector& operator^=(const BitVector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    BitVector& operator&=(const BitVector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) {
        a &= b;
        return a;
    }

    BitVector& operator|=(const BitVector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend BitVector operator|(BitVector a, const BitVector& b) {
        a |= b;
        return a;
    }

    bool operator==(const BitVector&) const = default;

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w];
            while (x) {
                idx.push_back(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return idx;
    }

    // Index of the first set bit at position >= from; size() if none.
    std::size_t next_set(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t w = from >> 6;
        uint64_t x = words_[w] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (x) return w * 64 + std::countr_zero(x);
            if (++w == words_.size()) return size_;
            x = words_[w];
        }
    }

    std::size_t first_set() const { return next_set(0); }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // Gather bits at the given indices into a new vector.
    BitVector slice(const std::vector<std::size_t>& idx) const {
        BitVector v(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) v.set(i, get(idx[i]));
        return v;
    }

    // Grow with zeros or shrink (clearing any dropped bits).
    void resize(std::size_t n) {
        words_.resize((n + 63) / 64, 0);
        size_ = n;
        if (std::size_t tail = size_ & 63; tail != 0 && !words_.empty())
            words_.back() &= (~uint64_t{0}) >> (64 - tail);
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void check_index(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("BitVector: index out of range");
    }
    void check_same_size(const BitVector& o) const {
        if (size_ != o.size_) throw std::invalid_argument("BitVector: size mismatch");
    }

    std::size_t size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qgrow
