#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace colexlab {

/// Fixed-length bit sequence over Z2. Length is set at construction and
/// never changes; xor of two chains requires equal length.
class BitChain {
  public:
    BitChain() = default;

    explicit BitChain(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    static BitChain from_indices(std::size_t length,
                                 const std::vector<std::size_t>& idx) {
        BitChain c(length);
        for (std::size_t i : idx)
            c.flip(i);
        return c;
    }

    static BitChain from_indices(std::size_t length,
                                 std::initializer_list<std::size_t> idx) {
        return from_indices(length, std::vector<std::size_t>(idx));
    }

    /// Chain over the low `length` positions of a 64-bit mask.
    static BitChain from_mask(std::size_t length, std::uint64_t mask) {
        BitChain c(length);
        if (length > 0)
            c.words_[0] = (length >= 64) ? mask : (mask & ((1ULL << length) - 1));
        return c;
    }

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool v) {
        check_index(i);
        std::uint64_t m = 1ULL << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= 1ULL << (i & 63);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t x : words_)
            w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }

    bool any() const {
        for (std::uint64_t x : words_)
            if (x)
                return true;
        return false;
    }

    BitChain& operator^=(const BitChain& o) {
        if (o.length_ != length_)
            throw std::invalid_argument("BitChain xor: length mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }

    friend BitChain operator^(BitChain a, const BitChain& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitChain& o) const {
        return length_ == o.length_ && words_ == o.words_;
    }
    bool operator!=(const BitChain& o) const { return !(*this == o); }

    /// |a ∩ b| mod 2.
    static bool and_parity(const BitChain& a, const BitChain& b) {
        if (a.length_ != b.length_)
            throw std::invalid_argument("BitChain and_parity: length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            acc ^= a.words_[i] & b.words_[i];
        return std::popcount(acc) & 1;
    }

    /// |a ∩ b|.
    static std::size_t and_weight(const BitChain& a, const BitChain& b) {
        if (a.length_ != b.length_)
            throw std::invalid_argument("BitChain and_weight: length mismatch");
        std::size_t w = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            w += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return w;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(64 * w + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return 64 * w + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return length_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (get(i))
                s[i] = '1';
        return s;
    }

  private:
    void check_index(std::size_t i) const {
        if (i >= length_)
            throw std::out_of_range("BitChain index " + std::to_string(i) +
                                    " out of range for length " +
                                    std::to_string(length_));
    }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitChainHash {
    std::size_t operator()(const BitChain& c) const {
        std::size_t h = c.size() * 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : c.words())
            h = (h ^ w) * 0x100000001b3ULL;
        return h;
    }
};

} // namespace colexlab
