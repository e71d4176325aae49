#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "approxrs/errors.hpp"

namespace approxrs {

inline int popcount64(uint64_t w) { return std::popcount(w); }

// Number of bits needed to store v (0 -> 0).
inline uint32_t bits_for(uint64_t v) { return static_cast<uint32_t>(std::bit_width(v)); }

// Position (0-based) of the k-th set bit of w, k in [1, popcount(w)].
// Byte-stepping keeps it branch-light without lookup tables.
inline uint32_t select_in_word(uint64_t w, uint32_t k) {
    assert(k >= 1 && k <= static_cast<uint32_t>(popcount64(w)));
    uint32_t base = 0;
    for (;;) {
        uint32_t c = static_cast<uint32_t>(popcount64(w & 0xffu));
        if (k <= c) break;
        k -= c;
        w >>= 8;
        base += 8;
    }
    uint8_t b = static_cast<uint8_t>(w & 0xffu);
    while (--k) b = static_cast<uint8_t>(b & (b - 1));
    return base + static_cast<uint32_t>(std::countr_zero(static_cast<uint32_t>(b)));
}

// Flat array of fixed-width integers packed into 64-bit words.
class PackedArray {
public:
    PackedArray() = default;
    PackedArray(size_t n, uint32_t width) { reset(n, width); }

    void reset(size_t n, uint32_t width) {
        if (width < 1 || width > 64) throw ParameterError("PackedArray: width must be in [1,64]");
        n_ = n;
        width_ = width;
        words_.assign((n * width + 63) / 64 + 1, 0);
    }

    size_t size() const { return n_; }
    uint32_t width() const { return width_; }
    uint64_t max_value() const { return width_ == 64 ? ~0ull : (1ull << width_) - 1; }

    void set(size_t i, uint64_t v) {
        assert(i < n_);
        assert(width_ == 64 || v <= max_value());
        size_t bit = i * width_;
        size_t w = bit >> 6;
        uint32_t off = bit & 63;
        uint64_t mask = width_ == 64 ? ~0ull : ((1ull << width_) - 1);
        words_[w] = (words_[w] & ~(mask << off)) | (v << off);
        if (off + width_ > 64) {
            uint32_t hi = off + width_ - 64;
            words_[w + 1] = (words_[w + 1] & ~((1ull << hi) - 1)) | (v >> (64 - off));
        }
    }

    uint64_t get(size_t i) const {
        assert(i < n_);
        size_t bit = i * width_;
        size_t w = bit >> 6;
        uint32_t off = bit & 63;
        uint64_t v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return width_ == 64 ? v : v & ((1ull << width_) - 1);
    }

    uint64_t operator[](size_t i) const { return get(i); }

    size_t space_bits() const { return words_.size() * 64; }
    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    size_t n_ = 0;
    uint32_t width_ = 1;
    std::vector<uint64_t> words_;
};

}  // namespace approxrs
