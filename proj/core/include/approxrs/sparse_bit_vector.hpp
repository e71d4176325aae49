#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "approxrs/bit_vector.hpp"
#include "approxrs/bits.hpp"

namespace approxrs {

// Bit vector for m << n ones, stored as a monotone sequence of 1-based
// positions split into packed low bits and a unary-coded high part.
// Query contracts match BitVector. select1 costs one select on the high
// part; rank walks one high-part bucket; select0/rank0 derive from the
// monotone position sequence (binary search over at most lg m probes).
class SparseBitVector {
public:
    SparseBitVector() = default;

    // positions: strictly increasing, each in [1, n].
    static SparseBitVector from_positions(uint64_t n, const std::vector<uint64_t>& positions);

    uint64_t size() const { return n_; }
    uint64_t count(bool b) const { return b ? m_ : n_ - m_; }

    bool access(uint64_t i) const;
    uint64_t rank(bool b, uint64_t i) const;
    uint64_t select(bool b, uint64_t i) const;

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static SparseBitVector load(std::istream& is);

private:
    uint64_t position(uint64_t i) const;  // 1-based i-th one position
    uint64_t rank1(uint64_t i) const;

    uint64_t n_ = 0;
    uint64_t m_ = 0;
    uint32_t low_bits_ = 0;
    PackedArray low_;
    BitVector high_;
};

}  // namespace approxrs
