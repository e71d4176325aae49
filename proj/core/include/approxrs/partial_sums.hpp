#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "approxrs/bits.hpp"

namespace approxrs {

// Searchable prefix sums over n packed alpha-bit non-negative integers.
//
// sum(i)    = A[1] + ... + A[i], 0 <= i <= n (exact).
// search(x) = smallest i with sum(i) > x, 0 <= x < sum(n).
//
// Directory: absolute sums at 4096-value superblocks, packed relative sums
// at 64-value blocks. search descends by binary search over superblocks,
// then a linear scan over at most 64 blocks and 64 values. Static.
class PartialSums {
public:
    static constexpr uint64_t kBlockVals = 64;
    static constexpr uint64_t kSuperVals = 4096;

    PartialSums() = default;

    // All values must fit in alpha bits.
    static PartialSums from_values(const std::vector<uint64_t>& values, uint32_t alpha);

    uint64_t size() const { return n_; }
    uint32_t alpha() const { return alpha_; }
    uint64_t total() const { return n_ ? super_.back() : 0; }
    uint64_t value(uint64_t i) const;  // 1-based access

    uint64_t sum(uint64_t i) const;
    uint64_t search(uint64_t x) const;

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static PartialSums load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint32_t alpha_ = 1;
    PackedArray values_;
    std::vector<uint64_t> super_;  // absolute prefix sum at each superblock start, plus total
    PackedArray blockrel_;         // prefix sum from superblock start to block start
};

}  // namespace approxrs
