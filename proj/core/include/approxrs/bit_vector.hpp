#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "approxrs/bits.hpp"
#include "approxrs/errors.hpp"

namespace approxrs {

// Static bit vector with exact rank/select over 1-based positions.
//
// rank(b, i)   = number of b's in positions 1..i, 0 <= i <= n.
// select(b, i) = position of the i-th b, 1 <= i <= rank(b, n).
//
// Directory: absolute popcounts at 4096-bit superblocks, 16-bit relative
// popcounts at 256-bit blocks, hardware popcount inside a block. Select is
// guided by sampled positions of every 8192-th one/zero, then a binary
// search over superblocks. Immutable after build.
class BitVector {
public:
    static constexpr uint64_t kSuperBits = 4096;
    static constexpr uint64_t kBlockBits = 256;
    static constexpr uint64_t kSelectSample = 8192;

    BitVector() = default;

    static BitVector from_bits(const std::vector<uint8_t>& bits);
    static BitVector from_packed(std::vector<uint64_t> words, uint64_t n);

    uint64_t size() const { return n_; }
    uint64_t count(bool b) const { return b ? ones_ : n_ - ones_; }

    // Bit at 1-based position i.
    bool access(uint64_t i) const;

    uint64_t rank(bool b, uint64_t i) const;
    uint64_t select(bool b, uint64_t i) const;

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static BitVector load(std::istream& is);

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void build_directories();
    // Ones in 0-based [0, pos).
    uint64_t rank_prefix(uint64_t pos) const;
    // Count of b before superblock s.
    uint64_t super_prefix(bool b, uint64_t s) const;

    uint64_t n_ = 0;
    uint64_t ones_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint64_t> super_;   // ones before each superblock, plus total
    std::vector<uint16_t> block_;   // ones from superblock start to block start
    std::vector<uint64_t> samples1_;
    std::vector<uint64_t> samples0_;
};

}  // namespace approxrs
