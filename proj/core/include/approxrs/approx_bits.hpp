#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "approxrs/bit_vector.hpp"
#include "approxrs/partial_sums.hpp"
#include "approxrs/sparse_bit_vector.hpp"

namespace approxrs {

enum class Backing : uint8_t { Auto = 0, Plain = 1, Sparse = 2 };

// Approximate rank/select over a static bit-string with additive error
// delta, from one mark bit per delta-sized block: block k is marked iff it
// holds a one whose rank is a multiple of delta.
//
// rank_est(i)   in (rank(i) - delta, rank(i)]
// select_est(i) in (select(i-delta), select(i)]
//
// Space is one bit per block plus directories; with the sparse backing the
// marks are position-coded, which pays off when ones are rare.
class MarkRankSelect {
public:
    MarkRankSelect() = default;

    static MarkRankSelect build(const std::vector<uint8_t>& bits, uint64_t delta,
                                Backing mode = Backing::Auto);

    uint64_t size() const { return n_; }
    uint64_t delta() const { return delta_; }
    uint64_t ones() const { return m_; }
    uint64_t blocks() const { return (n_ + delta_ - 1) / delta_; }
    uint64_t marks() const;
    bool sparse_backed() const { return sparse_mode_; }
    bool mark_at(uint64_t block) const;  // 1-based block index

    uint64_t rank_est(uint64_t i) const;
    uint64_t select_est(uint64_t i) const;

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static MarkRankSelect load(std::istream& is);

private:
    uint64_t mark_rank(uint64_t k) const;    // marks among blocks 1..k
    uint64_t mark_select(uint64_t j) const;  // block of the j-th mark

    uint64_t n_ = 0;
    uint64_t delta_ = 1;
    uint64_t m_ = 0;
    bool sparse_mode_ = false;
    BitVector plain_;
    SparseBitVector sparse_;
};

// Approximate rank/select from exact per-block popcounts (searchable
// partial sums over ceil(n/delta) counts of width ceil(lg(delta+1))).
//
// rank_est(i)   = rank at the block boundary within delta below i
// select_est(i) in (select(i) - delta, select(i)]
class CountRankSelect {
public:
    CountRankSelect() = default;

    static CountRankSelect build(const std::vector<uint8_t>& bits, uint64_t delta);

    uint64_t size() const { return n_; }
    uint64_t delta() const { return delta_; }
    uint64_t ones() const { return counts_.total(); }
    const PartialSums& counts() const { return counts_; }

    uint64_t rank_est(uint64_t i) const;
    uint64_t select_est(uint64_t i) const;

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static CountRankSelect load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint64_t delta_ = 1;
    PartialSums counts_;
};

}  // namespace approxrs
