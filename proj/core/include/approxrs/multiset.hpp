#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "approxrs/approx_bits.hpp"
#include "approxrs/partial_sums.hpp"
#include "approxrs/sparse_bit_vector.hpp"

namespace approxrs {

// Multisets over the universe 1..n are canonically a frequency array.
// Input may also be (element, count) pairs; both normalize here.
std::vector<uint64_t> normalize_multiset(uint64_t n,
                                         const std::vector<std::pair<uint64_t, uint64_t>>& pairs);

// Approximate rank/select over a multiset of fixed cardinality m: the
// unary characteristic vector keeps only every (j*delta)-th one, stored
// position-coded next to all n zeros.
//
// rank_est(i)   in (rank(i) - delta, rank(i)]           (value error)
// select_est(i) = select(i') for some i' in (i-delta, i] (rank-argument error)
class MultisetMarked {
public:
    MultisetMarked() = default;

    static MultisetMarked build(const std::vector<uint64_t>& freqs, uint64_t delta);

    uint64_t universe() const { return n_; }
    uint64_t cardinality() const { return m_; }
    uint64_t delta() const { return delta_; }
    const SparseBitVector& marks() const { return bps_; }

    uint64_t rank_est(uint64_t i) const;
    uint64_t select_est(uint64_t i) const;

    uint64_t space_bits() const;
    void save(std::ostream& os) const;
    static MultisetMarked load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint64_t m_ = 0;
    uint64_t delta_ = 1;
    SparseBitVector bps_;  // kept ones + all zeros of the characteristic vector
};

// Approximate rank/select from per-block zero/one counts of the
// characteristic vector (blocks of delta positions).
//
// rank_est(i)   = rank at an element within delta below i
// select_est(i) in (select(i) - delta, select(i)]
class MultisetCounts {
public:
    MultisetCounts() = default;

    static MultisetCounts build(const std::vector<uint64_t>& freqs, uint64_t delta);

    uint64_t universe() const { return n_; }
    uint64_t cardinality() const { return m_; }
    uint64_t delta() const { return delta_; }
    const PartialSums& zero_counts() const { return zeros_; }
    const PartialSums& one_counts() const { return ones_; }

    uint64_t rank_est(uint64_t i) const;
    uint64_t select_est(uint64_t i) const;

    uint64_t space_bits() const;
    void save(std::ostream& os) const;
    static MultisetCounts load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint64_t m_ = 0;
    uint64_t delta_ = 1;
    PartialSums zeros_;  // per-block zero counts of the characteristic vector
    PartialSums ones_;   // per-block one counts
};

// Approximate rank/select when every element frequency is at most ell.
// For delta <= ell this is the marked structure above; for delta > ell the
// universe is cut into spans of mu = floor(delta/ell) elements and one mark
// bit per span records whether it holds a kept one (a second, finer-grained
// vector with mu' = max(floor(delta/2ell), 1) serves select).
//
// rank_est(i)   in (rank(i) - delta, rank(i)]
// select_est(i) in (select(i-delta) - mu', select(i)]  (span slack on the
//                low side; see select_mu())
class MultisetBounded {
public:
    MultisetBounded() = default;

    static MultisetBounded build(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t ell,
                                 bool with_rank = true, bool with_select = true);

    uint64_t universe() const { return n_; }
    uint64_t cardinality() const { return m_; }
    uint64_t delta() const { return delta_; }
    uint64_t ell() const { return ell_; }
    bool dense_mode() const { return dense_; }
    uint64_t rank_mu() const { return mu_rank_; }
    uint64_t select_mu() const { return mu_sel_; }

    uint64_t rank_est(uint64_t i) const;
    uint64_t select_est(uint64_t i) const;

    uint64_t space_bits() const;
    void save(std::ostream& os) const;
    static MultisetBounded load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint64_t m_ = 0;
    uint64_t delta_ = 1;
    uint64_t ell_ = 1;
    bool dense_ = true;
    bool with_rank_ = true;
    bool with_select_ = true;
    uint64_t mu_rank_ = 1;
    uint64_t mu_sel_ = 1;
    MultisetMarked dense_inner_;
    BitVector span_rank_;  // one mark bit per mu_rank-element span
    BitVector span_sel_;   // one mark bit per mu_sel-element span
};

}  // namespace approxrs
