#pragma once

#include <cstdint>
#include <vector>

#include "approxrs/bits.hpp"

namespace approxrs {

// Sliding window over a stream of integers in {0,...,ell}, exact suffix
// sums in constant time with constant-time pushes. Values are packed at
// ceil(lg(ell+1)) bits in a ring; two checkpoint rings (absolute cumulative
// sums per block, block-relative sums per sub-block) replace popcounts with
// bounded field scans.
class IntWindow {
public:
    IntWindow() = default;
    IntWindow(uint64_t n, uint64_t ell);

    uint64_t capacity() const { return n_; }
    uint64_t ell() const { return ell_; }
    uint32_t value_bits() const { return width_; }
    uint64_t pushed() const { return t_; }
    uint64_t window() const { return t_ < n_ ? t_ : n_; }
    uint64_t total_sum() const { return total_; }

    void push(uint64_t x);
    uint64_t ss(uint64_t i) const;
    uint64_t back(uint64_t k) const;  // value pushed k steps ago

    // Cumulative sum through stream time tau, valid within the window.
    uint64_t cumulative(uint64_t tau) const;

    uint64_t payload_bits() const { return n_ * width_; }
    uint64_t space_bits() const;

private:
    uint64_t n_ = 0;
    uint64_t ell_ = 1;
    uint32_t width_ = 1;
    uint64_t sub_vals_ = 128;    // values per sub-block checkpoint
    uint64_t block_vals_ = 1024; // values per block checkpoint (8 sub-blocks)
    uint32_t rel_bits_ = 16;
    uint64_t phys_ = 0;          // ring capacity in values
    uint64_t t_ = 0;
    uint64_t total_ = 0;
    uint64_t sc_ = 0;            // sum since last block boundary
    PackedArray ring_;
    std::vector<uint64_t> cum_block_;
    PackedArray cum_sub_;        // block-relative cumulative at sub-block boundaries
};

// Exact rational estimate produced by WindowSumSketch: value = num / 2^pow2.
struct SketchEstimate {
    __int128 num = 0;
    uint32_t pow2 = 0;

    double value() const;
    int64_t ceil_value() const;  // smallest integer >= value
    // Reduced fraction (num', den') with den' a power of two.
    void fraction(int64_t& out_num, uint64_t& out_den) const;
};

// Additive-delta suffix sums over integers in {0,...,ell}: arriving values
// are rounded onto the grid ell/2^b, summed in a running residue, and once
// per nu-sized chunk the residue is folded into an exact IntWindow as a
// multiple of the reduced error. Queries combine the residue, the inner
// exact sums and a weight correction for the partially covered oldest
// chunk, then subtract (reduced_error - 1/2) so the estimate never exceeds
// the true sum. All arithmetic is integer, in units of 2^-b.
//
// query(i).value() lies in (ss(i) - delta, ss(i)].
//
// When the reduced error collapses to <= 1 the sketch stores the window
// exactly instead.
class WindowSumSketch {
public:
    WindowSumSketch() = default;
    WindowSumSketch(uint64_t n, uint64_t ell, uint64_t delta);

    uint64_t capacity() const { return n_; }
    uint64_t ell() const { return ell_; }
    uint64_t delta() const { return delta_; }
    uint64_t pushed() const { return seen_; }
    uint64_t window() const { return seen_ < n_ ? seen_ : n_; }

    bool exact_mode() const { return exact_; }
    uint64_t chunk_size() const { return nu_; }
    uint64_t reduced_delta() const { return delta_tilde_; }
    uint32_t round_bits() const { return b_; }
    uint64_t inner_value_bound() const { return z_; }
    uint64_t inner_capacity() const { return s_cap_; }
    uint64_t chunk_offset() const { return o_; }
    unsigned __int128 residue_units() const { return r_; }
    // Distance kept between the estimate and the true sum, in 2^-b units.
    // Equals 2^(b-1) (a half) when ell divides 2^b, smaller otherwise.
    uint64_t margin_units() const { return h_; }
    const IntWindow& inner() const { return inner_; }

    void add(uint64_t x);
    SketchEstimate query(uint64_t i) const;

    uint64_t space_bits() const;

private:
    uint64_t n_ = 0;
    uint64_t ell_ = 1;
    uint64_t delta_ = 1;
    bool exact_ = false;
    uint64_t nu_ = 1;           // chunk size
    uint64_t delta_tilde_ = 1;  // reduced error
    uint32_t b_ = 1;            // rounding bits
    uint64_t s_cap_ = 0;        // inner window capacity
    uint64_t z_ = 1;            // bound on inner values
    uint64_t seen_ = 0;
    uint64_t o_ = 0;            // offset within current chunk
    uint64_t h_ = 0;            // sound safety margin in units of 2^-b
    unsigned __int128 r_ = 0;   // residue in units of 2^-b
    unsigned __int128 dtu_ = 0; // reduced error in units of 2^-b
    IntWindow inner_;
};

}  // namespace approxrs
