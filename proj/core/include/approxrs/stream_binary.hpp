#pragma once

#include <cstdint>
#include <vector>

#include "approxrs/bits.hpp"

namespace approxrs {

// Sliding window over a binary stream, exact suffix sums.
//
// push(b)  O(1): ring write plus checkpoint maintenance.
// ss(i)    exact sum of the last i bits, 1 <= i <= min(n, pushed).
// iss(i)   smallest j with ss(j) >= i; binary search over the cumulative
//          checkpoints (O(lg n), push stays constant).
//
// The ring is sized up to a whole number of blocks plus one spare block so
// checkpoint slots for the oldest queryable position are never overwritten
// mid-read. Before n elements arrive, the window is the whole history.
class BinaryWindow {
public:
    BinaryWindow() = default;
    explicit BinaryWindow(uint64_t n);

    uint64_t capacity() const { return n_; }
    uint64_t pushed() const { return t_; }
    uint64_t window() const { return t_ < n_ ? t_ : n_; }
    uint64_t total_ones() const { return total_; }

    void push(bool bit);

    uint64_t ss(uint64_t i) const;
    uint64_t iss(uint64_t i) const;

    // Bit pushed k steps ago, 1 <= k <= window().
    bool back(uint64_t k) const;
    // Cumulative ones through stream time tau, valid for tau in
    // [pushed() - window(), pushed()].
    uint64_t cumulative(uint64_t tau) const;

    uint64_t space_bits() const;

private:
    uint64_t n_ = 0;        // declared window capacity
    uint64_t phys_ = 0;     // ring size in bits, multiple of block_
    uint64_t block_ = 512;  // checkpoint block size in bits
    uint64_t t_ = 0;        // stream time
    uint64_t total_ = 0;    // ones ever pushed
    uint64_t sc_ = 0;       // ones since last block boundary
    std::vector<uint64_t> ring_;
    std::vector<uint64_t> cum_block_;  // absolute cumulative at block boundaries
    std::vector<uint16_t> cum_word_;   // block-relative cumulative at word boundaries
};

// Additive-delta suffix sums over a binary stream from one virtual bit per
// delta-sized chunk: the bit is set iff the chunk holds a one whose
// frame-relative rank is a multiple of delta. The virtual bits live in a
// BinaryWindow of ceil(n/delta) chunks; O(lg n) counters track the current
// frame and chunk.
//
// ss_est(i)  in (ss(i) - delta, ss(i)]; may be negative when the window is
//            nearly empty. Returns 0 for i < delta.
// iss_est(i) in (iss(i-delta), iss(i)]; binary search over the monotone
//            cumulative estimator (O(lg n); push stays constant).
class BinaryWindowApprox {
public:
    BinaryWindowApprox() = default;
    BinaryWindowApprox(uint64_t n, uint64_t delta);

    uint64_t capacity() const { return n_; }
    uint64_t delta() const { return delta_; }
    uint64_t pushed() const { return seen_; }
    uint64_t window() const { return seen_ < n_ ? seen_ : n_; }
    uint64_t chunk_capacity() const { return chunks_per_frame_; }
    const BinaryWindow& virtual_stream() const { return inner_; }
    uint64_t frame_ones() const { return c_; }
    uint64_t chunk_ones() const { return tc_; }
    uint64_t frame_offset() const { return t_; }

    void push(bool bit);

    int64_t ss_est(uint64_t i) const;
    uint64_t iss_est(uint64_t i) const;

    uint64_t space_bits() const;

private:
    // Over-estimate, within delta-1, of the cumulative ones through stream
    // time s; monotone in s.
    uint64_t est_cumulative(uint64_t s) const;
    int64_t ss_raw(uint64_t i) const;
    uint64_t inner_ss(uint64_t k) const { return k ? inner_.ss(k) : 0; }

    uint64_t n_ = 0;
    uint64_t delta_ = 1;
    uint64_t chunks_per_frame_ = 0;
    BinaryWindow inner_;
    uint64_t seen_ = 0;
    uint64_t t_ = 0;        // index within current frame, 0..n-1
    uint64_t c_ = 0;        // ones in current frame
    uint64_t tc_ = 0;       // ones in current chunk
    uint64_t cc_ = 0;       // completed chunks in current frame
    uint64_t cf_base_ = 0;  // cumulative ones at current frame start
    uint64_t pf_base_ = 0;  // cumulative ones at previous frame start
    uint64_t c_prev_ = 0;   // total ones in previous frame
};

}  // namespace approxrs
