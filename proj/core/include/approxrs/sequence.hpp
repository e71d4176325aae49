#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "approxrs/bits.hpp"
#include "approxrs/wavelet.hpp"

namespace approxrs {

// Per-symbol approximate rank/select over a string A[1..n] on alphabet
// 1..sigma with additive error delta. The string is cut into delta-sized
// blocks separated by a sentinel (symbol 0); only every (j*delta)-th
// occurrence of each symbol survives, and the shrunken string lives in a
// wavelet matrix.
//
// rank_est(sym, i)   in (rank_sym(i) - delta, rank_sym(i)]
// select_est(sym, i) in (select_sym(i-delta), select_sym(i)]
class ApproxSequence {
public:
    ApproxSequence() = default;

    static ApproxSequence build(const std::vector<uint32_t>& seq, uint32_t sigma, uint64_t delta);

    uint64_t size() const { return n_; }
    uint32_t sigma() const { return sigma_; }
    uint64_t delta() const { return delta_; }
    uint64_t symbol_count(uint32_t sym) const;
    uint64_t reduced_size() const { return reduced_.size(); }
    uint32_t reduced_symbol(uint64_t i) const { return reduced_.access(i); }

    uint64_t rank_est(uint32_t sym, uint64_t i) const;
    uint64_t select_est(uint32_t sym, uint64_t i) const;

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static ApproxSequence load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint32_t sigma_ = 1;
    uint64_t delta_ = 1;
    PackedArray counts_;   // original per-symbol occurrence counts
    WaveletMatrix reduced_;
};

}  // namespace approxrs
