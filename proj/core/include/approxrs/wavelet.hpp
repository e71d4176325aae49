#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "approxrs/bit_vector.hpp"

namespace approxrs {

// Levelwise wavelet decomposition of a sequence over alphabet 0..sigma.
// rank/select/access for every symbol in ceil(lg(sigma+1)) bit-vector
// operations. Positions are 1-based as everywhere else.
class WaveletMatrix {
public:
    WaveletMatrix() = default;

    static WaveletMatrix build(const std::vector<uint32_t>& seq, uint32_t max_symbol);

    uint64_t size() const { return n_; }
    uint32_t max_symbol() const { return max_symbol_; }
    uint32_t levels() const { return static_cast<uint32_t>(levels_.size()); }

    uint32_t access(uint64_t i) const;
    uint64_t rank(uint32_t sym, uint64_t i) const;
    uint64_t select(uint32_t sym, uint64_t k) const;
    uint64_t count(uint32_t sym) const { return n_ ? rank(sym, n_) : 0; }

    uint64_t space_bits() const;

    void save(std::ostream& os) const;
    static WaveletMatrix load(std::istream& is);

private:
    uint64_t n_ = 0;
    uint32_t max_symbol_ = 0;
    std::vector<BitVector> levels_;
    std::vector<uint64_t> zeros_;  // count of zeros per level
};

}  // namespace approxrs
