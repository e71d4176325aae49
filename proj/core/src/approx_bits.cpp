#include "approxrs/approx_bits.hpp"

#include <istream>
#include <ostream>

#include "approxrs/errors.hpp"
#include "approxrs/serialize.hpp"

namespace approxrs {

MarkRankSelect MarkRankSelect::build(const std::vector<uint8_t>& bits, uint64_t delta,
                                     Backing mode) {
    uint64_t n = bits.size();
    if (n < 1) throw ParameterError("MarkRankSelect: empty input");
    if (delta < 1 || delta > n) throw ParameterError("MarkRankSelect: delta must be in [1, n]");
    MarkRankSelect s;
    s.n_ = n;
    s.delta_ = delta;

    uint64_t nb = (n + delta - 1) / delta;
    std::vector<uint64_t> mark_blocks;  // 1-based indices of marked blocks
    uint64_t ones = 0;
    for (uint64_t p = 0; p < n; ++p) {
        if (!bits[p]) continue;
        ++ones;
        if (ones % delta == 0) mark_blocks.push_back(p / delta + 1);
    }
    s.m_ = ones;

    bool sparse = mode == Backing::Sparse ||
                  (mode == Backing::Auto && mark_blocks.size() * 8 <= nb);
    s.sparse_mode_ = sparse;
    if (sparse) {
        s.sparse_ = SparseBitVector::from_positions(nb, mark_blocks);
    } else {
        std::vector<uint8_t> bp(nb, 0);
        for (uint64_t b : mark_blocks) bp[b - 1] = 1;
        s.plain_ = BitVector::from_bits(bp);
    }
    return s;
}

uint64_t MarkRankSelect::marks() const {
    return sparse_mode_ ? sparse_.count(true) : plain_.count(true);
}

bool MarkRankSelect::mark_at(uint64_t block) const {
    return sparse_mode_ ? sparse_.access(block) : plain_.access(block);
}

uint64_t MarkRankSelect::mark_rank(uint64_t k) const {
    return sparse_mode_ ? sparse_.rank(true, k) : plain_.rank(true, k);
}

uint64_t MarkRankSelect::mark_select(uint64_t j) const {
    return sparse_mode_ ? sparse_.select(true, j) : plain_.select(true, j);
}

uint64_t MarkRankSelect::rank_est(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("MarkRankSelect::rank_est: position out of range");
    uint64_t q = i / delta_;
    uint64_t r = i % delta_;
    uint64_t v = delta_ * mark_rank(q);
    if (r && mark_at(q + 1)) v += r;
    return v;
}

uint64_t MarkRankSelect::select_est(uint64_t i) const {
    if (i < 1 || i > m_) throw NotFoundError("MarkRankSelect::select_est: no such occurrence");
    uint64_t q = i / delta_;
    uint64_t r = i % delta_;
    if (q == 0) return i;
    // Block k holds the (q*delta)-th one; any position in it is at most
    // select(i) and past select(i-delta). The +1 keeps the lower end strict
    // when the previous mark sits flush at a block boundary, and makes
    // delta=1 exact.
    return delta_ * (mark_select(q) - 1) + r + 1;
}

uint64_t MarkRankSelect::space_bits() const {
    return (sparse_mode_ ? sparse_.space_bits() : plain_.space_bits()) + 4 * 64;
}

void MarkRankSelect::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u64(os, delta_);
    io::write_u64(os, m_);
    io::write_u16(os, sparse_mode_ ? 1 : 0);
    if (sparse_mode_) sparse_.save(os); else plain_.save(os);
}

MarkRankSelect MarkRankSelect::load(std::istream& is) {
    MarkRankSelect s;
    s.n_ = io::read_u64(is);
    s.delta_ = io::read_u64(is);
    s.m_ = io::read_u64(is);
    s.sparse_mode_ = io::read_u16(is) != 0;
    if (s.sparse_mode_) s.sparse_ = SparseBitVector::load(is);
    else s.plain_ = BitVector::load(is);
    return s;
}

CountRankSelect CountRankSelect::build(const std::vector<uint8_t>& bits, uint64_t delta) {
    uint64_t n = bits.size();
    if (n < 1) throw ParameterError("CountRankSelect: empty input");
    if (delta < 1 || delta > n) throw ParameterError("CountRankSelect: delta must be in [1, n]");
    CountRankSelect s;
    s.n_ = n;
    s.delta_ = delta;
    uint64_t nb = (n + delta - 1) / delta;
    std::vector<uint64_t> counts(nb, 0);
    for (uint64_t p = 0; p < n; ++p) {
        if (bits[p]) ++counts[p / delta];
    }
    s.counts_ = PartialSums::from_values(counts, std::max<uint32_t>(1, bits_for(delta)));
    return s;
}

uint64_t CountRankSelect::rank_est(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("CountRankSelect::rank_est: position out of range");
    return counts_.sum(i / delta_);
}

uint64_t CountRankSelect::select_est(uint64_t i) const {
    if (i < 1 || i > counts_.total())
        throw NotFoundError("CountRankSelect::select_est: no such occurrence");
    uint64_t k = counts_.search(i - 1);  // block holding the i-th one
    return (k - 1) * delta_ + 1;
}

uint64_t CountRankSelect::space_bits() const { return counts_.space_bits() + 3 * 64; }

void CountRankSelect::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u64(os, delta_);
    counts_.save(os);
}

CountRankSelect CountRankSelect::load(std::istream& is) {
    CountRankSelect s;
    s.n_ = io::read_u64(is);
    s.delta_ = io::read_u64(is);
    s.counts_ = PartialSums::load(is);
    return s;
}

}  // namespace approxrs
