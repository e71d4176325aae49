#include "approxrs/sequence.hpp"

#include <istream>
#include <ostream>

#include "approxrs/errors.hpp"
#include "approxrs/serialize.hpp"

namespace approxrs {

ApproxSequence ApproxSequence::build(const std::vector<uint32_t>& seq, uint32_t sigma,
                                     uint64_t delta) {
    uint64_t n = seq.size();
    if (n < 1) throw ParameterError("ApproxSequence: empty input");
    if (sigma < 1) throw ParameterError("ApproxSequence: sigma must be >= 1");
    if (delta < 1 || delta > n) throw ParameterError("ApproxSequence: delta must be in [1, n]");
    for (uint32_t s : seq) {
        if (s < 1 || s > sigma) throw ValidationError("ApproxSequence: symbol out of alphabet");
    }
    ApproxSequence a;
    a.n_ = n;
    a.sigma_ = sigma;
    a.delta_ = delta;

    std::vector<uint64_t> occ(sigma + 1, 0);
    std::vector<uint32_t> reduced;
    reduced.reserve(n / delta * 2 + 2);
    for (uint64_t p = 0; p < n; ++p) {
        uint32_t s = seq[p];
        if (++occ[s] % delta == 0) reduced.push_back(s);
        if ((p + 1) % delta == 0 || p + 1 == n) reduced.push_back(0);  // block sentinel
    }
    a.counts_.reset(sigma + 1, std::max<uint32_t>(1, bits_for(n)));
    for (uint32_t s = 1; s <= sigma; ++s) a.counts_.set(s, occ[s]);
    a.reduced_ = WaveletMatrix::build(reduced, sigma);
    return a;
}

uint64_t ApproxSequence::symbol_count(uint32_t sym) const {
    if (sym < 1 || sym > sigma_) throw RangeError("ApproxSequence: symbol out of alphabet");
    return counts_.get(sym);
}

uint64_t ApproxSequence::rank_est(uint32_t sym, uint64_t i) const {
    if (sym < 1 || sym > sigma_) throw RangeError("ApproxSequence::rank_est: bad symbol");
    if (i < 1 || i > n_) throw RangeError("ApproxSequence::rank_est: position out of range");
    uint64_t q = i / delta_;
    uint64_t r = i % delta_;
    uint64_t v = 0;
    uint64_t d0 = 0;
    if (q > 0) {
        d0 = reduced_.select(0, q);  // position of the q-th sentinel
        v = delta_ * reduced_.rank(sym, d0);
    }
    if (r) {
        uint64_t d1 = reduced_.select(0, q + 1);
        if (reduced_.rank(sym, d1) > reduced_.rank(sym, d0)) v += r;  // block q+1 kept a sym
    }
    return v;
}

uint64_t ApproxSequence::select_est(uint32_t sym, uint64_t i) const {
    if (sym < 1 || sym > sigma_) throw RangeError("ApproxSequence::select_est: bad symbol");
    if (i < 1 || i > counts_.get(sym))
        throw NotFoundError("ApproxSequence::select_est: no such occurrence");
    uint64_t q = i / delta_;
    uint64_t r = i % delta_;
    if (q == 0) return i;
    uint64_t pos = reduced_.select(sym, q);          // the (q*delta)-th original occurrence
    uint64_t block = reduced_.rank(0, pos) + 1;      // sentinel count before it
    return delta_ * (block - 1) + r + 1;
}

uint64_t ApproxSequence::space_bits() const {
    return reduced_.space_bits() + counts_.space_bits() + 3 * 64;
}

void ApproxSequence::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u32(os, sigma_);
    io::write_u64(os, delta_);
    for (uint32_t s = 1; s <= sigma_; ++s) io::write_u64(os, counts_.get(s));
    reduced_.save(os);
}

ApproxSequence ApproxSequence::load(std::istream& is) {
    ApproxSequence a;
    a.n_ = io::read_u64(is);
    a.sigma_ = io::read_u32(is);
    a.delta_ = io::read_u64(is);
    a.counts_.reset(a.sigma_ + 1, std::max<uint32_t>(1, bits_for(a.n_)));
    for (uint32_t s = 1; s <= a.sigma_; ++s) a.counts_.set(s, io::read_u64(is));
    a.reduced_ = WaveletMatrix::load(is);
    return a;
}

}  // namespace approxrs
