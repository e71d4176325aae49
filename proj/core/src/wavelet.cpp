#include "approxrs/wavelet.hpp"

#include <istream>
#include <ostream>

#include "approxrs/errors.hpp"
#include "approxrs/serialize.hpp"

namespace approxrs {

WaveletMatrix WaveletMatrix::build(const std::vector<uint32_t>& seq, uint32_t max_symbol) {
    WaveletMatrix wm;
    wm.n_ = seq.size();
    wm.max_symbol_ = max_symbol;
    uint32_t nlev = std::max<uint32_t>(1, bits_for(max_symbol));
    for (uint32_t s : seq) {
        if (s > max_symbol) throw ValidationError("WaveletMatrix: symbol out of alphabet");
    }
    std::vector<uint32_t> cur = seq;
    std::vector<uint32_t> next(cur.size());
    wm.levels_.reserve(nlev);
    wm.zeros_.reserve(nlev);
    for (uint32_t l = 0; l < nlev; ++l) {
        uint32_t shift = nlev - 1 - l;
        std::vector<uint8_t> bits(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) bits[i] = (cur[i] >> shift) & 1;
        wm.levels_.push_back(BitVector::from_bits(bits));
        size_t lo = 0;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (!bits[i]) next[lo++] = cur[i];
        }
        wm.zeros_.push_back(lo);
        for (size_t i = 0; i < cur.size(); ++i) {
            if (bits[i]) next[lo++] = cur[i];
        }
        cur.swap(next);
    }
    return wm;
}

uint32_t WaveletMatrix::access(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("WaveletMatrix::access: position out of range");
    uint64_t pos = i - 1;
    uint32_t sym = 0;
    for (size_t l = 0; l < levels_.size(); ++l) {
        bool b = levels_[l].access(pos + 1);
        sym = (sym << 1) | b;
        pos = b ? zeros_[l] + levels_[l].rank(true, pos) : levels_[l].rank(false, pos);
    }
    return sym;
}

uint64_t WaveletMatrix::rank(uint32_t sym, uint64_t i) const {
    if (i > n_) throw RangeError("WaveletMatrix::rank: position out of range");
    if (sym > max_symbol_ || i == 0) return 0;
    uint64_t lo = 0, hi = i;
    uint32_t nlev = levels();
    for (uint32_t l = 0; l < nlev; ++l) {
        bool b = (sym >> (nlev - 1 - l)) & 1;
        if (b) {
            lo = zeros_[l] + levels_[l].rank(true, lo);
            hi = zeros_[l] + levels_[l].rank(true, hi);
        } else {
            lo = levels_[l].rank(false, lo);
            hi = levels_[l].rank(false, hi);
        }
    }
    return hi - lo;
}

uint64_t WaveletMatrix::select(uint32_t sym, uint64_t k) const {
    if (k < 1 || sym > max_symbol_ || k > count(sym))
        throw NotFoundError("WaveletMatrix::select: no such occurrence");
    uint32_t nlev = levels();
    uint64_t lo = 0;
    for (uint32_t l = 0; l < nlev; ++l) {
        bool b = (sym >> (nlev - 1 - l)) & 1;
        lo = b ? zeros_[l] + levels_[l].rank(true, lo) : levels_[l].rank(false, lo);
    }
    uint64_t pos = lo + k - 1;  // 0-based slot at the bottom level
    for (uint32_t l = nlev; l-- > 0;) {
        bool b = (sym >> (nlev - 1 - l)) & 1;
        pos = b ? levels_[l].select(true, pos - zeros_[l] + 1) - 1
                : levels_[l].select(false, pos + 1) - 1;
    }
    return pos + 1;
}

uint64_t WaveletMatrix::space_bits() const {
    uint64_t b = 2 * 64 + zeros_.size() * 64;
    for (const auto& lvl : levels_) b += lvl.space_bits();
    return b;
}

void WaveletMatrix::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u32(os, max_symbol_);
    std::vector<uint32_t> seq(n_);
    for (uint64_t i = 1; i <= n_; ++i) seq[i - 1] = access(i);
    for (uint32_t s : seq) io::write_u32(os, s);
}

WaveletMatrix WaveletMatrix::load(std::istream& is) {
    uint64_t n = io::read_u64(is);
    uint32_t maxsym = io::read_u32(is);
    std::vector<uint32_t> seq(n);
    for (auto& s : seq) s = io::read_u32(is);
    return build(seq, maxsym);
}

}  // namespace approxrs
