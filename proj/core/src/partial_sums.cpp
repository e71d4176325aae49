#include "approxrs/partial_sums.hpp"

#include <istream>
#include <ostream>

#include "approxrs/errors.hpp"
#include "approxrs/serialize.hpp"

namespace approxrs {

PartialSums PartialSums::from_values(const std::vector<uint64_t>& values, uint32_t alpha) {
    if (alpha < 1 || alpha > 64) throw ParameterError("PartialSums: alpha must be in [1,64]");
    PartialSums ps;
    ps.n_ = values.size();
    ps.alpha_ = alpha;
    ps.values_.reset(ps.n_, alpha);
    uint64_t maxv = alpha == 64 ? ~0ull : (1ull << alpha) - 1;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] > maxv) throw ValidationError("PartialSums: value exceeds alpha bits");
        ps.values_.set(i, values[i]);
    }
    uint64_t nsb = (ps.n_ + kSuperVals - 1) / kSuperVals;
    uint64_t nbl = (ps.n_ + kBlockVals - 1) / kBlockVals;
    ps.super_.assign(nsb + 1, 0);
    // Worst-case relative sum within a superblock bounds the packed width.
    uint32_t relw = alpha >= 52 ? 64
                                : std::max<uint32_t>(1, bits_for((kSuperVals - kBlockVals) * maxv));
    ps.blockrel_.reset(nbl + 1, relw);
    uint64_t acc = 0, sb_acc = 0;
    for (uint64_t b = 0; b <= nbl; ++b) {
        if (b % (kSuperVals / kBlockVals) == 0) {
            uint64_t s = b / (kSuperVals / kBlockVals);
            if (s <= nsb) ps.super_[s] = acc;
            sb_acc = acc;
        }
        ps.blockrel_.set(b, acc - sb_acc);
        if (b == nbl) break;
        uint64_t lim = std::min(ps.n_, (b + 1) * kBlockVals);
        for (uint64_t i = b * kBlockVals; i < lim; ++i) acc += ps.values_.get(i);
    }
    ps.super_[nsb] = acc;
    return ps;
}

uint64_t PartialSums::value(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("PartialSums::value: index out of range");
    return values_.get(i - 1);
}

uint64_t PartialSums::sum(uint64_t i) const {
    if (i > n_) throw RangeError("PartialSums::sum: index out of range");
    if (i == 0) return 0;
    uint64_t s = i / kSuperVals;
    uint64_t b = i / kBlockVals;
    uint64_t acc = super_[s] + blockrel_.get(b);
    for (uint64_t j = b * kBlockVals; j < i; ++j) acc += values_.get(j);
    return acc;
}

uint64_t PartialSums::search(uint64_t x) const {
    if (n_ == 0 || x >= total()) throw NotFoundError("PartialSums::search: x >= sum(n)");
    uint64_t nsb = super_.size() - 1;
    uint64_t lo = 0, hi = nsb ? nsb - 1 : 0;
    while (lo < hi) {  // largest superblock whose prefix <= x
        uint64_t mid = (lo + hi + 1) / 2;
        if (super_[mid] <= x) lo = mid; else hi = mid - 1;
    }
    uint64_t base = super_[lo];
    uint64_t b = lo * (kSuperVals / kBlockVals);
    uint64_t nbl = blockrel_.size() - 1;
    uint64_t last = std::min(b + kSuperVals / kBlockVals - 1, nbl ? nbl - 1 : 0);
    while (b < last && base + blockrel_.get(b + 1) <= x) ++b;
    uint64_t acc = base + blockrel_.get(b);
    uint64_t i = b * kBlockVals;
    for (;; ++i) {
        acc += values_.get(i);
        if (acc > x) return i + 1;
    }
}

uint64_t PartialSums::space_bits() const {
    return values_.space_bits() + super_.size() * 64 + blockrel_.space_bits();
}

void PartialSums::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u32(os, alpha_);
    io::write_vec_u64(os, values_.words());
}

PartialSums PartialSums::load(std::istream& is) {
    uint64_t n = io::read_u64(is);
    uint32_t alpha = io::read_u32(is);
    std::vector<uint64_t> words = io::read_vec_u64(is);
    std::vector<uint64_t> vals(n);
    PackedArray pa;
    pa.reset(n, alpha);
    pa.words() = std::move(words);
    pa.words().resize((n * alpha + 63) / 64 + 1, 0);
    for (uint64_t i = 0; i < n; ++i) vals[i] = pa.get(i);
    return from_values(vals, alpha);
}

}  // namespace approxrs
