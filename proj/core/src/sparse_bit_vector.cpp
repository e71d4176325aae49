#include "approxrs/sparse_bit_vector.hpp"

#include <istream>
#include <ostream>

#include "approxrs/serialize.hpp"

namespace approxrs {

SparseBitVector SparseBitVector::from_positions(uint64_t n, const std::vector<uint64_t>& positions) {
    SparseBitVector sv;
    sv.n_ = n;
    sv.m_ = positions.size();
    uint64_t prev = 0;
    for (uint64_t p : positions) {
        if (p < 1 || p > n) throw ValidationError("SparseBitVector: position out of range");
        if (p <= prev) throw ValidationError("SparseBitVector: positions must be strictly increasing");
        prev = p;
    }
    uint64_t m = sv.m_;
    if (m == 0) {
        sv.low_bits_ = 0;
        sv.high_ = BitVector::from_bits({});
        return sv;
    }
    uint64_t ratio = n / m;
    sv.low_bits_ = ratio >= 2 ? bits_for(ratio) - 1 : 0;
    uint32_t L = sv.low_bits_;
    sv.low_.reset(m, L == 0 ? 1 : L);
    uint64_t max_high = (n - 1) >> L;
    std::vector<uint8_t> high(m + max_high + 1, 0);
    for (uint64_t i = 0; i < m; ++i) {
        uint64_t v = positions[i] - 1;
        sv.low_.set(i, L == 0 ? 0 : (v & ((1ull << L) - 1)));
        high[(v >> L) + i] = 1;
    }
    sv.high_ = BitVector::from_bits(high);
    return sv;
}

uint64_t SparseBitVector::position(uint64_t i) const {
    uint64_t ph = high_.select(true, i);          // 1-based
    uint64_t h = ph - i;                          // 0-based high value
    uint64_t lo = low_bits_ == 0 ? 0 : low_.get(i - 1);
    return (h << low_bits_ | lo) + 1;
}

uint64_t SparseBitVector::rank1(uint64_t i) const {
    if (m_ == 0 || i == 0) return 0;
    uint64_t x = i - 1;
    uint64_t hb = x >> low_bits_;
    uint64_t begin = hb == 0 ? 0 : high_.select(false, hb) - hb;
    uint64_t zeros = high_.count(false);
    uint64_t end = hb + 1 <= zeros ? high_.select(false, hb + 1) - (hb + 1) : m_;
    if (low_bits_ == 0) return end;  // whole bucket has value hb <= x
    uint64_t xlow = x & ((1ull << low_bits_) - 1);
    uint64_t lo = begin, hi = end;
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (low_.get(mid) <= xlow) lo = mid + 1; else hi = mid;
    }
    return lo;
}

bool SparseBitVector::access(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("SparseBitVector::access: position out of range");
    return rank1(i) - rank1(i - 1) == 1;
}

uint64_t SparseBitVector::rank(bool b, uint64_t i) const {
    if (i > n_) throw RangeError("SparseBitVector::rank: position out of range");
    uint64_t r1 = rank1(i);
    return b ? r1 : i - r1;
}

uint64_t SparseBitVector::select(bool b, uint64_t i) const {
    if (i < 1 || i > count(b)) throw NotFoundError("SparseBitVector::select: no such occurrence");
    if (b) return position(i);
    // k = ones strictly before the i-th zero; positions are monotone, so
    // "one t precedes the i-th zero" <=> position(t) - t < i.
    uint64_t lo = 0, hi = m_;
    while (lo < hi) {
        uint64_t mid = (lo + hi + 1) / 2;
        if (position(mid) - mid < i) lo = mid; else hi = mid - 1;
    }
    return i + lo;
}

uint64_t SparseBitVector::space_bits() const {
    return (m_ ? low_.space_bits() : 0) + high_.space_bits() + 3 * 64;
}

void SparseBitVector::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u64(os, m_);
    for (uint64_t i = 1; i <= m_; ++i) io::write_u64(os, position(i));
}

SparseBitVector SparseBitVector::load(std::istream& is) {
    uint64_t n = io::read_u64(is);
    uint64_t m = io::read_u64(is);
    std::vector<uint64_t> pos(m);
    for (auto& p : pos) p = io::read_u64(is);
    return from_positions(n, pos);
}

}  // namespace approxrs
