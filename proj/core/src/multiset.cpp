#include "approxrs/multiset.hpp"

#include <istream>
#include <ostream>

#include "approxrs/errors.hpp"
#include "approxrs/serialize.hpp"

namespace approxrs {

std::vector<uint64_t> normalize_multiset(uint64_t n,
                                         const std::vector<std::pair<uint64_t, uint64_t>>& pairs) {
    std::vector<uint64_t> freqs(n, 0);
    for (auto [e, c] : pairs) {
        if (e < 1 || e > n) throw ValidationError("multiset: element outside universe");
        freqs[e - 1] += c;
    }
    return freqs;
}

namespace {

// Elements (1-based) of the kept ones: every (j*delta)-th one of the
// multiset in sorted order.
std::vector<uint64_t> kept_one_elements(const std::vector<uint64_t>& freqs, uint64_t delta) {
    std::vector<uint64_t> kept;
    uint64_t c = 0;
    for (uint64_t e = 0; e < freqs.size(); ++e) {
        uint64_t f = freqs[e];
        if (f == 0) continue;
        // ranks c+1 .. c+f live at element e+1; multiples of delta in (c, c+f]
        uint64_t first = (c / delta + 1) * delta;
        for (uint64_t r = first; r <= c + f; r += delta) kept.push_back(e + 1);
        c += f;
    }
    return kept;
}

}  // namespace

MultisetMarked MultisetMarked::build(const std::vector<uint64_t>& freqs, uint64_t delta) {
    if (delta < 1) throw ParameterError("MultisetMarked: delta must be >= 1");
    if (freqs.empty()) throw ParameterError("MultisetMarked: empty universe");
    MultisetMarked s;
    s.n_ = freqs.size();
    s.delta_ = delta;

    // Emit the characteristic vector in order, keeping marked ones and all
    // zeros; record positions of the kept ones in the shrunken string.
    std::vector<uint64_t> one_positions;
    uint64_t pos = 0, c = 0;
    for (uint64_t e = 0; e < s.n_; ++e) {
        uint64_t f = freqs[e];
        uint64_t first = (c / delta + 1) * delta;
        for (uint64_t r = first; r <= c + f; r += delta) one_positions.push_back(++pos);
        c += f;
        ++pos;  // the element's terminating zero
    }
    s.m_ = c;
    s.bps_ = SparseBitVector::from_positions(pos, one_positions);
    return s;
}

uint64_t MultisetMarked::rank_est(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("MultisetMarked::rank_est: element out of range");
    return delta_ * (bps_.select(false, i) - i);
}

uint64_t MultisetMarked::select_est(uint64_t i) const {
    if (i < 1 || i > m_) throw NotFoundError("MultisetMarked::select_est: no such occurrence");
    uint64_t q = i / delta_;
    if (q == 0) return 1;
    return bps_.rank(false, bps_.select(true, q)) + 1;
}

uint64_t MultisetMarked::space_bits() const { return bps_.space_bits() + 3 * 64; }

void MultisetMarked::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u64(os, m_);
    io::write_u64(os, delta_);
    bps_.save(os);
}

MultisetMarked MultisetMarked::load(std::istream& is) {
    MultisetMarked s;
    s.n_ = io::read_u64(is);
    s.m_ = io::read_u64(is);
    s.delta_ = io::read_u64(is);
    s.bps_ = SparseBitVector::load(is);
    return s;
}

MultisetCounts MultisetCounts::build(const std::vector<uint64_t>& freqs, uint64_t delta) {
    if (delta < 1) throw ParameterError("MultisetCounts: delta must be >= 1");
    if (freqs.empty()) throw ParameterError("MultisetCounts: empty universe");
    MultisetCounts s;
    s.n_ = freqs.size();
    s.delta_ = delta;

    uint64_t m = 0;
    for (uint64_t f : freqs) m += f;
    s.m_ = m;
    uint64_t len = s.n_ + m;
    uint64_t nb = (len + delta - 1) / delta;
    std::vector<uint64_t> zc(nb, 0), oc(nb, 0);
    uint64_t pos = 0;
    for (uint64_t e = 0; e < s.n_; ++e) {
        for (uint64_t k = 0; k < freqs[e]; ++k) ++oc[pos++ / delta];
        ++zc[pos++ / delta];
    }
    uint32_t alpha = std::max<uint32_t>(1, bits_for(delta));
    s.zeros_ = PartialSums::from_values(zc, alpha);
    s.ones_ = PartialSums::from_values(oc, alpha);
    return s;
}

uint64_t MultisetCounts::rank_est(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("MultisetCounts::rank_est: element out of range");
    uint64_t j = zeros_.search(i - 1);  // block with the i-th zero
    return ones_.sum(j - 1);
}

uint64_t MultisetCounts::select_est(uint64_t i) const {
    if (i < 1 || i > m_) throw NotFoundError("MultisetCounts::select_est: no such occurrence");
    uint64_t k = ones_.search(i - 1);  // block with the i-th one
    return zeros_.sum(k - 1) + 1;
}

uint64_t MultisetCounts::space_bits() const {
    return zeros_.space_bits() + ones_.space_bits() + 3 * 64;
}

void MultisetCounts::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u64(os, m_);
    io::write_u64(os, delta_);
    zeros_.save(os);
    ones_.save(os);
}

MultisetCounts MultisetCounts::load(std::istream& is) {
    MultisetCounts s;
    s.n_ = io::read_u64(is);
    s.m_ = io::read_u64(is);
    s.delta_ = io::read_u64(is);
    s.zeros_ = PartialSums::load(is);
    s.ones_ = PartialSums::load(is);
    return s;
}

MultisetBounded MultisetBounded::build(const std::vector<uint64_t>& freqs, uint64_t delta,
                                       uint64_t ell, bool with_rank, bool with_select) {
    if (delta < 1) throw ParameterError("MultisetBounded: delta must be >= 1");
    if (ell < 1) throw ParameterError("MultisetBounded: ell must be >= 1");
    if (!with_rank && !with_select)
        throw ParameterError("MultisetBounded: must keep at least one query family");
    if (freqs.empty()) throw ParameterError("MultisetBounded: empty universe");
    for (uint64_t f : freqs) {
        if (f > ell) throw ValidationError("MultisetBounded: frequency exceeds ell");
    }
    MultisetBounded s;
    s.n_ = freqs.size();
    s.delta_ = delta;
    s.ell_ = ell;
    s.with_rank_ = with_rank;
    s.with_select_ = with_select;
    for (uint64_t f : freqs) s.m_ += f;
    s.dense_ = delta <= ell;
    if (s.dense_) {
        s.dense_inner_ = MultisetMarked::build(freqs, delta);
        return s;
    }
    s.mu_rank_ = delta / ell;
    s.mu_sel_ = std::max<uint64_t>(delta / (2 * ell), 1);
    auto kept = kept_one_elements(freqs, delta);
    auto make_spans = [&](uint64_t mu) {
        uint64_t ns = (s.n_ + mu - 1) / mu;
        std::vector<uint8_t> spans(ns, 0);
        for (uint64_t e : kept) {
            uint64_t k = (e - 1) / mu;
            if (spans[k]) throw ValidationError("MultisetBounded: span holds two kept ones");
            spans[k] = 1;
        }
        return BitVector::from_bits(spans);
    };
    if (with_rank) s.span_rank_ = make_spans(s.mu_rank_);
    if (with_select) s.span_sel_ = make_spans(s.mu_sel_);
    return s;
}

uint64_t MultisetBounded::rank_est(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("MultisetBounded::rank_est: element out of range");
    if (dense_) return dense_inner_.rank_est(i);
    if (!with_rank_) throw ParameterError("MultisetBounded: built without the rank structure");
    uint64_t mu = mu_rank_;
    uint64_t q = i / mu;
    uint64_t r = i % mu;
    uint64_t v = delta_ * span_rank_.rank(true, q);
    if (r && span_rank_.access(q + 1)) v += ell_ * r;
    return v;
}

uint64_t MultisetBounded::select_est(uint64_t i) const {
    if (i < 1 || i > m_) throw NotFoundError("MultisetBounded::select_est: no such occurrence");
    if (dense_) return dense_inner_.select_est(i);
    if (!with_select_) throw ParameterError("MultisetBounded: built without the select structure");
    uint64_t q = i / delta_;
    if (q == 0) return (i + ell_ - 1) / ell_;  // i ones span at least this many elements
    return mu_sel_ * (span_sel_.select(true, q) - 1) + 1;
}

uint64_t MultisetBounded::space_bits() const {
    if (dense_) return dense_inner_.space_bits() + 2 * 64;
    uint64_t b = 6 * 64;
    if (with_rank_) b += span_rank_.space_bits();
    if (with_select_) b += span_sel_.space_bits();
    return b;
}

void MultisetBounded::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_u64(os, m_);
    io::write_u64(os, delta_);
    io::write_u64(os, ell_);
    io::write_u16(os, static_cast<uint16_t>((dense_ ? 1 : 0) | (with_rank_ ? 2 : 0) |
                                            (with_select_ ? 4 : 0)));
    if (dense_) {
        dense_inner_.save(os);
    } else {
        if (with_rank_) span_rank_.save(os);
        if (with_select_) span_sel_.save(os);
    }
}

MultisetBounded MultisetBounded::load(std::istream& is) {
    MultisetBounded s;
    s.n_ = io::read_u64(is);
    s.m_ = io::read_u64(is);
    s.delta_ = io::read_u64(is);
    s.ell_ = io::read_u64(is);
    uint16_t flags = io::read_u16(is);
    s.dense_ = flags & 1;
    s.with_rank_ = flags & 2;
    s.with_select_ = flags & 4;
    s.mu_rank_ = s.delta_ / s.ell_;
    s.mu_sel_ = std::max<uint64_t>(s.delta_ / (2 * s.ell_), 1);
    if (s.dense_) {
        s.dense_inner_ = MultisetMarked::load(is);
    } else {
        if (s.with_rank_) s.span_rank_ = BitVector::load(is);
        if (s.with_select_) s.span_sel_ = BitVector::load(is);
    }
    return s;
}

}  // namespace approxrs
