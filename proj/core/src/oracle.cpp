#include "approxrs/oracle.hpp"

#include <sstream>

#include "approxrs/errors.hpp"

namespace approxrs::oracle {

uint64_t rank(const std::vector<uint8_t>& bits, bool b, uint64_t i) {
    if (i > bits.size()) throw RangeError("oracle::rank: position out of range");
    uint64_t c = 0;
    for (uint64_t j = 0; j < i; ++j) c += (bits[j] != 0) == b;
    return c;
}

uint64_t select(const std::vector<uint8_t>& bits, bool b, uint64_t i) {
    if (i >= 1) {
        uint64_t c = 0;
        for (uint64_t j = 0; j < bits.size(); ++j) {
            c += (bits[j] != 0) == b;
            if (c == i) return j + 1;
        }
    }
    throw NotFoundError("oracle::select: no such occurrence");
}

uint64_t ms_rank(const std::vector<uint64_t>& freqs, uint64_t i) {
    if (i > freqs.size()) throw RangeError("oracle::ms_rank: element out of range");
    uint64_t c = 0;
    for (uint64_t e = 0; e < i; ++e) c += freqs[e];
    return c;
}

uint64_t ms_select(const std::vector<uint64_t>& freqs, uint64_t i) {
    if (i >= 1) {
        uint64_t c = 0;
        for (uint64_t e = 0; e < freqs.size(); ++e) {
            c += freqs[e];
            if (c >= i) return e + 1;
        }
    }
    throw NotFoundError("oracle::ms_select: multiset has fewer elements");
}

uint64_t seq_rank(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t i) {
    if (i > seq.size()) throw RangeError("oracle::seq_rank: position out of range");
    uint64_t c = 0;
    for (uint64_t j = 0; j < i; ++j) c += seq[j] == sym;
    return c;
}

uint64_t seq_select(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t i) {
    if (i >= 1) {
        uint64_t c = 0;
        for (uint64_t j = 0; j < seq.size(); ++j) {
            if (seq[j] == sym && ++c == i) return j + 1;
        }
    }
    throw NotFoundError("oracle::seq_select: no such occurrence");
}

uint64_t ss(const std::vector<uint64_t>& history, uint64_t n, uint64_t i) {
    if (i < 1 || i > std::min<uint64_t>(n, history.size()))
        throw RangeError("oracle::ss: suffix length out of range");
    uint64_t s = 0;
    for (uint64_t j = history.size() - i; j < history.size(); ++j) s += history[j];
    return s;
}

uint64_t iss(const std::vector<uint64_t>& history, uint64_t n, uint64_t i) {
    uint64_t lim = std::min<uint64_t>(n, history.size());
    uint64_t s = 0;
    for (uint64_t j = 1; j <= lim; ++j) {
        s += history[history.size() - j];
        if (s >= i) return j;
    }
    throw NotFoundError("oracle::iss: fewer than i ones in window");
}

namespace {

Verdict fail(const char* what, uint64_t got, uint64_t lo, uint64_t hi) {
    std::ostringstream os;
    os << what << ": got " << got << ", valid (" << lo << ", " << hi << "]";
    return {false, os.str()};
}

}  // namespace

Verdict validate_drank(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t r) {
    uint64_t hi = rank(bits, true, i);
    uint64_t lo = hi >= delta ? hi - delta : 0;  // interval (hi-delta, hi]
    bool ok = (hi < delta || r > hi - delta) && r <= hi;
    return ok ? Verdict{true, {}} : fail("drank", r, lo, hi);
}

Verdict validate_rank(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t r) {
    uint64_t lo = rank(bits, true, i >= delta ? i - delta : 0);
    uint64_t hi = rank(bits, true, i);
    if (r >= lo && r <= hi) return {true, {}};
    return fail("rank", r, lo ? lo - 1 : 0, hi);
}

namespace {
uint64_t select_or_zero(const std::vector<uint8_t>& bits, uint64_t j) {
    if (j == 0) return 0;
    return select(bits, true, j);
}
}  // namespace

Verdict validate_select(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t p) {
    uint64_t lo = i > delta ? select_or_zero(bits, i - delta) : 0;
    uint64_t hi = select(bits, true, i);
    if (p > lo && p <= hi) return {true, {}};
    return fail("select", p, lo, hi);
}

Verdict validate_dselect(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t p) {
    uint64_t hi = select(bits, true, i);
    bool ok = (hi < delta || p > hi - delta) && p <= hi;
    return ok ? Verdict{true, {}} : fail("dselect", p, hi >= delta ? hi - delta : 0, hi);
}

Verdict validate_ms_drank(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t r) {
    uint64_t hi = ms_rank(freqs, i);
    bool ok = (hi < delta || r > hi - delta) && r <= hi;
    return ok ? Verdict{true, {}} : fail("ms_drank", r, hi >= delta ? hi - delta : 0, hi);
}

Verdict validate_ms_rank(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t r) {
    uint64_t lo = ms_rank(freqs, i >= delta ? i - delta : 0);
    uint64_t hi = ms_rank(freqs, i);
    if (r >= lo && r <= hi) return {true, {}};
    return fail("ms_rank", r, lo ? lo - 1 : 0, hi);
}

Verdict validate_ms_select(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t p) {
    uint64_t hi = ms_select(freqs, i);
    uint64_t lo = i > delta ? ms_select(freqs, i - delta) : 0;
    if (p > lo && p <= hi) return {true, {}};
    for (uint64_t j = i > delta ? i - delta + 1 : 1; j <= i; ++j) {
        if (ms_select(freqs, j) == p) return {true, {}};
    }
    return fail("ms_select", p, lo, hi);
}

Verdict validate_ms_dselect(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t p) {
    uint64_t hi = ms_select(freqs, i);
    bool ok = (hi < delta || p > hi - delta) && p <= hi;
    return ok ? Verdict{true, {}} : fail("ms_dselect", p, hi >= delta ? hi - delta : 0, hi);
}

Verdict validate_ms_select_span(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t mu,
                                uint64_t i, uint64_t p) {
    uint64_t hi = ms_select(freqs, i);
    uint64_t lo = i > delta ? ms_select(freqs, i - delta) : 0;
    uint64_t slack = lo > mu ? lo - mu : 0;
    if (p > slack && p <= hi) return {true, {}};
    return fail("ms_select_span", p, slack, hi);
}

Verdict validate_seq_drank(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t delta,
                           uint64_t i, uint64_t r) {
    uint64_t hi = seq_rank(seq, sym, i);
    bool ok = (hi < delta || r > hi - delta) && r <= hi;
    return ok ? Verdict{true, {}} : fail("seq_drank", r, hi >= delta ? hi - delta : 0, hi);
}

Verdict validate_seq_select(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t delta,
                            uint64_t i, uint64_t p) {
    uint64_t lo = i > delta ? seq_select(seq, sym, i - delta) : 0;
    uint64_t hi = seq_select(seq, sym, i);
    if (p > lo && p <= hi) return {true, {}};
    return fail("seq_select", p, lo, hi);
}

Verdict validate_ss(const std::vector<uint64_t>& history, uint64_t n, uint64_t delta, uint64_t i,
                    int64_t r) {
    int64_t hi = static_cast<int64_t>(ss(history, n, i));
    int64_t lo = hi - static_cast<int64_t>(delta);
    if (r > lo && r <= hi) return {true, {}};
    std::ostringstream os;
    os << "ss: got " << r << ", valid (" << lo << ", " << hi << "]";
    return {false, os.str()};
}

Verdict validate_iss(const std::vector<uint64_t>& history, uint64_t n, uint64_t delta, uint64_t i,
                     uint64_t r) {
    uint64_t lo = i > delta ? iss(history, n, i - delta) : 0;
    uint64_t hi = iss(history, n, i);
    if (r > lo && r <= hi) return {true, {}};
    return fail("iss", r, lo, hi);
}

}  // namespace approxrs::oracle
