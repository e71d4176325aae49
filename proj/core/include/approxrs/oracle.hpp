#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace approxrs::oracle {

// Brute-force reference implementations. Deliberately naive linear scans
// sharing no code with the main structures, so a bug cannot cancel out.

uint64_t rank(const std::vector<uint8_t>& bits, bool b, uint64_t i);
uint64_t select(const std::vector<uint8_t>& bits, bool b, uint64_t i);  // throws NotFoundError

// Multiset as frequency array over universe 1..freqs.size().
uint64_t ms_rank(const std::vector<uint64_t>& freqs, uint64_t i);
uint64_t ms_select(const std::vector<uint64_t>& freqs, uint64_t i);

// Sequence over symbols 1..sigma.
uint64_t seq_rank(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t i);
uint64_t seq_select(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t i);

// Sliding-window suffix sums over the full push history.
uint64_t ss(const std::vector<uint64_t>& history, uint64_t n, uint64_t i);
uint64_t iss(const std::vector<uint64_t>& history, uint64_t n, uint64_t i);

struct Verdict {
    bool ok;
    std::string why;
    explicit operator bool() const { return ok; }
};

// Validators for the additive-error contracts. Each takes the raw input,
// the error bound, the query argument and the produced answer, and decides
// membership in the guarantee that the corresponding construction provides:
//
//  drank:    rank(i) - delta < r <= rank(i)
//  rank:     rank(i-delta) <= r <= rank(i)   (equality forces r = rank(i))
//  select:   select(i-delta) < p <= select(i), select(j<=0) = 0
//  dselect:  select(i) - delta < p <= select(i)
//  ss:       ss(i) - delta < r <= ss(i)
//  iss:      iss(i-delta) < r <= iss(i), iss(j<=0) = 0
//
// The rank validator uses a non-strict lower end: the block-counted
// structures answer with the exact rank of a position within delta below i,
// which can coincide with rank(i-delta) when the gap holds no ones.
Verdict validate_drank(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t r);
Verdict validate_rank(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t r);
Verdict validate_select(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t p);
Verdict validate_dselect(const std::vector<uint8_t>& bits, uint64_t delta, uint64_t i, uint64_t p);

Verdict validate_ms_drank(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t r);
Verdict validate_ms_rank(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t r);
// Multiset select: valid if inside the value interval, or equal to
// select(i') for some i' within delta of i (repeated elements can make the
// pure interval empty while the rank-argument reading stays satisfiable).
Verdict validate_ms_select(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t p);
Verdict validate_ms_dselect(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t i, uint64_t p);
// Bounded-frequency select: the span coding relaxes the lower end by the
// span length mu (elements), on top of the delta slack in the rank argument.
Verdict validate_ms_select_span(const std::vector<uint64_t>& freqs, uint64_t delta, uint64_t mu,
                                uint64_t i, uint64_t p);

Verdict validate_seq_drank(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t delta,
                           uint64_t i, uint64_t r);
Verdict validate_seq_select(const std::vector<uint32_t>& seq, uint32_t sym, uint64_t delta,
                            uint64_t i, uint64_t p);

Verdict validate_ss(const std::vector<uint64_t>& history, uint64_t n, uint64_t delta, uint64_t i,
                    int64_t r);
Verdict validate_iss(const std::vector<uint64_t>& history, uint64_t n, uint64_t delta, uint64_t i,
                     uint64_t r);

}  // namespace approxrs::oracle
