#pragma once

#include <cstdint>
#include <string>

namespace approxrs::audit {

// Reference space formulas, leading terms only (lower-order terms are not
// measurable at fixed scales). All results in bits.

// lg binomial(n, m), the information bound for an m-subset of n.
double binomial_bits(uint64_t n, uint64_t m);

// Lower bounds.
double lb_mark_bits(uint64_t n, uint64_t delta);                       // floor(n/delta)
double lb_mark_bits_sparse(uint64_t n, uint64_t m, uint64_t delta);    // B(n/d, m/d)
double lb_count_bits(uint64_t n, uint64_t delta);                      // floor(n/2d)*lg d
double lb_bounded_freq_bits(uint64_t n, uint64_t delta, uint64_t ell);

// Upper bounds (construction targets).
double ub_mark_bits(uint64_t n, uint64_t delta);                   // ceil(n/delta)
double ub_count_bits(uint64_t n, uint64_t delta);                  // (n/d)*lg(d+1)
double ub_binary_window_bits(uint64_t n, uint64_t delta);          // ceil(n/d) + O(lg n)
double ub_sequence_bits(uint64_t n, uint64_t delta, uint64_t sigma);
double ub_sketch_bits(uint64_t n, uint64_t delta, uint64_t ell);   // chunked-window payload

struct SpaceAuditReport {
    std::string kind;
    uint64_t n = 0;
    uint64_t m = 0;
    uint64_t delta = 0;
    uint64_t ell = 0;
    uint64_t sigma = 0;
    uint64_t measured_bits = 0;
    double upper_formula_bits = 0;
    double lower_formula_bits = 0;
    bool representation_substituted = false;  // lower bound reported, not asserted

    double ratio_upper() const {
        return upper_formula_bits > 0 ? measured_bits / upper_formula_bits : 0;
    }
    double ratio_lower() const {
        return lower_formula_bits > 0 ? measured_bits / lower_formula_bits : 0;
    }
    std::string csv_row() const;
    static std::string csv_header();
};

}  // namespace approxrs::audit
