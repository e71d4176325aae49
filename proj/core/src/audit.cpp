#include "approxrs/audit.hpp"

#include <cmath>
#include <sstream>

namespace approxrs::audit {

double binomial_bits(uint64_t n, uint64_t m) {
    if (m == 0 || m >= n) return 0;
    double lg = (std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(m) + 1) -
                 std::lgamma(static_cast<double>(n - m) + 1)) /
                std::log(2.0);
    return lg;
}

double lb_mark_bits(uint64_t n, uint64_t delta) { return static_cast<double>(n / delta); }

double lb_mark_bits_sparse(uint64_t n, uint64_t m, uint64_t delta) {
    return binomial_bits(n / delta, m / delta);
}

double lb_count_bits(uint64_t n, uint64_t delta) {
    if (delta < 2) return static_cast<double>(n / 2);
    return static_cast<double>(n / (2 * delta)) * std::log2(static_cast<double>(delta));
}

double lb_bounded_freq_bits(uint64_t n, uint64_t delta, uint64_t ell) {
    uint64_t span = (delta + ell - 1) / ell;       // ceil(delta/ell)
    uint64_t levels = std::max<uint64_t>(ell / delta, 1);
    return static_cast<double>(n / span) * std::log2(static_cast<double>(levels + 1));
}

double ub_mark_bits(uint64_t n, uint64_t delta) {
    return static_cast<double>((n + delta - 1) / delta);
}

double ub_count_bits(uint64_t n, uint64_t delta) {
    return static_cast<double>((n + delta - 1) / delta) *
           std::ceil(std::log2(static_cast<double>(delta) + 1));
}

double ub_binary_window_bits(uint64_t n, uint64_t delta) {
    return static_cast<double>((n + delta - 1) / delta) +
           64.0 * std::ceil(std::log2(static_cast<double>(n)));
}

double ub_sequence_bits(uint64_t n, uint64_t delta, uint64_t sigma) {
    return 2.0 * static_cast<double>(n) / static_cast<double>(delta) *
           std::log2(static_cast<double>(sigma) + 1);
}

double ub_sketch_bits(uint64_t n, uint64_t delta, uint64_t ell) {
    double mu = static_cast<double>(delta) / static_cast<double>(ell);
    uint64_t chunk = std::max<uint64_t>(static_cast<uint64_t>(mu), 1);
    double levels = std::ceil(1.0 / mu);
    if (levels < 1) levels = 1;
    return static_cast<double>(n / chunk) * std::log2(levels + 1) +
           std::ceil(std::log2(static_cast<double>(n)));
}

std::string SpaceAuditReport::csv_header() {
    return "kind,n,m,delta,ell,sigma,measured_bits,upper_formula_bits,lower_formula_bits,"
           "ratio_upper,ratio_lower,substituted";
}

std::string SpaceAuditReport::csv_row() const {
    std::ostringstream os;
    os << kind << ',' << n << ',' << m << ',' << delta << ',' << ell << ',' << sigma << ','
       << measured_bits << ',' << upper_formula_bits << ',' << lower_formula_bits << ','
       << ratio_upper() << ',' << ratio_lower() << ',' << (representation_substituted ? 1 : 0);
    return os.str();
}

}  // namespace approxrs::audit
