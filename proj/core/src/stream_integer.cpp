#include "approxrs/stream_integer.hpp"

#include <cmath>
#include <numeric>

#include "approxrs/errors.hpp"

namespace approxrs {

IntWindow::IntWindow(uint64_t n, uint64_t ell) : n_(n), ell_(ell) {
    if (n < 1) throw ParameterError("IntWindow: capacity must be >= 1");
    if (ell < 1 || ell > 0xffffffffull) throw ParameterError("IntWindow: ell must be in [1, 2^32)");
    width_ = std::max<uint32_t>(1, bits_for(ell));
    if (width_ <= 2) sub_vals_ = 128;
    else if (width_ <= 4) sub_vals_ = 64;
    else if (width_ <= 9) sub_vals_ = 32;
    else if (width_ <= 16) sub_vals_ = 32;
    else sub_vals_ = 16;
    block_vals_ = sub_vals_ * 8;
    uint64_t maxrel = block_vals_ * ell;
    rel_bits_ = maxrel < (1ull << 16) ? 16 : (maxrel < (1ull << 32) ? 32 : 64);
    phys_ = ((n + block_vals_ - 1) / block_vals_ + 1) * block_vals_;
    ring_.reset(phys_, width_);
    cum_block_.assign(phys_ / block_vals_ + 2, 0);
    cum_sub_.reset(phys_ / sub_vals_ + 2, rel_bits_);
}

void IntWindow::push(uint64_t x) {
    if (x > ell_) throw ValidationError("IntWindow::push: value exceeds ell");
    uint64_t tau = ++t_;
    ring_.set((tau - 1) % phys_, x);
    total_ += x;
    sc_ += x;
    if (tau % sub_vals_ == 0) {
        cum_sub_.set((tau / sub_vals_) % cum_sub_.size(), sc_);
        if (tau % block_vals_ == 0) {
            cum_block_[(tau / block_vals_) % cum_block_.size()] = total_;
            sc_ = 0;
        }
    }
}

namespace {

// Horizontal sum of width-bit fields in a word; width divides 64.
uint64_t sum_fields(uint64_t x, uint32_t width) {
    switch (width) {
        case 1: return static_cast<uint64_t>(popcount64(x));
        case 2:
            return static_cast<uint64_t>(popcount64(x & 0x5555555555555555ull)) +
                   2 * static_cast<uint64_t>(popcount64(x & 0xaaaaaaaaaaaaaaaaull));
        case 4:
            x = (x & 0x0f0f0f0f0f0f0f0full) + ((x >> 4) & 0x0f0f0f0f0f0f0f0full);
            return (x * 0x0101010101010101ull) >> 56;
        case 8:
            x = (x & 0x00ff00ff00ff00ffull) + ((x >> 8) & 0x00ff00ff00ff00ffull);
            x = (x & 0x0000ffff0000ffffull) + ((x >> 16) & 0x0000ffff0000ffffull);
            return (x + (x >> 32)) & 0xffffffffull;
        case 16:
            return (x & 0xffff) + ((x >> 16) & 0xffff) + ((x >> 32) & 0xffff) + (x >> 48);
        case 32: return (x & 0xffffffffull) + (x >> 32);
        default: {
            uint64_t s = 0;
            uint64_t mask = width == 64 ? ~0ull : (1ull << width) - 1;
            for (uint32_t off = 0; off < 64; off += width) s += (x >> off) & mask;
            return s;
        }
    }
}

}  // namespace

uint64_t IntWindow::cumulative(uint64_t tau) const {
    if (tau == t_) return total_;
    if (tau == 0) return 0;
    uint64_t s0 = tau - tau % sub_vals_;
    uint64_t cnt = 0;
    if (s0 > 0) {
        if (s0 % block_vals_) {
            uint64_t b0 = s0 - s0 % block_vals_;
            if (b0 > 0) cnt = cum_block_[(b0 / block_vals_) % cum_block_.size()];
            cnt += cum_sub_.get((s0 / sub_vals_) % cum_sub_.size());
        } else {
            cnt = cum_block_[(s0 / block_vals_) % cum_block_.size()];
        }
    }
    if (64 % width_ == 0) {
        // fields are word-aligned: sum whole words, mask the last one
        uint64_t vpw = 64 / width_;
        uint64_t v = s0;
        const auto& words = ring_.words();
        while (v < tau) {
            uint64_t slot = v % phys_;
            uint64_t word = words[slot * width_ / 64];
            uint64_t take = std::min<uint64_t>(vpw, tau - v);
            if (take < vpw) word &= (1ull << (take * width_)) - 1;
            cnt += sum_fields(word, width_);
            v += take;
        }
    } else {
        // straddling fields: rolling cursor, one wrap check per value
        uint64_t v = s0 % phys_;
        const auto& words = ring_.words();
        uint64_t mask = (1ull << width_) - 1;
        for (uint64_t k = tau - s0; k > 0; --k) {
            uint64_t bit = v * width_;
            uint64_t val = words[bit >> 6] >> (bit & 63);
            if ((bit & 63) + width_ > 64) val |= words[(bit >> 6) + 1] << (64 - (bit & 63));
            cnt += val & mask;
            if (++v == phys_) v = 0;
        }
    }
    return cnt;
}

uint64_t IntWindow::ss(uint64_t i) const {
    if (i < 1 || i > window()) throw RangeError("IntWindow::ss: suffix length out of range");
    return total_ - cumulative(t_ - i);
}

uint64_t IntWindow::back(uint64_t k) const {
    if (k < 1 || k > window()) throw RangeError("IntWindow::back: out of window");
    return ring_.get((t_ - k) % phys_);
}

uint64_t IntWindow::space_bits() const {
    return ring_.space_bits() + cum_block_.size() * 64 + cum_sub_.space_bits() + 6 * 64;
}

double SketchEstimate::value() const { return std::ldexp(static_cast<double>(num), -static_cast<int>(pow2)); }

int64_t SketchEstimate::ceil_value() const {
    __int128 den = static_cast<__int128>(1) << pow2;
    __int128 q = num / den;  // truncates toward zero
    if (num % den > 0) ++q;
    return static_cast<int64_t>(q);
}

void SketchEstimate::fraction(int64_t& out_num, uint64_t& out_den) const {
    __int128 n = num;
    uint32_t p = pow2;
    while (p > 0 && n % 2 == 0) {
        n /= 2;
        --p;
    }
    out_num = static_cast<int64_t>(n);
    out_den = 1ull << p;
}

WindowSumSketch::WindowSumSketch(uint64_t n, uint64_t ell, uint64_t delta)
    : n_(n), ell_(ell), delta_(delta) {
    if (n < 2) throw ParameterError("WindowSumSketch: capacity must be >= 2");
    if (ell < 1 || ell > 0xffffffffull)
        throw ParameterError("WindowSumSketch: ell must be in [1, 2^32)");
    if (delta < 1 || delta > ell * n)
        throw ParameterError("WindowSumSketch: delta must be in [1, ell*n]");
    double lgn = std::log2(static_cast<double>(n));
    double shrink = 1.0 - 1.0 / lgn;
    delta_tilde_ = static_cast<uint64_t>(std::floor(static_cast<double>(delta) * shrink));
    if (delta_tilde_ <= 1) {
        // the error budget collapses; keep the window exactly
        exact_ = true;
        b_ = 1;
        inner_ = IntWindow(n, ell);
        return;
    }
    double mu = static_cast<double>(delta) / static_cast<double>(ell);
    nu_ = std::max<uint64_t>(static_cast<uint64_t>(std::floor(mu * shrink)), 1);
    double bb = std::log2(static_cast<double>(n) / mu) + std::log2(lgn);
    b_ = static_cast<uint32_t>(std::max(1.0, std::ceil(bb)));
    if (b_ > 60) throw ParameterError("WindowSumSketch: parameters need too many rounding bits");
    s_cap_ = (n + nu_ - 1) / nu_ + 1;
    dtu_ = static_cast<unsigned __int128>(delta_tilde_) << b_;
    // largest multiple of the reduced error reachable by a full chunk on
    // top of a maximal carried residue
    unsigned __int128 gain = (static_cast<unsigned __int128>(ell) << b_) * nu_;
    z_ = static_cast<uint64_t>((dtu_ - 1 + gain) / dtu_);
    inner_ = IntWindow(s_cap_, z_);
    // The carried residue lives on the grid generated by the rounded
    // values; the subtracted guard must exceed its largest sub-threshold
    // point. When ell divides 2^b the grid is whole values and a half unit
    // of margin remains; otherwise the grid step is gcd-fine.
    uint64_t grid;
    uint64_t pow = b_ < 63 ? (1ull << b_) : 0;  // 2^b mod ell computed below
    if (pow && pow % ell == 0) {
        grid = 1ull << b_;
    } else {
        uint64_t m = static_cast<uint64_t>(dtu_ % ell);
        grid = std::gcd(ell, m);
        if (grid == 0) grid = ell;
    }
    h_ = std::min<uint64_t>(1ull << (b_ - 1), grid - 1);
}

void WindowSumSketch::add(uint64_t x) {
    if (x > ell_) throw ValidationError("WindowSumSketch::add: value exceeds ell");
    ++seen_;
    if (exact_) {
        inner_.push(x);
        return;
    }
    o_ = (o_ + 1) % nu_;
    r_ += ((static_cast<unsigned __int128>(x) << b_) / ell_) * ell_;  // round down to grid
    if (o_ == 0) {
        uint64_t rho = static_cast<uint64_t>(r_ / dtu_);
        r_ -= dtu_ * rho;
        inner_.push(rho);
    }
}

SketchEstimate WindowSumSketch::query(uint64_t i) const {
    if (i < 1 || i > window()) throw RangeError("WindowSumSketch::query: i out of range");
    if (exact_) {
        return {static_cast<__int128>(inner_.ss(i)) << b_, b_};
    }
    __int128 base = static_cast<__int128>(r_) - static_cast<__int128>(dtu_) + h_;
    if (i <= o_) {
        // The residue spans the whole open chunk, which may hold mass older
        // than the window; the window sum itself is below delta here, so
        // zero caps the estimate without breaking the lower bound.
        return {base < 0 ? base : 0, b_};
    }
    uint64_t num_elems = (i - o_ + nu_ - 1) / nu_;
    uint64_t total_sum = inner_.ss(num_elems);
    uint64_t oldest = total_sum - (num_elems > 1 ? inner_.ss(num_elems - 1) : 0);
    // Elements of the oldest counted chunk that precede the window. Zero
    // when the window is chunk-aligned: the oldest chunk is then fully
    // covered and discounting it would break the lower error bound.
    uint64_t rem = (i - o_) % nu_;
    uint64_t out = rem ? nu_ - rem : 0;
    __int128 est = base + static_cast<__int128>(dtu_) * total_sum -
                   (static_cast<__int128>(ell_) << b_) * oldest * out;
    return {est, b_};
}

uint64_t WindowSumSketch::space_bits() const { return inner_.space_bits() + 12 * 64; }

}  // namespace approxrs
