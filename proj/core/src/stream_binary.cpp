#include "approxrs/stream_binary.hpp"

#include <cmath>

#include "approxrs/errors.hpp"

namespace approxrs {

namespace {

uint64_t block_bits_for(uint64_t n) {
    double lg = std::log2(static_cast<double>(n < 2 ? 2 : n));
    uint64_t want = bits_for(static_cast<uint64_t>(lg * lg));  // ceil lg of lg^2 n
    uint64_t b = 1ull << want;
    return b < 512 ? 512 : b;
}

}  // namespace

BinaryWindow::BinaryWindow(uint64_t n) : n_(n) {
    if (n < 1) throw ParameterError("BinaryWindow: capacity must be >= 1");
    block_ = block_bits_for(n);
    phys_ = ((n + block_ - 1) / block_ + 1) * block_;
    ring_.assign(phys_ / 64, 0);
    cum_block_.assign(phys_ / block_ + 2, 0);
    cum_word_.assign(phys_ / 64 + 2, 0);
}

void BinaryWindow::push(bool bit) {
    uint64_t tau = ++t_;
    uint64_t slot = (tau - 1) % phys_;
    uint64_t mask = 1ull << (slot & 63);
    if (bit) ring_[slot >> 6] |= mask; else ring_[slot >> 6] &= ~mask;
    total_ += bit;
    sc_ += bit;
    if (tau % 64 == 0) {
        cum_word_[(tau / 64) % cum_word_.size()] = static_cast<uint16_t>(sc_);
        if (tau % block_ == 0) {
            cum_block_[(tau / block_) % cum_block_.size()] = total_;
            sc_ = 0;
        }
    }
}

uint64_t BinaryWindow::cumulative(uint64_t tau) const {
    if (tau == t_) return total_;
    if (tau == 0) return 0;
    uint64_t w0 = tau - (tau & 63);
    uint64_t cnt = 0;
    if (w0 > 0) {
        if (w0 % block_) {
            uint64_t b0 = w0 - (w0 % block_);
            if (b0 > 0) cnt = cum_block_[(b0 / block_) % cum_block_.size()];
            cnt += cum_word_[(w0 / 64) % cum_word_.size()];
        } else {
            cnt = cum_block_[(w0 / block_) % cum_block_.size()];
        }
    }
    if (tau & 63) {
        uint64_t word = ring_[(w0 % phys_) >> 6];
        cnt += popcount64(word & ((1ull << (tau & 63)) - 1));
    }
    return cnt;
}

uint64_t BinaryWindow::ss(uint64_t i) const {
    if (i < 1 || i > window()) throw RangeError("BinaryWindow::ss: suffix length out of range");
    return total_ - cumulative(t_ - i);
}

uint64_t BinaryWindow::iss(uint64_t i) const {
    uint64_t w = window();
    if (i < 1 || w == 0 || i > total_ - cumulative(t_ - w))
        throw NotFoundError("BinaryWindow::iss: fewer than i ones in window");
    uint64_t target = total_ - i;  // want smallest tau with cumulative(tau) > target
    uint64_t lo = t_ - w, hi = t_;
    while (hi - lo > 1) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (cumulative(mid) > target) hi = mid; else lo = mid;
    }
    return t_ - hi + 1;
}

bool BinaryWindow::back(uint64_t k) const {
    if (k < 1 || k > window()) throw RangeError("BinaryWindow::back: out of window");
    uint64_t slot = (t_ - k) % phys_;
    return (ring_[slot >> 6] >> (slot & 63)) & 1;
}

uint64_t BinaryWindow::space_bits() const {
    return ring_.size() * 64 + cum_block_.size() * 64 + cum_word_.size() * 16 + 6 * 64;
}

BinaryWindowApprox::BinaryWindowApprox(uint64_t n, uint64_t delta) : n_(n), delta_(delta) {
    if (n < 1) throw ParameterError("BinaryWindowApprox: capacity must be >= 1");
    if (delta < 1 || delta > n)
        throw ParameterError("BinaryWindowApprox: delta must be in [1, n]");
    chunks_per_frame_ = (n + delta - 1) / delta;
    inner_ = BinaryWindow(chunks_per_frame_);
}

void BinaryWindowApprox::push(bool bit) {
    ++seen_;
    ++t_;
    c_ += bit;
    tc_ += bit;
    if (t_ % delta_ == 0 || t_ == n_) {
        // chunk holds a one of frame-relative rank j*delta iff a multiple
        // of delta lies in (c - tc, c]
        bool g = c_ / delta_ > (c_ - tc_) / delta_;
        inner_.push(g);
        ++cc_;
        tc_ = 0;
        if (t_ == n_) {
            pf_base_ = cf_base_;
            cf_base_ += c_;
            c_prev_ = c_;
            c_ = 0;
            cc_ = 0;
            t_ = 0;
        }
    }
}

uint64_t BinaryWindowApprox::est_cumulative(uint64_t s) const {
    uint64_t frame_start = seen_ - t_;
    if (s >= frame_start) {
        uint64_t j = s - frame_start;
        if (j > delta_ * cc_) {
            // inside the current incomplete chunk
            return cf_base_ + (c_ - tc_) + (delta_ - 1);
        }
        uint64_t q = j / delta_;
        uint64_t r = j % delta_;
        uint64_t v = delta_ * (inner_ss(cc_) - inner_ss(cc_ - q));
        if (r && inner_.back(cc_ - q)) v += r;
        return cf_base_ + v + (delta_ - 1);
    }
    // window start in the previous frame; marks for its leading chunks may
    // have aged out of the ring, so count them as total minus live suffix
    uint64_t kp = chunks_per_frame_;
    uint64_t jp = s - (frame_start - n_);
    uint64_t q = jp / delta_;
    uint64_t r = jp % delta_;
    uint64_t suffix = inner_ss(cc_ + kp - q) - inner_ss(cc_);
    uint64_t v = delta_ * (c_prev_ / delta_ - suffix);
    if (r && inner_.back(cc_ + kp - q)) v += r;
    return pf_base_ + v + (delta_ - 1);
}

int64_t BinaryWindowApprox::ss_raw(uint64_t i) const {
    uint64_t total = cf_base_ + c_;
    return static_cast<int64_t>(total) - static_cast<int64_t>(est_cumulative(seen_ - i));
}

int64_t BinaryWindowApprox::ss_est(uint64_t i) const {
    if (i < 1 || i > window())
        throw RangeError("BinaryWindowApprox::ss_est: suffix length out of range");
    if (i < delta_) return 0;
    return ss_raw(i);
}

uint64_t BinaryWindowApprox::iss_est(uint64_t i) const {
    if (i < 1) throw RangeError("BinaryWindowApprox::iss_est: i must be >= 1");
    uint64_t w = window();
    int64_t need = static_cast<int64_t>(i) - static_cast<int64_t>(delta_) + 1;
    if (w == 0 || ss_raw(w) < need)
        throw NotFoundError("BinaryWindowApprox::iss_est: fewer than i ones in window");
    uint64_t lo = 1, hi = w;  // smallest j with ss_raw(j) >= need
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (ss_raw(mid) >= need) hi = mid; else lo = mid + 1;
    }
    return lo;
}

uint64_t BinaryWindowApprox::space_bits() const { return inner_.space_bits() + 10 * 64; }

}  // namespace approxrs
