#include "approxrs/bit_vector.hpp"

#include <istream>
#include <ostream>

#include "approxrs/serialize.hpp"

namespace approxrs {

BitVector BitVector::from_bits(const std::vector<uint8_t>& bits) {
    std::vector<uint64_t> words((bits.size() + 63) / 64, 0);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) words[i >> 6] |= 1ull << (i & 63);
    }
    return from_packed(std::move(words), bits.size());
}

BitVector BitVector::from_packed(std::vector<uint64_t> words, uint64_t n) {
    BitVector bv;
    bv.n_ = n;
    bv.words_ = std::move(words);
    bv.words_.resize((n + 63) / 64, 0);
    if (n % 64) bv.words_.back() &= (1ull << (n % 64)) - 1;  // clear slack
    bv.build_directories();
    return bv;
}

void BitVector::build_directories() {
    uint64_t nsb = (n_ + kSuperBits - 1) / kSuperBits;
    uint64_t nbl = (n_ + kBlockBits - 1) / kBlockBits;
    super_.assign(nsb + 1, 0);
    block_.assign(nbl + 1, 0);
    samples1_.clear();
    samples0_.clear();

    uint64_t ones = 0, zeros = 0, sb_ones = 0;
    for (uint64_t b = 0; b <= nbl; ++b) {
        if (b % (kSuperBits / kBlockBits) == 0) {
            uint64_t s = b / (kSuperBits / kBlockBits);
            if (s <= nsb) super_[s] = ones;
            sb_ones = ones;
        }
        block_[b] = static_cast<uint16_t>(ones - sb_ones);
        if (b == nbl) break;
        uint64_t w0 = b * (kBlockBits / 64);
        uint64_t w1 = std::min<uint64_t>(w0 + kBlockBits / 64, words_.size());
        uint64_t lim = std::min(n_, (b + 1) * kBlockBits);
        for (uint64_t w = w0; w < w1; ++w) {
            uint64_t word = words_[w];
            uint64_t lo = w * 64;
            uint64_t width = std::min<uint64_t>(64, lim > lo ? lim - lo : 0);
            if (width == 0) break;
            for (int c = popcount64(word); c > 0; --c) {
                // positions of ones, sampled
                if (ones % kSelectSample == 0) {
                    uint64_t pos = lo + select_in_word(word, static_cast<uint32_t>(popcount64(word) - c + 1));
                    samples1_.push_back(pos);
                }
                ++ones;
            }
            uint64_t zc = width - static_cast<uint64_t>(popcount64(word));
            uint64_t inv = ~word & (width == 64 ? ~0ull : ((1ull << width) - 1));
            for (uint64_t z = 0; z < zc; ++z) {
                if (zeros % kSelectSample == 0) {
                    samples0_.push_back(lo + select_in_word(inv, static_cast<uint32_t>(z + 1)));
                }
                ++zeros;
            }
        }
    }
    // Last superblock boundary may land past the final block loop above.
    super_[nsb] = ones;
    ones_ = ones;
}

bool BitVector::access(uint64_t i) const {
    if (i < 1 || i > n_) throw RangeError("BitVector::access: position out of range");
    uint64_t p = i - 1;
    return (words_[p >> 6] >> (p & 63)) & 1;
}

uint64_t BitVector::rank_prefix(uint64_t pos) const {
    uint64_t s = pos / kSuperBits;
    uint64_t b = pos / kBlockBits;
    uint64_t cnt = super_[s] + block_[b];
    uint64_t w0 = b * (kBlockBits / 64);
    uint64_t w = pos >> 6;
    for (uint64_t j = w0; j < w; ++j) cnt += popcount64(words_[j]);
    if (pos & 63) cnt += popcount64(words_[w] & ((1ull << (pos & 63)) - 1));
    return cnt;
}

uint64_t BitVector::rank(bool b, uint64_t i) const {
    if (i > n_) throw RangeError("BitVector::rank: position out of range");
    uint64_t r1 = i == 0 ? 0 : rank_prefix(i);
    return b ? r1 : i - r1;
}

uint64_t BitVector::super_prefix(bool b, uint64_t s) const {
    if (b) return super_[s];
    return std::min(s * kSuperBits, n_) - super_[s];
}

uint64_t BitVector::select(bool b, uint64_t i) const {
    if (i < 1 || i > count(b)) throw NotFoundError("BitVector::select: no such occurrence");
    const auto& samples = b ? samples1_ : samples0_;
    uint64_t k = (i - 1) / kSelectSample;
    uint64_t lo = samples[k] / kSuperBits;
    uint64_t hi = (k + 1 < samples.size() ? samples[k + 1] : n_ - 1) / kSuperBits;
    while (lo < hi) {
        uint64_t mid = (lo + hi + 1) / 2;
        if (super_prefix(b, mid) < i) lo = mid; else hi = mid - 1;
    }
    uint64_t cnt = super_prefix(b, lo);
    uint64_t blocks_per_super = kSuperBits / kBlockBits;
    uint64_t b0 = lo * blocks_per_super;
    uint64_t nbl = (n_ + kBlockBits - 1) / kBlockBits;
    uint64_t bl = b0;
    for (uint64_t j = b0 + 1; j < b0 + blocks_per_super && j < nbl; ++j) {
        uint64_t pref = super_[lo] + block_[j];
        if (b) {
            if (pref < i) bl = j; else break;
        } else {
            if (j * kBlockBits - pref < i) bl = j; else break;
        }
    }
    cnt = b ? super_[lo] + block_[bl] : bl * kBlockBits - (super_[lo] + block_[bl]);
    uint64_t w = bl * (kBlockBits / 64);
    for (;; ++w) {
        uint64_t word = b ? words_[w] : ~words_[w];
        if (w == words_.size() - 1 && (n_ & 63)) word &= (1ull << (n_ & 63)) - 1;
        uint64_t c = static_cast<uint64_t>(popcount64(word));
        if (cnt + c >= i) {
            return w * 64 + select_in_word(word, static_cast<uint32_t>(i - cnt)) + 1;
        }
        cnt += c;
    }
}

uint64_t BitVector::space_bits() const {
    return words_.size() * 64 + super_.size() * 64 + block_.size() * 16 +
           (samples1_.size() + samples0_.size()) * 64;
}

void BitVector::save(std::ostream& os) const {
    io::write_u64(os, n_);
    io::write_vec_u64(os, words_);
}

BitVector BitVector::load(std::istream& is) {
    uint64_t n = io::read_u64(is);
    std::vector<uint64_t> words = io::read_vec_u64(is);
    return from_packed(std::move(words), n);
}

}  // namespace approxrs
