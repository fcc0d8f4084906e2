#include "batlz/succinct.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace batlz {

void RankBitvector::build_rank() {
    cum_.assign(words_.size() + 1, 0);
    std::uint32_t sum = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        cum_[w] = sum;
        sum += static_cast<std::uint32_t>(std::popcount(words_[w]));
    }
    cum_[words_.size()] = sum;
}

WaveletMatrix::WaveletMatrix(std::span<const pos_t> seq) : n_(seq.size()) {
    pos_t max_value = 0;
    for (auto v : seq) {
        if (v < 1 || v > n_) {
            throw std::invalid_argument("wavelet matrix value " + std::to_string(v) + " outside 1.." +
                                        std::to_string(n_));
        }
        max_value = std::max(max_value, v);
    }
    depth_ = std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));

    std::vector<pos_t> cur(seq.begin(), seq.end());
    std::vector<pos_t> next(n_);
    levels_.reserve(depth_);
    zeros_.reserve(depth_);
    for (unsigned l = 0; l < depth_; ++l) {
        const unsigned shift = depth_ - 1 - l;
        RankBitvector b(n_);
        std::size_t z = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1u) {
                b.set(i, true);
            } else {
                ++z;
            }
        }
        b.build_rank();
        // stable partition: zeros first, then ones
        std::size_t zi = 0, oi = z;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1u) {
                next[oi++] = cur[i];
            } else {
                next[zi++] = cur[i];
            }
        }
        cur.swap(next);
        levels_.push_back(std::move(b));
        zeros_.push_back(z);
    }
}

pos_t WaveletMatrix::access(std::size_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("wavelet matrix column " + std::to_string(i));
    std::size_t q = i - 1;
    pos_t value = 0;
    for (unsigned l = 0; l < depth_; ++l) {
        const bool b = levels_[l][q];
        value = (value << 1) | static_cast<pos_t>(b);
        q = b ? zeros_[l] + levels_[l].rank1(q) : levels_[l].rank0(q);
    }
    return value;
}

std::vector<WmRange> WaveletMatrix::decompose(std::size_t x1, std::size_t x2, std::uint64_t y1,
                                              std::uint64_t y2) const {
    std::vector<WmRange> out;
    if (x1 < 1) x1 = 1;
    if (x2 > n_) x2 = n_;
    if (x1 > x2 || y1 > y2) return out;
    // No stored value is 0 or above n; widening to the full value space keeps
    // one-sided queries at one range per level.
    if (y1 <= 1) y1 = 0;
    if (y2 >= n_) y2 = (std::uint64_t{1} << depth_) - 1;

    struct Item {
        unsigned level;
        std::size_t begin, end;
        std::uint64_t prefix;
    };
    std::deque<Item> queue{{0, x1 - 1, x2, 0}};
    while (!queue.empty()) {
        Item it = queue.front();
        queue.pop_front();
        if (it.begin >= it.end) continue;
        const unsigned rest = depth_ - it.level;
        const std::uint64_t lo = it.prefix << rest;
        const std::uint64_t hi = lo + (std::uint64_t{1} << rest) - 1;
        if (hi < y1 || lo > y2) continue;
        if (y1 <= lo && hi <= y2) {
            out.push_back({it.level, it.begin, it.end, lo, hi});
            continue;
        }
        // partially overlapping at the last level is impossible: rest == 0 gives a single value
        const auto& b = levels_[it.level];
        const std::size_t z = zeros_[it.level];
        queue.push_back({it.level + 1, b.rank0(it.begin), b.rank0(it.end), it.prefix << 1});
        queue.push_back({it.level + 1, z + b.rank1(it.begin), z + b.rank1(it.end), (it.prefix << 1) | 1u});
    }
    std::sort(out.begin(), out.end(), [](const WmRange& a, const WmRange& b) {
        return a.level != b.level ? a.level < b.level : a.begin < b.begin;
    });
    return out;
}

std::optional<pos_t> WaveletMatrix::range_min(std::size_t x1, std::size_t x2) const {
    if (x1 < 1) x1 = 1;
    if (x2 > n_) x2 = n_;
    if (x1 > x2) return std::nullopt;
    std::size_t b = x1 - 1, e = x2;
    pos_t value = 0;
    for (unsigned l = 0; l < depth_; ++l) {
        const auto& bv = levels_[l];
        const std::size_t b0 = bv.rank0(b), e0 = bv.rank0(e);
        if (e0 > b0) {
            b = b0;
            e = e0;
            value <<= 1;
        } else {
            b = zeros_[l] + (b - b0);
            e = zeros_[l] + (e - e0);
            value = (value << 1) | 1u;
        }
    }
    return value;
}

}  // namespace batlz
