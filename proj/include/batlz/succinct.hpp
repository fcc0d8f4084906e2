#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "batlz/text.hpp"

namespace batlz {

/// Static bitvector with O(1) rank. One cumulative counter per 64-bit word.
class RankBitvector {
public:
    RankBitvector() = default;
    explicit RankBitvector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(std::size_t i, bool b) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (b) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }
    bool operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    /// Must be called after the last set() and before any rank query.
    void build_rank();

    /// Number of 1s in bits [0, i), 0 <= i <= size().
    std::size_t rank1(std::size_t i) const {
        const std::size_t w = i / 64;
        const unsigned r = i % 64;
        std::size_t res = cum_[w];
        if (r) res += static_cast<std::size_t>(std::popcount(words_[w] & ((std::uint64_t{1} << r) - 1)));
        return res;
    }
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint32_t> cum_;
};

/// One maximal piece of a wavelet-matrix rectangle decomposition: positions
/// [begin, end) in the order of `level`, all of whose values lie in
/// [value_lo, value_hi] (which is inside the query rectangle). Level 0 is the
/// original column order, level depth() the final order.
struct WmRange {
    unsigned level;
    std::size_t begin;
    std::size_t end;
    std::uint64_t value_lo;
    std::uint64_t value_hi;
};

/// Wavelet matrix over a sequence S[1..n] of values in 1..n, representing the
/// grid points (i, S[i]).
class WaveletMatrix {
public:
    WaveletMatrix() = default;
    explicit WaveletMatrix(std::span<const pos_t> seq);

    std::size_t size() const { return n_; }
    unsigned depth() const { return depth_; }
    std::size_t zeros(unsigned level) const { return zeros_[level]; }
    const RankBitvector& bits(unsigned level) const { return levels_[level]; }

    /// S[i], 1-based.
    pos_t access(std::size_t i) const;

    /// Maps 0-based position q at `level` to its position at level + 1.
    std::size_t next_position(unsigned level, std::size_t q) const {
        const auto& b = levels_[level];
        return b[q] ? zeros_[level] + b.rank1(q) : b.rank0(q);
    }
    /// Tracks a 0-based position from `level` down to the final order.
    std::size_t track_down(unsigned level, std::size_t q) const {
        for (unsigned l = level; l < depth_; ++l) q = next_position(l, q);
        return q;
    }

    /// Decomposes [x1,x2] x [y1,y2] (1-based, inclusive) into maximal ranges,
    /// listed level by level and left to right within a level. At most two
    /// ranges per level; at most one when the value range is one-sided.
    std::vector<WmRange> decompose(std::size_t x1, std::size_t x2, std::uint64_t y1, std::uint64_t y2) const;

    /// Smallest value among columns [x1,x2] (1-based), if the range is nonempty.
    std::optional<pos_t> range_min(std::size_t x1, std::size_t x2) const;

private:
    std::size_t n_ = 0;
    unsigned depth_ = 1;
    std::vector<RankBitvector> levels_;
    std::vector<std::size_t> zeros_;
};

}  // namespace batlz
