#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "batlz/succinct.hpp"
#include "batlz/text.hpp"

namespace batlz {

/// Value type of the third coordinate. The D-array "infinity" is n+1; heap
/// padding leaves hold -1 and never win a maximum.
using dval_t = std::int32_t;

enum class SpaceVariant {
    linear,  // one bit per heap node; maxima recovered by descending and tracking
    fast,    // additionally caches the maximum of every heap node
};

/// Dynamic 5-sided range search over the points (j, SA[j], D[SA[j]]):
/// find s with ISA[s] in [sp,ep], i_min <= s < i_max and D[s] >= ell, while
/// D[s] may be changed arbitrarily.
///
/// Each wavelet-matrix level l (and the final order, level depth()) carries a
/// heap-shaped perfectly balanced one-bit tree H_l over its n positions.
/// Internal node p points to the child holding the maximum of its subtree
/// (0 = left, ties go left). Explicit D values are kept only in final-level
/// order. The forest keeps references to `wm` and `isa`; both must outlive it.
class RmqForest {
public:
    RmqForest(const WaveletMatrix& wm, std::span<const pos_t> isa, std::span<const dval_t> d_init,
              SpaceVariant variant = SpaceVariant::linear);

    /// D[k] <- new_d, k a 1-based text position.
    void update(pos_t k, dval_t new_d);

    /// Returns some s with ISA[s] in [sp,ep], i_min <= s < i_max, D[s] >= ell.
    /// Candidates are visited level by level, left to right; the first hit wins.
    std::optional<pos_t> query(pos_t sp, pos_t ep, pos_t i_max, dval_t ell, pos_t i_min = 1) const;

    /// Current D[k].
    dval_t value(pos_t k) const;

    std::size_t size() const { return n_; }
    unsigned levels() const { return wm_->depth() + 1; }
    SpaceVariant variant() const { return variant_; }

    /// Re-checks every returned witness against the three range conditions.
    void set_debug_checks(bool on) { debug_checks_ = on; }

    /// Exhaustive invariant check (for tests): every bit-directed descent
    /// reaches a leaf attaining its subtree maximum, last-level values match
    /// `d`, and fast-variant caches are exact.
    bool check_consistency(std::span<const dval_t> d) const;

private:
    struct Best {
        dval_t value;
        std::size_t leaf;  // 0-based position at the node's level
    };

    bool bit(unsigned level, std::size_t node) const {
        return (bits_[level][node / 64] >> (node % 64)) & 1u;
    }
    void set_bit(unsigned level, std::size_t node, bool b) {
        const std::uint64_t mask = std::uint64_t{1} << (node % 64);
        if (b) {
            bits_[level][node / 64] |= mask;
        } else {
            bits_[level][node / 64] &= ~mask;
        }
    }

    dval_t leaf_value(unsigned level, std::size_t q) const;
    Best max_below(unsigned level, std::size_t node) const;
    dval_t max_value_below(unsigned level, std::size_t node) const;
    void build_level(unsigned level, std::span<const dval_t> vals);  // vals in this level's order
    void update_level(unsigned level, std::size_t q, dval_t old_d, dval_t new_d);

    const WaveletMatrix* wm_;
    std::span<const pos_t> isa_;
    SpaceVariant variant_;
    std::size_t n_;
    std::size_t leaves_;  // n rounded up to a power of two
    bool debug_checks_ = false;

    std::vector<std::vector<std::uint64_t>> bits_;  // per level, heap-indexed (root = 1)
    std::vector<std::vector<dval_t>> cache_;        // fast variant: per level, heap-indexed maxima
    std::vector<dval_t> last_values_;               // D in final-level order
    std::vector<pos_t> perm_map_;                   // final-level order -> text position
};

}  // namespace batlz
