#include "batlz/rangemax3d.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace batlz {

RmqForest::RmqForest(const WaveletMatrix& wm, std::span<const pos_t> isa, std::span<const dval_t> d_init,
                     SpaceVariant variant)
    : wm_(&wm), isa_(isa), variant_(variant), n_(wm.size()) {
    if (isa.size() != n_ || d_init.size() != n_) {
        throw std::invalid_argument("RmqForest: ISA/D sizes do not match the wavelet matrix");
    }
    leaves_ = std::bit_ceil(std::max<std::size_t>(n_, 1));
    const unsigned nlevels = levels();
    const unsigned last = wm.depth();

    last_values_.assign(n_, 0);
    perm_map_.assign(n_, 0);
    for (std::size_t k = 1; k <= n_; ++k) {
        const std::size_t q = wm.track_down(0, isa[k - 1] - 1);
        perm_map_[q] = static_cast<pos_t>(k);
        last_values_[q] = d_init[k - 1];
    }

    bits_.assign(nlevels, std::vector<std::uint64_t>((leaves_ + 63) / 64, 0));
    if (variant_ == SpaceVariant::fast) cache_.assign(nlevels, {});
    // Walk every position down one level at a time.
    std::vector<std::size_t> at(n_);
    for (std::size_t k = 0; k < n_; ++k) at[k] = isa[k] - 1;
    std::vector<dval_t> vals(n_);
    for (unsigned l = 0; l <= last; ++l) {
        for (std::size_t k = 0; k < n_; ++k) vals[at[k]] = d_init[k];
        build_level(l, vals);
        if (l < last) {
            for (auto& q : at) q = wm.next_position(l, q);
        }
    }
}

void RmqForest::build_level(unsigned level, std::span<const dval_t> vals) {
    std::vector<dval_t> node_max(2 * leaves_, -1);
    std::copy(vals.begin(), vals.end(), node_max.begin() + static_cast<std::ptrdiff_t>(leaves_));
    for (std::size_t p = leaves_; p-- > 1;) {
        const dval_t l = node_max[2 * p], r = node_max[2 * p + 1];
        set_bit(level, p, r > l);
        node_max[p] = std::max(l, r);
    }
    if (variant_ == SpaceVariant::fast) cache_[level] = std::move(node_max);
}

dval_t RmqForest::leaf_value(unsigned level, std::size_t q) const {
    if (q >= n_) return -1;
    if (variant_ == SpaceVariant::fast) return cache_[level][leaves_ + q];
    return last_values_[wm_->track_down(level, q)];
}

RmqForest::Best RmqForest::max_below(unsigned level, std::size_t node) const {
    while (node < leaves_) node = 2 * node + static_cast<std::size_t>(bit(level, node));
    const std::size_t q = node - leaves_;
    return {leaf_value(level, q), q};
}

dval_t RmqForest::max_value_below(unsigned level, std::size_t node) const {
    if (variant_ == SpaceVariant::fast) return cache_[level][node];
    return max_below(level, node).value;
}

void RmqForest::update_level(unsigned level, std::size_t q, dval_t old_d, dval_t new_d) {
    std::size_t x = leaves_ + q;
    if (variant_ == SpaceVariant::fast) {
        auto& cache = cache_[level];
        cache[x] = new_d;
        while (x > 1) {
            const std::size_t y = x >> 1;
            const dval_t l = cache[2 * y], r = cache[2 * y + 1];
            const bool b = r > l;
            const dval_t m = std::max(l, r);
            if (m == cache[y] && b == bit(level, y)) break;
            cache[y] = m;
            set_bit(level, y, b);
            x = y;
        }
        return;
    }

    const bool decreasing = new_d < old_d;
    dval_t m = new_d;
    while (x > 1) {
        const std::size_t y = x >> 1;
        const std::size_t sib = x ^ 1u;
        const bool x_is_right = x & 1u;
        const bool pointed_to_sibling = bit(level, y) != x_is_right;
        // A smaller value below x cannot move a maximum that already lives in the sibling.
        if (decreasing && pointed_to_sibling) break;
        const dval_t other = max_value_below(level, sib);
        const bool b = x_is_right ? (m > other) : (other > m);
        set_bit(level, y, b);
        if (pointed_to_sibling && b != x_is_right) break;
        m = std::max(m, other);
        x = y;
    }
}

void RmqForest::update(pos_t k, dval_t new_d) {
    if (k < 1 || k > n_) throw std::out_of_range("RmqForest::update position " + std::to_string(k));
    const unsigned last = wm_->depth();
    std::vector<std::size_t> pos(last + 1);
    pos[0] = isa_[k - 1] - 1;
    for (unsigned l = 0; l < last; ++l) pos[l + 1] = wm_->next_position(l, pos[l]);
    const dval_t old_d = last_values_[pos[last]];
    if (old_d == new_d) return;
    last_values_[pos[last]] = new_d;
    for (unsigned l = 0; l <= last; ++l) update_level(l, pos[l], old_d, new_d);
}

dval_t RmqForest::value(pos_t k) const {
    return last_values_[wm_->track_down(0, isa_[k - 1] - 1)];
}

std::optional<pos_t> RmqForest::query(pos_t sp, pos_t ep, pos_t i_max, dval_t ell, pos_t i_min) const {
    if (sp > ep || i_max <= i_min || n_ == 0) return std::nullopt;
    const auto ranges = wm_->decompose(sp, ep, i_min, static_cast<std::uint64_t>(i_max) - 1);
    std::vector<std::size_t> right_nodes;
    for (const auto& r : ranges) {
        std::size_t lo = r.begin + leaves_;
        std::size_t hi = r.end - 1 + leaves_;
        right_nodes.clear();
        auto try_node = [&](std::size_t node) -> std::optional<pos_t> {
            if (max_value_below(r.level, node) < ell) return std::nullopt;
            const Best best = max_below(r.level, node);
            return perm_map_[wm_->track_down(r.level, best.leaf)];
        };
        std::optional<pos_t> hit;
        while (lo <= hi && !hit) {
            if (lo & 1u) hit = try_node(lo++);
            if (!hit && !(hi & 1u)) right_nodes.push_back(hi--);
            lo >>= 1;
            hi >>= 1;
        }
        for (auto it = right_nodes.rbegin(); !hit && it != right_nodes.rend(); ++it) hit = try_node(*it);
        if (hit) {
            if (debug_checks_) {
                const pos_t s = *hit;
                const pos_t rank = isa_[s - 1];
                if (rank < sp || rank > ep || s < i_min || s >= i_max || value(s) < ell) {
                    throw std::logic_error("RmqForest::query returned an out-of-range witness");
                }
            }
            return hit;
        }
    }
    return std::nullopt;
}

bool RmqForest::check_consistency(std::span<const dval_t> d) const {
    if (d.size() != n_) return false;
    for (std::size_t k = 1; k <= n_; ++k) {
        if (value(static_cast<pos_t>(k)) != d[k - 1]) return false;
    }
    for (unsigned level = 0; level < levels(); ++level) {
        std::vector<dval_t> span_max(2 * leaves_, -1);
        for (std::size_t k = 1; k <= n_; ++k) {
            std::size_t q = isa_[k - 1] - 1;
            for (unsigned l = 0; l < level; ++l) q = wm_->next_position(l, q);
            span_max[leaves_ + q] = d[k - 1];
        }
        for (std::size_t p = leaves_; p-- > 1;) span_max[p] = std::max(span_max[2 * p], span_max[2 * p + 1]);
        for (std::size_t p = 1; p < 2 * leaves_; ++p) {
            if (max_below(level, p).value != span_max[p]) return false;
            if (variant_ == SpaceVariant::fast && cache_[level][p] != span_max[p]) return false;
        }
    }
    return true;
}

}  // namespace batlz
