#include "batlz/chain_ledger.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace batlz {

MaxSegmentTree::MaxSegmentTree(std::size_t n, std::int32_t init)
    : size_(std::bit_ceil(std::max<std::size_t>(n, 1))), tree_(2 * size_, init) {}

void MaxSegmentTree::set(std::size_t i, std::int32_t v) {
    std::size_t x = i + size_;
    tree_[x] = v;
    for (x >>= 1; x >= 1; x >>= 1) {
        const std::int32_t m = std::max(tree_[2 * x], tree_[2 * x + 1]);
        if (tree_[x] == m) break;
        tree_[x] = m;
    }
}

std::int32_t MaxSegmentTree::max(std::size_t a, std::size_t b) const {
    std::int32_t res = std::numeric_limits<std::int32_t>::min();
    for (std::size_t lo = a + size_, hi = b + size_ + 1; lo < hi; lo >>= 1, hi >>= 1) {
        if (lo & 1u) res = std::max(res, tree_[lo++]);
        if (hi & 1u) res = std::max(res, tree_[--hi]);
    }
    return res;
}

ChainLedger::ChainLedger(std::size_t n, std::uint32_t c)
    : n_(n),
      c_(c),
      c_arr_(n, unset),
      d_arr_(n, static_cast<dval_t>(n + 1)),
      cmax_index_(n, unset),
      assigned_(n, false) {}

void ChainLedger::set_chain(pos_t p, chain_t v) {
    c_arr_[p - 1] = v;
    assigned_[p - 1] = true;
    cmax_index_.set(p - 1, v);
    while (assigned_prefix_ < n_ && assigned_[assigned_prefix_]) ++assigned_prefix_;
}

void ChainLedger::assign_chain(pos_t s, pos_t i, pos_t len) {
    if (i < 1 || static_cast<std::size_t>(i) + len > n_) {
        throw std::out_of_range("assign_chain: phrase at " + std::to_string(i) + " of length " +
                                std::to_string(len) + " exceeds the text");
    }
    if (len > 0 && (s < 1 || s >= i)) {
        throw std::invalid_argument("assign_chain: source " + std::to_string(s) + " must precede phrase start " +
                                    std::to_string(i));
    }
    const pos_t gap = i - s;
    for (pos_t l = 0; l < len; ++l) {
        if (l < gap) {
            const chain_t src = c_arr_[s + l - 1];
            if (src == unset) throw std::logic_error("assign_chain: source position is not assigned");
            set_chain(i + l, src + 1);
        } else {
            set_chain(i + l, c_arr_[i + (l % gap) - 1]);
        }
    }
    set_chain(i + len, 0);
}

std::vector<DUpdate> ChainLedger::register_saturation(pos_t t) {
    if (t <= k_prime_) {
        throw std::logic_error("register_saturation: position " + std::to_string(t) + " is not past k' = " +
                               std::to_string(k_prime_));
    }
    if (!saturated(t)) throw std::logic_error("register_saturation: C[t] != c");
    std::vector<DUpdate> updates;
    updates.reserve(t - k_prime_);
    for (pos_t k = k_prime_ + 1; k <= t; ++k) {
        d_arr_[k - 1] = static_cast<dval_t>(t - k);
        updates.push_back({k, d_arr_[k - 1]});
    }
    k_prime_ = t;
    return updates;
}

chain_t ChainLedger::cmax(pos_t a, pos_t b) const {
    if (a < 1 || a > b || b > n_) throw std::out_of_range("cmax: bad range");
    const chain_t m = cmax_index_.max(a - 1, b - 1);
    if (b > assigned_prefix_ &&
        std::find(assigned_.begin() + (a - 1), assigned_.begin() + b, false) != assigned_.begin() + b) {
        throw std::logic_error("cmax: range contains unassigned positions");
    }
    return m;
}

std::map<chain_t, std::size_t> chain_histogram(const std::vector<chain_t>& chains) {
    std::map<chain_t, std::size_t> hist;
    for (auto c : chains) {
        if (c != ChainLedger::unset) ++hist[c];
    }
    return hist;
}

void write_histogram_csv(std::ostream& out, const std::map<chain_t, std::size_t>& hist) {
    out << "chain_length,count\n";
    for (const auto& [len, count] : hist) out << len << ',' << count << '\n';
}

}  // namespace batlz
