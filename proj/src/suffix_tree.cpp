#include "batlz/suffix_tree.hpp"

#include <algorithm>

namespace batlz {

EnhancedSuffixTree::EnhancedSuffixTree(const Text& t, const SuffixArrays& sa) : text_(&t), n_(t.n) {
    const auto lcp = build_lcp(t, sa);

    parent_.assign(n_, none);
    sd_.resize(n_);
    rep_.resize(n_);
    for (std::size_t j = 1; j <= n_; ++j) {
        sd_[j - 1] = static_cast<pos_t>(n_ - j + 1);
        rep_[j - 1] = static_cast<pos_t>(j);
    }

    // Bottom-up over lcp intervals. Children arrive in SA order, i.e. sorted
    // by their first edge character.
    struct Frame {
        pos_t sd;
        std::size_t kid_start;
    };
    std::vector<Frame> frames{{0, 0}};
    std::vector<node_t> kids;
    auto finalize = [&](const Frame& f) {
        const auto id = static_cast<node_t>(parent_.size());
        child_begin_.push_back(static_cast<std::uint32_t>(child_list_.size()));
        for (std::size_t k = f.kid_start; k < kids.size(); ++k) {
            const node_t kid = kids[k];
            parent_[kid] = id;
            child_list_.push_back(kid);
            child_char_.push_back(t[rep_[kid] + f.sd]);
        }
        kids.resize(f.kid_start);
        parent_.push_back(none);
        sd_.push_back(f.sd);
        rep_.push_back(rep_[child_list_[child_begin_.back()]]);
        return id;
    };

    for (std::size_t r = 0; r < n_; ++r) {
        node_t pending = leaf(sa.sa[r]);
        const pos_t h = r + 1 < n_ ? lcp[r + 1] : 0;
        while (frames.back().sd > h) {
            const Frame f = frames.back();
            frames.pop_back();
            kids.push_back(pending);
            pending = finalize(f);
        }
        if (frames.back().sd < h) frames.push_back({h, kids.size()});
        kids.push_back(pending);
    }
    root_ = finalize(frames.front());
    child_begin_.push_back(static_cast<std::uint32_t>(child_list_.size()));

    e_.resize(n_);
    for (std::size_t j = 1; j <= n_; ++j) {
        e_[j - 1] = static_cast<pos_t>(j + sd_[parent_[j - 1]] - 1);
    }
    reset_annotations();
}

void EnhancedSuffixTree::reset_annotations() {
    const std::size_t m = parent_.size();
    minmax_.assign(m, minmax_inf);
    txtpos_.assign(m, no_pos);
    real_.assign(m, 0);
    max_leaf_.assign(m, no_pos);
    best_final_.assign(m, -1);
    best_final_pos_.assign(m, no_pos);
}

std::span<const EnhancedSuffixTree::node_t> EnhancedSuffixTree::children(node_t v) const {
    if (is_leaf(v)) return {};
    const std::size_t k = v - n_;
    return {child_list_.data() + child_begin_[k], child_begin_[k + 1] - child_begin_[k]};
}

EnhancedSuffixTree::node_t EnhancedSuffixTree::child(node_t v, sym_t ch) const {
    if (is_leaf(v)) return none;
    const std::size_t k = v - n_;
    const auto first = child_char_.begin() + child_begin_[k];
    const auto last = child_char_.begin() + child_begin_[k + 1];
    const auto it = std::lower_bound(first, last, ch);
    if (it == last || *it != ch) return none;
    return child_list_[static_cast<std::size_t>(it - child_char_.begin())];
}

std::string EnhancedSuffixTree::label(node_t v) const {
    std::string out;
    const Text& t = *text_;
    for (pos_t k = 0; k < sd_[v]; ++k) {
        const sym_t s = t[rep_[v] + k];
        out.push_back(s == 0 ? '$' : static_cast<char>(t.decode_map[s]));
    }
    return out;
}

std::optional<EnhancedSuffixTree::BestD> EnhancedSuffixTree::bestd(node_t v, const ChainLedger& ledger) const {
    if (max_leaf_[v] != no_pos && max_leaf_[v] > ledger.k_prime()) {
        return BestD{max_leaf_[v], ledger.infinity()};
    }
    if (best_final_[v] >= 0) return BestD{best_final_pos_[v], best_final_[v]};
    return std::nullopt;
}

EnhancedSuffixTree::Match EnhancedSuffixTree::match_admissible(const ChainLedger& ledger, pos_t i,
                                                               MatchMode mode) const {
    const Text& t = *text_;
    const std::uint32_t c = ledger.c();

    node_t v = root_;
    node_t u = none;
    for (;;) {
        u = child(v, t[i + sd_[v]]);
        if (u == none || is_leaf(u) || minmax_[u] >= c) break;
        v = u;
    }
    Match best{v == root_ ? no_pos : txtpos_[v], sd_[v]};
    if (mode == MatchMode::minmax || u == none) return best;

    // Every occurrence of L(u) seen so far hits a saturated position. Look
    // for the occurrence that stays clear of saturation the longest.
    node_t w = u;
    node_t p = v;
    while (w != none) {
        const auto b = bestd(w, ledger);
        if (!b) break;
        const auto reach = static_cast<std::int64_t>(b->value);
        if (reach > sd_[p]) {
            const auto cand = static_cast<pos_t>(std::min<std::int64_t>(reach, sd_[w]));
            if (cand > best.len) best = {b->position, cand};
        }
        if (is_leaf(w) || reach < sd_[w]) break;
        p = w;
        w = child(w, t[i + sd_[w]]);
    }
    return best;
}

void EnhancedSuffixTree::update_annotations(const ChainLedger& ledger, pos_t i, pos_t len, MatchMode mode) {
    const bool greedier = mode == MatchMode::greedier;
    const pos_t end = i + len;
    chain_t m = 0;
    for (pos_t j = end; j >= 1; --j) {
        // E is nondecreasing, so no earlier leaf can reach position i either
        if (j < i && e_[j - 1] < i) break;
        m = std::max(m, ledger.chain(j));
        const auto mu = static_cast<std::uint32_t>(m);

        const node_t x = leaf(j);
        if (i <= j) {
            minmax_[x] = mu;
            txtpos_[x] = j;
        } else {
            minmax_[x] = std::max(minmax_[x], mu);
        }
        const bool fresh = greedier && j >= i;
        if (fresh) {
            max_leaf_[x] = j;
            max_leaf_[root_] = std::max(max_leaf_[root_], j);
        }

        for (node_t v = parent_[x]; v != root_; v = parent_[v]) {
            const pos_t ev = j + sd_[v] - 1;
            if (ev < i) break;
            if (fresh) max_leaf_[v] = std::max(max_leaf_[v], j);
            if (ev <= end) {
                const auto mv = static_cast<std::uint32_t>(ledger.cmax(j, ev));
                if (!real_[v] || minmax_[v] > mv) {
                    minmax_[v] = mv;
                    txtpos_[v] = j;
                    real_[v] = 1;
                }
            } else if (!real_[v]) {
                minmax_[v] = mu;
                txtpos_[v] = j;
            }
        }
    }
}

void EnhancedSuffixTree::record_saturation(std::span<const DUpdate> updates) {
    for (const auto& up : updates) {
        for (node_t x = leaf(up.position); x != none; x = parent_[x]) {
            if (best_final_[x] >= up.value) break;
            best_final_[x] = up.value;
            best_final_pos_[x] = up.position;
        }
    }
}

}  // namespace batlz
