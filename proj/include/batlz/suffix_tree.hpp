#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "batlz/chain_ledger.hpp"
#include "batlz/suffix_array.hpp"
#include "batlz/text.hpp"

namespace batlz {

enum class MatchMode { minmax, greedier };

/// Suffix tree of T with per-node chain annotations, used to pick phrase
/// sources that keep chains short.
///
/// Node ids: leaf of suffix j is j-1 (ids 0..n-1), inner nodes follow.
/// Annotations per node v (label L(v), string depth sd(v)):
///   minmax(v)  best known max C over an occurrence of L(v), or minmax_inf;
///   txtpos(v)  that occurrence (no_pos when none yet);
///   real(v)    whether a full occurrence inside the parsed prefix was seen.
/// Greedier mode additionally tracks, per node, the largest processed leaf
/// and the best finalized D value below it (see bestd()).
///
/// Keeps a pointer to the Text; it must outlive the tree.
class EnhancedSuffixTree {
public:
    using node_t = std::uint32_t;
    static constexpr node_t none = std::numeric_limits<node_t>::max();
    static constexpr std::uint32_t minmax_inf = std::numeric_limits<std::uint32_t>::max();

    struct Match {
        pos_t source;  // no_pos for a literal phrase
        pos_t len;
    };
    struct BestD {
        pos_t position;
        dval_t value;
    };

    EnhancedSuffixTree(const Text& t, const SuffixArrays& sa);

    node_t root() const { return root_; }
    node_t leaf(pos_t j) const { return j - 1; }
    bool is_leaf(node_t v) const { return v < n_; }
    node_t parent(node_t v) const { return parent_[v]; }
    pos_t sd(node_t v) const { return sd_[v]; }
    /// A text position whose suffix starts with L(v).
    pos_t rep(node_t v) const { return rep_[v]; }
    std::span<const node_t> children(node_t v) const;
    /// Child of v whose edge starts with ch, or none.
    node_t child(node_t v, sym_t ch) const;
    std::size_t node_count() const { return parent_.size(); }
    std::size_t inner_count() const { return parent_.size() - n_; }
    /// E[j] = j + sd(parent(leaf_j)) - 1.
    pos_t e(pos_t j) const { return e_[j - 1]; }
    /// L(v) decoded to bytes (sentinel shown as '$').
    std::string label(node_t v) const;

    std::uint32_t minmax(node_t v) const { return minmax_[v]; }
    pos_t txtpos(node_t v) const { return txtpos_[v]; }
    bool real(node_t v) const { return real_[v] != 0; }

    /// Max D[k] over processed leaves k in v's subtree, with a witness; D of
    /// leaves past the last saturation is infinity. Greedier mode only.
    std::optional<BestD> bestd(node_t v, const ChainLedger& ledger) const;

    /// Next phrase at i (T[1..i-1] parsed). Minmax descends while the child's
    /// minmax is below c and returns (txtpos(v), sd(v)). Greedier then keeps
    /// descending the blocked subtree guided by bestd() and returns the longest
    /// valid copy found there, if longer.
    Match match_admissible(const ChainLedger& ledger, pos_t i, MatchMode mode) const;

    /// Leaf-to-root annotation walks after the phrase T[i..i+len] was assigned.
    void update_annotations(const ChainLedger& ledger, pos_t i, pos_t len, MatchMode mode);

    /// Propagates finalized D values (from register_saturation) into bestd.
    void record_saturation(std::span<const DUpdate> updates);

    void reset_annotations();

private:
    const Text* text_;
    std::size_t n_;
    node_t root_ = none;
    std::vector<node_t> parent_;
    std::vector<pos_t> sd_;
    std::vector<pos_t> rep_;
    std::vector<std::uint32_t> child_begin_;  // inner nodes only, indexed by v - n
    std::vector<node_t> child_list_;
    std::vector<sym_t> child_char_;
    std::vector<pos_t> e_;

    std::vector<std::uint32_t> minmax_;
    std::vector<pos_t> txtpos_;
    std::vector<std::uint8_t> real_;
    std::vector<pos_t> max_leaf_;
    std::vector<dval_t> best_final_;
    std::vector<pos_t> best_final_pos_;
};

}  // namespace batlz
