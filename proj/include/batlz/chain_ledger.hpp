#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <vector>

#include "batlz/rangemax3d.hpp"
#include "batlz/text.hpp"

namespace batlz {

using chain_t = std::int32_t;

/// Chain bound meaning "no bound" (classic LZ).
inline constexpr std::uint32_t unbounded_c = std::numeric_limits<std::uint32_t>::max();

/// Point-update range-maximum tree over int32 values.
class MaxSegmentTree {
public:
    explicit MaxSegmentTree(std::size_t n, std::int32_t init);
    void set(std::size_t i, std::int32_t v);  // 0-based
    std::int32_t max(std::size_t a, std::size_t b) const;  // 0-based, inclusive

private:
    std::size_t size_;
    std::vector<std::int32_t> tree_;
};

/// One change of the D-array produced by a saturation.
struct DUpdate {
    pos_t position;
    dval_t value;
};

/// Chain lengths C, saturation distances D and the frontier k' of a parse in
/// progress. Positions are 1-based. C is unset (-1) beyond the parsed prefix;
/// D[s] is n+1 ("infinity") until a saturated position at or after s appears.
class ChainLedger {
public:
    static constexpr chain_t unset = -1;

    ChainLedger(std::size_t n, std::uint32_t c);

    /// Assigns chains for the phrase T[i..i+len] copied from T[s..s+len-1]
    /// (len > 0 requires s < i), including the overlap rule; C[i+len] = 0.
    void assign_chain(pos_t s, pos_t i, pos_t len);

    /// Records C[t] = c: D[k] = t-k for k' < k <= t, then k' = t.
    std::vector<DUpdate> register_saturation(pos_t t);

    /// max C[a..b]; every position in a..b must be assigned.
    chain_t cmax(pos_t a, pos_t b) const;

    chain_t chain(pos_t p) const { return c_arr_[p - 1]; }
    dval_t d(pos_t s) const { return d_arr_[s - 1]; }
    pos_t k_prime() const { return k_prime_; }
    std::uint32_t c() const { return c_; }
    std::size_t size() const { return n_; }
    dval_t infinity() const { return static_cast<dval_t>(n_ + 1); }
    bool saturated(pos_t p) const { return c_ != unbounded_c && c_arr_[p - 1] == static_cast<chain_t>(c_); }

    const std::vector<chain_t>& chains() const { return c_arr_; }
    const std::vector<dval_t>& distances() const { return d_arr_; }

private:
    void set_chain(pos_t p, chain_t v);

    std::size_t n_;
    std::uint32_t c_;
    pos_t k_prime_ = 0;
    std::vector<chain_t> c_arr_;
    std::vector<dval_t> d_arr_;
    MaxSegmentTree cmax_index_;
    std::vector<bool> assigned_;
    std::size_t assigned_prefix_ = 0;  // positions 1..assigned_prefix_ are all assigned
};

/// Chain-length histogram (value -> count) over assigned positions.
std::map<chain_t, std::size_t> chain_histogram(const std::vector<chain_t>& chains);

/// Writes "chain_length,count" lines, header included.
void write_histogram_csv(std::ostream& out, const std::map<chain_t, std::size_t>& hist);

}  // namespace batlz
