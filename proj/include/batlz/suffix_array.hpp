#pragma once

#include <vector>

#include "batlz/text.hpp"

namespace batlz {

/// Suffix array and its inverse, both storing 1-based values:
/// sa[r-1] is the text position of the r-th smallest suffix and
/// isa[p-1] is the rank of suffix T[p..].
struct SuffixArrays {
    std::vector<pos_t> sa;
    std::vector<pos_t> isa;

    pos_t sa_at(pos_t rank) const { return sa[rank - 1]; }
    pos_t isa_at(pos_t pos) const { return isa[pos - 1]; }
    std::size_t size() const { return sa.size(); }
};

/// Builds SA and ISA with induced sorting (SA-IS), O(n) time.
SuffixArrays build_suffix_arrays(const Text& t);

/// Kasai LCP: lcp[r] = |lcp(T[sa[r-1]..], T[sa[r]..])| for r >= 1 (0-based
/// rank index), lcp[0] = 0.
std::vector<pos_t> build_lcp(const Text& t, const SuffixArrays& sa);

}  // namespace batlz
