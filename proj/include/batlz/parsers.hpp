#pragma once

#include <cstdint>
#include <functional>

#include "batlz/chain_ledger.hpp"
#include "batlz/parse.hpp"
#include "batlz/rangemax3d.hpp"
#include "batlz/succinct.hpp"
#include "batlz/suffix_array.hpp"
#include "batlz/text.hpp"

namespace batlz {

/// Immutable per-text structures shared by every parser: the text, SA/ISA and
/// the wavelet matrix over SA (the grid of points (rank, SA[rank])).
struct TextIndex {
    explicit TextIndex(Text t);

    Text text;
    SuffixArrays sa;
    WaveletMatrix wm;

    /// [lo, hi] is the rank range of suffixes sharing a prefix of length
    /// `depth`; narrows it to those whose next symbol is `ch`. Returns false
    /// (leaving lo/hi unspecified) if none remain.
    bool narrow(pos_t& lo, pos_t& hi, pos_t depth, sym_t ch) const;
};

/// Called once per phrase, before its chains are assigned: phrase start i,
/// the phrase, and the ledger state the phrase was chosen from.
using StepObserver = std::function<void(pos_t, const Phrase&, const ChainLedger&)>;

struct ParseOptions {
    SpaceVariant space = SpaceVariant::linear;
    // Re-check each phrase (match and chain bound) as it is emitted; throws
    // std::logic_error on a violation.
    bool debug_checks = false;
    StepObserver observer;
};

/// Classic LZ: longest previous factor at each step, leftmost source.
Parse parse_lz(const TextIndex& idx);

struct Batlz1Result {
    Parse parse;              // LZ phrases cut where chains would exceed c
    std::size_t formula_size;  // z + #{p : C[p] > 0 and (c+1) divides C[p]}
};

/// Cuts the LZ parse `lz` of `t`. Cuts keep the original source alignment.
Batlz1Result parse_batlz1(const Text& t, std::uint32_t c, const Parse& lz);

/// LZ selection, truncating a phrase at its first position whose chain
/// would exceed c (that symbol becomes explicit) and restarting after it.
Parse parse_batlz2(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt = {});

/// Longest valid phrase at every step, via the dynamic range structure.
Parse parse_greedy(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt = {});

Parse parse_minmax(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt = {});
Parse parse_greedier(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt = {});

/// Dispatches on `algo`; c is ignored for lz.
Parse run_parser(const TextIndex& idx, Algo algo, std::uint32_t c, const ParseOptions& opt = {});

}  // namespace batlz
