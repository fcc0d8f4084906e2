#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "batlz/chain_ledger.hpp"
#include "batlz/text.hpp"

namespace batlz {

enum class Algo { lz, batlz1, batlz2, greedy, minmax, greedier };

std::string_view to_string(Algo a);
/// Throws std::invalid_argument on an unknown name.
Algo algo_from_string(std::string_view name);

/// Phrase T[i..i+len]: T[i..i+len-1] copied from T[source..], then `literal`.
struct Phrase {
    pos_t source = no_pos;  // 1-based; no_pos iff len == 0
    pos_t len = 0;
    sym_t literal = 0;      // dense code

    friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct Parse {
    std::vector<Phrase> phrases;
    std::size_t n = 0;
    std::uint32_t c = unbounded_c;
    Algo algo = Algo::lz;

    std::size_t size() const { return phrases.size(); }
};

/// 1-based start position of every phrase.
std::vector<pos_t> phrase_starts(const Parse& parse);

/// Replays the chain-length rule over the parse. Throws std::invalid_argument
/// when the phrases do not tile 1..n or a source does not precede its phrase.
std::vector<chain_t> replay_chains(const Parse& parse);

/// Rebuilds the symbol sequence by left-to-right copying.
std::vector<sym_t> expand(const Parse& parse);

struct ValidationReport {
    bool tiles = false;          // phrase lengths sum to n, sources precede phrases
    bool concatenation = false;  // expanding the parse reproduces T
    bool leftward = false;       // every copied part matches its source verbatim
    bool chains = false;         // max replayed chain <= c
    chain_t max_chain = 0;
    std::string message;

    bool ok() const { return tiles && concatenation && leftward && chains; }
};

ValidationReport validate(const Parse& parse, const Text& t);

/// Phrase lengths (copy_len + 1) in order.
std::vector<pos_t> phrase_lengths(const Parse& parse);

}  // namespace batlz
