#include "batlz/parse.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace batlz {
namespace {

constexpr std::array<std::pair<Algo, std::string_view>, 6> algo_names{{
    {Algo::lz, "lz"},
    {Algo::batlz1, "batlz1"},
    {Algo::batlz2, "batlz2"},
    {Algo::greedy, "greedy"},
    {Algo::minmax, "minmax"},
    {Algo::greedier, "greedier"},
}};

}  // namespace

std::string_view to_string(Algo a) {
    for (const auto& [algo, name] : algo_names) {
        if (algo == a) return name;
    }
    return "?";
}

Algo algo_from_string(std::string_view name) {
    for (const auto& [algo, n] : algo_names) {
        if (n == name) return algo;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::vector<pos_t> phrase_starts(const Parse& parse) {
    std::vector<pos_t> starts;
    starts.reserve(parse.phrases.size());
    pos_t i = 1;
    for (const auto& ph : parse.phrases) {
        starts.push_back(i);
        i += ph.len + 1;
    }
    return starts;
}

std::vector<pos_t> phrase_lengths(const Parse& parse) {
    std::vector<pos_t> lens;
    lens.reserve(parse.phrases.size());
    for (const auto& ph : parse.phrases) lens.push_back(ph.len + 1);
    return lens;
}

std::vector<chain_t> replay_chains(const Parse& parse) {
    ChainLedger ledger(parse.n, unbounded_c);
    std::size_t i = 1;
    for (const auto& ph : parse.phrases) {
        if (i + ph.len > parse.n) throw std::invalid_argument("phrases exceed the text length");
        if (ph.len == 0 && ph.source != no_pos) throw std::invalid_argument("literal phrase carries a source");
        ledger.assign_chain(ph.source, static_cast<pos_t>(i), ph.len);
        i += ph.len + 1;
    }
    if (i != parse.n + 1) throw std::invalid_argument("phrases do not cover the text");
    return ledger.chains();
}

std::vector<sym_t> expand(const Parse& parse) {
    std::vector<sym_t> out;
    out.reserve(parse.n);
    for (const auto& ph : parse.phrases) {
        if (ph.len > 0 && (ph.source < 1 || ph.source > out.size())) {
            throw std::invalid_argument("source does not precede its phrase");
        }
        for (pos_t l = 0; l < ph.len; ++l) out.push_back(out[ph.source - 1 + l]);
        out.push_back(ph.literal);
    }
    return out;
}

ValidationReport validate(const Parse& parse, const Text& t) {
    ValidationReport rep;
    std::vector<chain_t> chains;
    try {
        chains = replay_chains(parse);
    } catch (const std::exception& e) {
        rep.message = e.what();
        return rep;
    }
    rep.tiles = parse.n == t.n;
    if (!rep.tiles) {
        rep.message = "parse length differs from text length";
        return rep;
    }

    rep.concatenation = expand(parse) == t.data;
    if (!rep.concatenation) rep.message = "expansion differs from the text";

    rep.leftward = true;
    pos_t i = 1;
    for (const auto& ph : parse.phrases) {
        for (pos_t l = 0; l < ph.len && rep.leftward; ++l) {
            if (t[ph.source + l] != t[i + l]) {
                rep.leftward = false;
                rep.message = "phrase at " + std::to_string(i) + " does not match its source";
            }
        }
        if (t[i + ph.len] != ph.literal) {
            rep.leftward = false;
            rep.message = "literal of phrase at " + std::to_string(i) + " is wrong";
        }
        i += ph.len + 1;
    }

    rep.max_chain = chains.empty() ? 0 : *std::max_element(chains.begin(), chains.end());
    rep.chains = parse.c == unbounded_c || rep.max_chain <= static_cast<chain_t>(parse.c);
    if (!rep.chains) rep.message = "max chain " + std::to_string(rep.max_chain) + " exceeds c";
    return rep;
}

}  // namespace batlz
