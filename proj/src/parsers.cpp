#include "batlz/parsers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "batlz/suffix_tree.hpp"

namespace batlz {

TextIndex::TextIndex(Text t) : text(std::move(t)), sa(build_suffix_arrays(text)), wm(sa.sa) {}

bool TextIndex::narrow(pos_t& lo, pos_t& hi, pos_t depth, sym_t ch) const {
    // Within [lo, hi] the symbols T[SA[r] + depth] are sorted.
    auto sym_at = [&](pos_t r) { return text[sa.sa_at(r) + depth]; };
    pos_t a = lo, b = hi + 1;
    while (a < b) {
        const pos_t mid = a + (b - a) / 2;
        if (sym_at(mid) < ch) a = mid + 1; else b = mid;
    }
    const pos_t first = a;
    b = hi + 1;
    while (a < b) {
        const pos_t mid = a + (b - a) / 2;
        if (sym_at(mid) <= ch) a = mid + 1; else b = mid;
    }
    if (first == a) return false;
    lo = first;
    hi = a - 1;
    return true;
}

namespace {

Parse empty_parse(const Text& t, std::uint32_t c, Algo algo) {
    Parse p;
    p.n = t.n;
    p.c = c;
    p.algo = algo;
    return p;
}

void check_phrase(const Text& t, const ChainLedger& ledger, pos_t i, const Phrase& ph) {
    if (ph.len > 0 && (ph.source < 1 || ph.source >= i)) {
        throw std::logic_error("phrase at " + std::to_string(i) + " has a bad source");
    }
    for (pos_t l = 0; l < ph.len; ++l) {
        if (t[ph.source + l] != t[i + l]) {
            throw std::logic_error("phrase at " + std::to_string(i) + " does not match its source");
        }
    }
    if (ledger.c() == unbounded_c) return;
    for (pos_t p = i; p <= i + ph.len; ++p) {
        if (ledger.chain(p) > static_cast<chain_t>(ledger.c())) {
            throw std::logic_error("chain bound exceeded at " + std::to_string(p));
        }
    }
}

// Appends the phrase, assigns its chains and registers new saturations in
// order. Returns the concatenated D updates.
std::vector<DUpdate> commit(Parse& out, ChainLedger& ledger, const Text& t, pos_t i, const Phrase& ph,
                            const ParseOptions& opt) {
    if (opt.observer) opt.observer(i, ph, ledger);
    out.phrases.push_back(ph);
    ledger.assign_chain(ph.source, i, ph.len);
    if (opt.debug_checks) check_phrase(t, ledger, i, ph);
    std::vector<DUpdate> all;
    for (pos_t p = i; p <= i + ph.len; ++p) {
        if (ledger.saturated(p)) {
            auto ups = ledger.register_saturation(p);
            all.insert(all.end(), ups.begin(), ups.end());
        }
    }
    return all;
}

// Longest previous factor at i with its leftmost source.
Phrase lz_step(const TextIndex& idx, pos_t i) {
    const Text& t = idx.text;
    pos_t lo = 1, hi = static_cast<pos_t>(t.n), len = 0;
    pos_t src = no_pos;
    while (i + len < t.n) {
        if (!idx.narrow(lo, hi, len, t[i + len])) break;
        const auto s = idx.wm.range_min(lo, hi);
        if (!s || *s >= i) break;
        src = *s;
        ++len;
    }
    return {len ? src : no_pos, len, t[i + len]};
}

Parse minmax_family(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt, MatchMode mode) {
    const Text& t = idx.text;
    Parse out = empty_parse(t, c, mode == MatchMode::minmax ? Algo::minmax : Algo::greedier);
    ChainLedger ledger(t.n, c);
    EnhancedSuffixTree st(t, idx.sa);
    for (pos_t i = 1; i <= t.n;) {
        const auto m = st.match_admissible(ledger, i, mode);
        const Phrase ph{m.len ? m.source : no_pos, m.len, t[i + m.len]};
        const auto ups = commit(out, ledger, t, i, ph, opt);
        if (mode == MatchMode::greedier) st.record_saturation(ups);
        st.update_annotations(ledger, i, ph.len, mode);
        i += ph.len + 1;
    }
    return out;
}

}  // namespace

Parse parse_lz(const TextIndex& idx) {
    const Text& t = idx.text;
    Parse out = empty_parse(t, unbounded_c, Algo::lz);
    for (pos_t i = 1; i <= t.n;) {
        const Phrase ph = lz_step(idx, i);
        out.phrases.push_back(ph);
        i += ph.len + 1;
    }
    return out;
}

Batlz1Result parse_batlz1(const Text& t, std::uint32_t c, const Parse& lz) {
    const auto lz_chains = replay_chains(lz);
    Batlz1Result res{empty_parse(t, c, Algo::batlz1), lz.size()};
    for (auto v : lz_chains) {
        if (v > 0 && c != unbounded_c && static_cast<std::uint64_t>(v) % (std::uint64_t{c} + 1) == 0) {
            ++res.formula_size;
        }
    }

    std::vector<chain_t> chain(t.n + 1, 0);
    pos_t i = 1;
    for (const auto& ph : lz.phrases) {
        pos_t a = i;          // current piece start
        pos_t b = ph.source;  // its source
        for (pos_t p = i; p < i + ph.len; ++p) {
            const pos_t off = p - a;
            const pos_t gap = a - b;
            const chain_t v = off < gap ? chain[b + off] + 1 : chain[a + off % gap];
            if (c != unbounded_c && v > static_cast<chain_t>(c)) {
                res.parse.phrases.push_back({off ? b : no_pos, off, t[p]});
                chain[p] = 0;
                a = p + 1;
                b = ph.source + (p + 1 - i);
            } else {
                chain[p] = v;
            }
        }
        const pos_t rest = i + ph.len - a;
        res.parse.phrases.push_back({rest ? b : no_pos, rest, ph.literal});
        chain[i + ph.len] = 0;
        i += ph.len + 1;
    }
    return res;
}

Parse parse_batlz2(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt) {
    const Text& t = idx.text;
    Parse out = empty_parse(t, c, Algo::batlz2);
    ChainLedger ledger(t.n, unbounded_c);
    for (pos_t i = 1; i <= t.n;) {
        Phrase ph = lz_step(idx, i);
        if (c != unbounded_c) {
            // Only the non-overlapping part can grow chains; the rest repeats it.
            const pos_t gap = ph.len ? i - ph.source : 0;
            for (pos_t l = 0; l < ph.len && l < gap; ++l) {
                if (ledger.chain(ph.source + l) + 1 > static_cast<chain_t>(c)) {
                    ph = {l ? ph.source : no_pos, l, t[i + l]};
                    break;
                }
            }
        }
        commit(out, ledger, t, i, ph, opt);
        if (opt.debug_checks && c != unbounded_c) {
            for (pos_t p = i; p <= i + ph.len; ++p) {
                if (ledger.chain(p) > static_cast<chain_t>(c)) throw std::logic_error("batlz2 chain bound exceeded");
            }
        }
        i += ph.len + 1;
    }
    return out;
}

Parse parse_greedy(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt) {
    const Text& t = idx.text;
    Parse out = empty_parse(t, c, Algo::greedy);
    ChainLedger ledger(t.n, c);
    const std::vector<dval_t> d_init(t.n, ledger.infinity());
    RmqForest rf(idx.wm, idx.sa.isa, d_init, opt.space);
    rf.set_debug_checks(opt.debug_checks);

    // ranges[l] is the SA range of T[i..i+l-1], filled lazily.
    std::vector<std::pair<pos_t, pos_t>> ranges;
    for (pos_t i = 1; i <= t.n;) {
        ranges.assign(1, {1, static_cast<pos_t>(t.n)});
        pos_t avail = static_cast<pos_t>(t.n) - i;  // no range exists beyond this length
        auto range_for = [&](pos_t l) -> bool {
            while (ranges.size() <= l && ranges.size() - 1 < avail) {
                auto [lo, hi] = ranges.back();
                const auto depth = static_cast<pos_t>(ranges.size() - 1);
                if (!idx.narrow(lo, hi, depth, t[i + depth])) {
                    avail = depth;
                    break;
                }
                ranges.emplace_back(lo, hi);
                // Only suffix i itself is left; longer lengths cannot succeed.
                if (lo == hi && lo == idx.sa.isa[i - 1]) avail = depth + 1;
            }
            return l < ranges.size();
        };
        // Success is monotone in the length and each query is a pure function
        // of its arguments, so galloping then bisecting finds the same longest
        // length and the same witness as testing 1, 2, ... in turn.
        pos_t len = 0, src = no_pos;
        auto test = [&](pos_t l) -> bool {
            if (l > avail || !range_for(l)) return false;
            const auto w = rf.query(ranges[l].first, ranges[l].second, i, static_cast<dval_t>(l));
            if (!w) return false;
            len = l;
            src = *w;
            return true;
        };
        pos_t fail = 1;
        while (test(fail)) fail *= 2;
        for (pos_t a = len + 1, b = fail; a < b;) {  // longest success lies in [len, b)
            const pos_t mid = a + (b - a) / 2;
            if (test(mid)) a = mid + 1; else b = mid;
        }
        const Phrase ph{len ? src : no_pos, len, t[i + len]};
        for (const auto& up : commit(out, ledger, t, i, ph, opt)) rf.update(up.position, up.value);
        i += ph.len + 1;
    }
    return out;
}

Parse parse_minmax(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt) {
    return minmax_family(idx, c, opt, MatchMode::minmax);
}

Parse parse_greedier(const TextIndex& idx, std::uint32_t c, const ParseOptions& opt) {
    return minmax_family(idx, c, opt, MatchMode::greedier);
}

Parse run_parser(const TextIndex& idx, Algo algo, std::uint32_t c, const ParseOptions& opt) {
    switch (algo) {
        case Algo::lz: return parse_lz(idx);
        case Algo::batlz1: return parse_batlz1(idx.text, c, parse_lz(idx)).parse;
        case Algo::batlz2: return parse_batlz2(idx, c, opt);
        case Algo::greedy: return parse_greedy(idx, c, opt);
        case Algo::minmax: return parse_minmax(idx, c, opt);
        case Algo::greedier: return parse_greedier(idx, c, opt);
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace batlz
