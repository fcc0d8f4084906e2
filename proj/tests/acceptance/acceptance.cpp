// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any hard
// criterion fails. Criterion 6 is soft and only warns.
//
//   batlz_acceptance --data tests/data [--out DIR] [--only 1,3,8]

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "batlz/bench.hpp"
#include "batlz/codec.hpp"
#include "batlz/parsers.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace batlz;

namespace {

enum class Verdict { pass, fail, warn };

struct Outcome {
    Verdict verdict = Verdict::pass;
    std::string detail;
};

// Collects the first few failure messages of a criterion.
class Failures {
public:
    void add(std::string msg) {
        if (count_++ < 5) msgs_.push_back(std::move(msg));
    }
    bool any() const { return count_ > 0; }
    std::string summary() const {
        std::string s = std::to_string(count_) + " failure(s)";
        for (const auto& m : msgs_) s += "; " + m;
        return s;
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> msgs_;
};

Outcome verdict_of(const Failures& f, std::string ok_detail) {
    if (f.any()) return {Verdict::fail, f.summary()};
    return {Verdict::pass, std::move(ok_detail)};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(prec) << v;
    return s.str();
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string as_string(const std::vector<std::uint8_t>& b) { return {b.begin(), b.end()}; }

// Serializes, reloads and checks every addressable position: byte and hop
// count against the replayed chain. Returns an empty string on success.
std::string check_access(const Parse& parse, const Text& t, const std::string& original) {
    const auto bytes = CompressedFile::from_parse(parse, t).serialize();
    const auto f = CompressedFile::load(bytes);
    if (f.serialize() != bytes) return "reserialization differs";
    if (f.decompress() != original) return "decompression differs";
    const auto chains = replay_chains(parse);
    for (pos_t p = 1; p < t.n; ++p) {
        const auto [b, hops] = f.access(p);
        if (b != static_cast<std::uint8_t>(original[p - 1])) return "wrong byte at " + std::to_string(p);
        if (static_cast<chain_t>(hops) != chains[p - 1]) {
            return "hops " + std::to_string(hops) + " != C " + std::to_string(chains[p - 1]) + " at " +
                   std::to_string(p);
        }
    }
    return {};
}

// 1: worked example, exact.
Outcome worked_examples() {
    const auto t0 = std::chrono::steady_clock::now();
    Failures f;
    const TextIndex idx(ingest(std::string_view("alabaralalabarda")));

    const Parse lz = parse_lz(idx);
    const std::vector<chain_t> lz_c{0, 0, 1, 0, 1, 0, 1, 1, 2, 0, 2, 1, 2, 1, 0, 1, 0};
    if (lz.size() != 7) f.add("lz has " + std::to_string(lz.size()) + " phrases");
    if (replay_chains(lz) != lz_c) f.add("lz chains " + join(replay_chains(lz)));

    const std::vector<chain_t> greedy_c{0, 0, 1, 0, 2, 0, 1, 1, 2, 0, 2, 1, 0, 1, 0, 1, 0};
    for (auto v : {SpaceVariant::linear, SpaceVariant::fast}) {
        ParseOptions opt;
        opt.space = v;
        const Parse g = parse_greedy(idx, 2, opt);
        if (g.size() != 8) f.add("greedy has " + std::to_string(g.size()) + " phrases");
        if (replay_chains(g) != greedy_c) f.add("greedy chains " + join(replay_chains(g)));
        const Parse gr = parse_greedier(idx, 2, opt);
        if (gr.size() != 7) f.add("greedier has " + std::to_string(gr.size()) + " phrases");
        if (!validate(gr, idx.text).ok()) f.add("greedier parse invalid");
    }
    const double secs = seconds_since(t0);
    if (secs >= 1.0) f.add("took " + fmt(secs, 3) + " s");
    return verdict_of(f, "lz z=7, greedy(c=2) z=8, greedier(c=2) z=7, chain rows exact, " + fmt(secs, 3) + " s");
}

// 2: a^{n-1} followed by the sentinel.
Outcome overlap_case() {
    Failures f;
    for (std::size_t n : {5u, 10u, 1000u}) {
        const std::string s(n - 1, 'a');
        const TextIndex idx(ingest(s));
        const Parse lz = parse_lz(idx);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        if (lz.size() != 2) f.add(tag + std::to_string(lz.size()) + " phrases");
        const auto chains = replay_chains(lz);
        for (pos_t p = 2; p < n; ++p) {
            if (chains[p - 1] != 1) {
                f.add(tag + "C[" + std::to_string(p) + "]=" + std::to_string(chains[p - 1]));
                break;
            }
        }
        const auto file = CompressedFile::load(CompressedFile::from_parse(lz, idx.text).serialize());
        const auto ex = file.extract(static_cast<pos_t>(n - 1), 1);
        if (ex.bytes != "a" || ex.hops[0] != 1) f.add(tag + "last position took " + std::to_string(ex.hops[0]) + " hops");
    }
    return verdict_of(f, "n in {5,10,1000}: 2 phrases, copied chains 1, last position 1 hop");
}

// 3a: range structure against a scan.
std::string rangemax_oracle(std::size_t& ops_done) {
    std::mt19937_64 rng(2024);
    while (ops_done < 100000) {
        const std::size_t n = 1 + rng() % 512;
        std::vector<pos_t> sa(n), isa(n);
        std::iota(sa.begin(), sa.end(), 1u);
        std::shuffle(sa.begin(), sa.end(), rng);
        for (pos_t r = 1; r <= n; ++r) isa[sa[r - 1] - 1] = r;
        const WaveletMatrix wm(sa);
        std::vector<dval_t> d(n);
        for (auto& v : d) v = rng() % 2 ? static_cast<dval_t>(n + 1) : static_cast<dval_t>(1 + rng() % (n + 1));
        RmqForest lin(wm, isa, d, SpaceVariant::linear);
        RmqForest fast(wm, isa, d, SpaceVariant::fast);
        for (int op = 0; op < 1000; ++op, ++ops_done) {
            if (rng() % 3 == 0) {
                const pos_t k = static_cast<pos_t>(1 + rng() % n);
                d[k - 1] = static_cast<dval_t>(1 + rng() % (n + 1));
                lin.update(k, d[k - 1]);
                fast.update(k, d[k - 1]);
                continue;
            }
            pos_t sp = static_cast<pos_t>(1 + rng() % n), ep = static_cast<pos_t>(1 + rng() % n);
            if (sp > ep && rng() % 4) std::swap(sp, ep);
            const pos_t i_max = static_cast<pos_t>(1 + rng() % (n + 1));
            const pos_t i_min = rng() % 2 ? 1 : static_cast<pos_t>(1 + rng() % n);
            const dval_t ell = static_cast<dval_t>(1 + rng() % (n + 1));
            bool expect = false;
            for (pos_t s = i_min; s < i_max && s <= n && !expect; ++s) {
                expect = isa[s - 1] >= sp && isa[s - 1] <= ep && d[s - 1] >= ell;
            }
            for (const RmqForest* rf : {&lin, &fast}) {
                const auto got = rf->query(sp, ep, i_max, ell, i_min);
                const char* name = rf == &lin ? "linear" : "fast";
                if (got.has_value() != expect) return std::string(name) + ": nonemptiness differs";
                if (got) {
                    const pos_t s = *got;
                    const bool ok = s >= i_min && s < i_max && s <= n && isa[s - 1] >= sp && isa[s - 1] <= ep &&
                                    d[s - 1] >= ell;
                    if (!ok) return std::string(name) + ": witness " + std::to_string(s) + " violates a range";
                }
            }
        }
    }
    return {};
}

// 3b and 3c: every greedy and greedier phrase has the longest valid length,
// computed by brute force from chains replayed independently.
std::string parser_step_oracle(Algo algo, std::size_t& texts, std::size_t& steps) {
    std::mt19937_64 rng(algo == Algo::greedy ? 71 : 72);
    for (texts = 0; texts < 1000; ++texts) {
        const std::size_t n = rng() % 64;  // plus the sentinel: at most 64
        const unsigned sigma = 1 + rng() % 4;
        const std::string s = texts % 2 ? oracle::random_text(rng, n, sigma) : oracle::random_repetitive(rng, n, sigma);
        const TextIndex idx(ingest(s));
        for (std::uint32_t c : {1u, 2u, 3u}) {
            oracle::StepChecker checker(idx.text, c);
            std::string why;
            ParseOptions opt;
            opt.space = texts % 2 ? SpaceVariant::fast : SpaceVariant::linear;
            opt.observer = [&](pos_t i, const Phrase& ph, const ChainLedger& ledger) {
                if (why.empty()) why = checker.check(i, ph, ledger, true);
            };
            const Parse p = run_parser(idx, algo, c, opt);
            steps += checker.steps();
            if (why.empty() && !validate(p, idx.text).ok()) why = "invalid parse";
            if (!why.empty()) return "text '" + s + "' c=" + std::to_string(c) + ": " + why;
        }
    }
    return {};
}

// 3d: assign_chain against hop-by-hop simulation.
std::string assign_chain_oracle(std::size_t& phrases, std::size_t& overlapping) {
    std::mt19937_64 rng(99);
    while (phrases < 10000) {
        const std::size_t n = 2 + rng() % 120;
        Parse p;
        p.n = n;
        ChainLedger ledger(n, unbounded_c);
        for (pos_t i = 1; i <= n;) {
            const pos_t room = static_cast<pos_t>(n - i);
            pos_t len = 0, src = no_pos;
            if (i > 1 && room > 0 && rng() % 5 != 0) {
                // Half of the sources sit close to i, so copies overlap often.
                src = rng() % 2 ? static_cast<pos_t>(i - 1 - rng() % std::min<pos_t>(i - 1, 3))
                                : static_cast<pos_t>(1 + rng() % (i - 1));
                len = static_cast<pos_t>(1 + rng() % room);
                if (len > i - src) ++overlapping;
            }
            p.phrases.push_back({src, len, 1});
            ledger.assign_chain(src, i, len);
            i += len + 1;
            ++phrases;
        }
        if (ledger.chains() != oracle::hop_chains(p)) return "chains differ on a parse of length " + std::to_string(n);
    }
    return {};
}

Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    Failures f;
    std::size_t ops = 0, g_texts = 0, g_steps = 0, gr_texts = 0, gr_steps = 0, phrases = 0, overlapping = 0;
    if (auto e = rangemax_oracle(ops); !e.empty()) f.add("(a) " + e);
    if (auto e = parser_step_oracle(Algo::greedy, g_texts, g_steps); !e.empty()) f.add("(b) " + e);
    if (auto e = parser_step_oracle(Algo::greedier, gr_texts, gr_steps); !e.empty()) f.add("(c) " + e);
    if (auto e = assign_chain_oracle(phrases, overlapping); !e.empty()) f.add("(d) " + e);
    const double secs = seconds_since(t0);
    if (secs > 300) f.add("took " + fmt(secs, 1) + " s");
    return verdict_of(f, "(a) " + std::to_string(ops) + " ops both variants; (b) greedy " + std::to_string(g_steps) +
                             " steps; (c) greedier " + std::to_string(gr_steps) + " steps, " +
                             std::to_string(g_texts) + " texts x c in {1,2,3}; (d) " + std::to_string(phrases) +
                             " phrases, " + std::to_string(overlapping) + " overlapping; " + fmt(secs, 1) + " s");
}

// Regression corpus: fixed small inputs, seeded random texts and the files
// under the data directory.
std::vector<BenchInput> regression_corpus(const fs::path& data) {
    std::vector<BenchInput> in;
    in.push_back({"worked", "alabaralalabarda"});
    in.push_back({"empty", ""});
    in.push_back({"single", "x"});
    in.push_back({"run", std::string(300, 'a')});
    in.push_back({"period3", [] {
                      std::string s;
                      for (int k = 0; k < 100; ++k) s += "abc";
                      return s;
                  }()});
    std::string all_bytes(256, '\0');
    std::iota(all_bytes.begin(), all_bytes.end(), '\0');
    in.push_back({"bytes", all_bytes + all_bytes});
    std::mt19937_64 rng(5);
    for (int k = 0; k < 24; ++k) {
        const std::size_t n = 1 + rng() % 3000;
        const unsigned sigma = 1 + rng() % 8;
        in.push_back({"rand" + std::to_string(k),
                      k % 2 ? oracle::random_text(rng, n, sigma) : oracle::random_repetitive(rng, n, sigma)});
    }
    for (std::uint64_t seed : {1u, 2u}) {
        CorpusParams params;
        params.seed_bytes = 500;
        params.copies = 40;
        params.mutation_rate = 0.01;
        params.rng_seed = seed;
        in.push_back({"gen" + std::to_string(seed), generate_corpus(params)});
    }
    if (fs::is_directory(data)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(data)) {
            if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& p : files) in.push_back({p.filename().string(), as_string(read_file_bytes(p))});
    }
    return in;
}

// 4: every parse valid, hops equal chains.
Outcome universal_validity(const fs::path& data) {
    const auto t0 = std::chrono::steady_clock::now();
    Failures f;
    const auto corpus = regression_corpus(data);
    const std::vector<Algo> algos{Algo::lz, Algo::batlz1, Algo::batlz2, Algo::greedy, Algo::minmax, Algo::greedier};
    const std::vector<std::uint32_t> cs{1, 2, 3, 5, 8, 16, unbounded_c};
    std::size_t parses = 0, positions = 0;
    for (const auto& in : corpus) {
        const TextIndex idx(ingest(in.bytes));
        const Parse lz = parse_lz(idx);
        for (auto algo : algos) {
            for (auto c : cs) {
                if (algo == Algo::lz && c != unbounded_c) continue;
                const std::string tag = in.name + " " + std::string(to_string(algo)) + " c=" + format_c(c) + ": ";
                try {
                    const Parse p = algo == Algo::batlz1 ? parse_batlz1(idx.text, c, lz).parse : run_parser(idx, algo, c);
                    const auto rep = validate(p, idx.text);
                    if (!rep.ok()) {
                        f.add(tag + rep.message);
                        continue;
                    }
                    if (c != unbounded_c && rep.max_chain > static_cast<chain_t>(c)) f.add(tag + "chain above c");
                    if (auto e = check_access(p, idx.text, in.bytes); !e.empty()) f.add(tag + e);
                    ++parses;
                    positions += in.bytes.size();
                } catch (const std::exception& e) {
                    f.add(tag + e.what());
                }
            }
        }
    }
    return verdict_of(f, std::to_string(corpus.size()) + " inputs, " + std::to_string(parses) + " parses, " +
                             std::to_string(positions) + " positions extracted, " + fmt(seconds_since(t0), 1) + " s");
}

std::string corpus_1m() {
    CorpusParams params;
    params.seed_bytes = 10000;
    params.copies = 100;
    params.mutation_rate = 0.005;
    params.rng_seed = 1;
    return generate_corpus(params);
}

const BenchRow* find_row(const std::vector<BenchRow>& rows, Algo a, std::uint32_t c) {
    for (const auto& r : rows) {
        if (r.algo == a && (a == Algo::lz || r.c == c)) return &r;
    }
    return nullptr;
}

void write_histograms(const fs::path& out, const std::vector<BenchRow>& rows) {
    fs::create_directories(out);
    for (const auto& r : rows) {
        if (!r.error.empty()) continue;
        std::ofstream h(out / histogram_file_name(r));
        write_histogram_csv(h, r.histogram);
    }
}

// 5 and 6 share the corpus and the bench rows.
struct TrendRun {
    std::vector<BenchRow> rows;
    double seconds = 0;
};

TrendRun run_trend() {
    const auto t0 = std::chrono::steady_clock::now();
    BenchConfig cfg;
    cfg.algos = {Algo::batlz1, Algo::batlz2, Algo::greedy, Algo::minmax, Algo::greedier};
    cfg.cs = {4, 8, 16, 20, 24, 32};
    cfg.space = SpaceVariant::fast;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    TrendRun run;
    run.rows = run_bench({{"synthetic1m", corpus_1m()}}, cfg);
    // The LZ parse's own maximum chain as an additional bound.
    const BenchRow* lz = find_row(run.rows, Algo::lz, unbounded_c);
    if (lz && lz->error.empty()) {
        cfg.algos = {Algo::greedy, Algo::greedier};
        cfg.cs = {static_cast<std::uint32_t>(lz->max_chain)};
        for (auto& r : run_bench({{"synthetic1m", corpus_1m()}}, cfg)) {
            if (r.algo != Algo::lz) run.rows.push_back(std::move(r));
        }
    }
    run.seconds = seconds_since(t0);
    return run;
}

Outcome trend(const TrendRun& run, std::string& info) {
    Failures f;
    const std::vector<std::uint32_t> cs{4, 8, 16, 24, 32};
    const BenchRow* lz = find_row(run.rows, Algo::lz, unbounded_c);
    if (!lz || !lz->error.empty()) return {Verdict::fail, "lz row missing"};
    for (const auto& r : run.rows) {
        if (!r.error.empty()) f.add(std::string(to_string(r.algo)) + " c=" + format_c(r.c) + ": " + r.error);
    }
    auto ov = [&](Algo a, std::uint32_t c) {
        const BenchRow* r = find_row(run.rows, a, c);
        return r && r->error.empty() ? r->overhead : -1.0;
    };
    for (auto a : {Algo::batlz1, Algo::batlz2, Algo::greedy, Algo::minmax, Algo::greedier}) {
        for (std::size_t k = 1; k < cs.size(); ++k) {
            if (ov(a, cs[k]) > ov(a, cs[k - 1])) {
                f.add(std::string(to_string(a)) + " overhead rises from c=" + std::to_string(cs[k - 1]) + " to c=" +
                      std::to_string(cs[k]));
            }
        }
    }
    for (auto c : cs) {
        const double gr = ov(Algo::greedier, c), g = ov(Algo::greedy, c), b1 = ov(Algo::batlz1, c);
        if (!(gr <= g && g <= b1)) {
            f.add("c=" + std::to_string(c) + ": greedier " + fmt(gr) + ", greedy " + fmt(g) + ", batlz1 " + fmt(b1));
        }
        if (c >= static_cast<std::uint32_t>(lz->max_chain) && (g != 1.0 || gr != 1.0)) {
            f.add("c=" + std::to_string(c) + " >= lz max chain but greedy " + fmt(g) + ", greedier " + fmt(gr));
        }
    }
    if (!(ov(Algo::greedier, 24) <= 1.10)) f.add("greedier at c=24 is " + fmt(ov(Algo::greedier, 24)));
    if (run.seconds > 1800) f.add("took " + fmt(run.seconds, 1) + " s");

    std::ostringstream d;
    d << "z=" << lz->zprime << " lz max chain " << lz->max_chain << "; overheads";
    for (auto c : cs) {
        d << " c=" << c << ":" << fmt(ov(Algo::greedier, c), 4) << "/" << fmt(ov(Algo::greedy, c), 4) << "/"
          << fmt(ov(Algo::batlz1, c), 4);
    }
    d << " (greedier/greedy/batlz1); " << fmt(run.seconds, 1) << " s";

    const auto mc = static_cast<std::uint32_t>(lz->max_chain);
    info = "at c = lz max chain (" + std::to_string(mc) + "): greedy " + fmt(ov(Algo::greedy, mc)) + ", greedier " +
           fmt(ov(Algo::greedier, mc));
    return verdict_of(f, d.str());
}

Outcome side_effect(const TrendRun& run, const fs::path& out) {
    const BenchRow* lz = find_row(run.rows, Algo::lz, unbounded_c);
    const BenchRow* gr = find_row(run.rows, Algo::greedier, 20);
    if (!lz || !gr || !lz->error.empty() || !gr->error.empty()) return {Verdict::warn, "rows missing"};
    write_histograms(out, run.rows);
    const std::string d = "mean chain greedier(c=20) " + fmt(gr->mean_chain, 4) + " vs lz " + fmt(lz->mean_chain, 4) +
                          "; histograms in " + out.string();
    return {gr->mean_chain < lz->mean_chain ? Verdict::pass : Verdict::warn, d};
}

// 7: greedy on 5 MB within 10 minutes.
Outcome throughput() {
    CorpusParams params;
    params.seed_bytes = 10000;
    params.copies = 500;
    params.mutation_rate = 0.005;
    params.rng_seed = 7;
    const std::string s = generate_corpus(params);
    const auto t0 = std::chrono::steady_clock::now();
    const TextIndex idx(ingest(s));
    const Parse p = parse_greedy(idx, 16);
    const double secs = seconds_since(t0);
    Failures f;
    const auto rep = validate(p, idx.text);
    if (!rep.ok()) f.add(rep.message);
    if (secs > 600) f.add("took " + fmt(secs, 1) + " s");
    return verdict_of(f, std::to_string(s.size()) + " bytes, greedy c=16 (linear space), z'=" +
                             std::to_string(p.size()) + ", " + fmt(secs, 1) + " s (" +
                             fmt(static_cast<double>(s.size()) / 1e6 / (secs / 60), 2) + " MB/min)");
}

// 8: roundtrips and the checked-in golden file.
Outcome format_check(const fs::path& data) {
    Failures f;
    std::mt19937_64 rng(8);
    std::size_t roundtrips = 0;
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = rng() % 2000;
        const std::string s = k % 3 == 0 ? oracle::random_text(rng, n, 256) : oracle::random_repetitive(rng, n, 1 + k % 6);
        const TextIndex idx(ingest(s));
        for (auto algo : {Algo::lz, Algo::greedy, Algo::greedier}) {
            const Parse p = run_parser(idx, algo, 1 + k % 4);
            const auto bytes = CompressedFile::from_parse(p, idx.text).serialize();
            const auto back = CompressedFile::load(bytes);
            if (back.decompress() != s) f.add("roundtrip " + std::to_string(k) + " decodes differently");
            if (back.serialize() != bytes) f.add("roundtrip " + std::to_string(k) + " reserializes differently");
            if (back.to_parse().phrases != p.phrases) f.add("roundtrip " + std::to_string(k) + " parse differs");
            ++roundtrips;
        }
    }
    try {
        const auto golden = read_file_bytes(data / "golden.batlz");
        const std::string plain = as_string(read_file_bytes(data / "golden.txt"));
        const auto file = CompressedFile::load(golden);
        if (file.decompress() != plain) f.add("golden file decodes to different bytes");
        if (file.serialize() != golden) f.add("golden file reserializes differently");
        // The encoder still produces the same bytes for the same input.
        const TextIndex idx(ingest(plain));
        const auto again = CompressedFile::from_parse(parse_greedy(idx, file.c()), idx.text).serialize();
        if (again != golden) f.add("recompressing the golden plaintext gives different bytes");
    } catch (const std::exception& e) {
        f.add(std::string("golden: ") + e.what());
    }
    return verdict_of(f, std::to_string(roundtrips) + " roundtrips byte-identical; golden file decodes and re-encodes exactly");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::string data = "tests/data";
    std::string out = "acceptance_out";
    std::vector<int> only;
    app.add_option("--data", data, "directory with golden and regression files");
    app.add_option("--out", out, "directory for histogram CSVs");
    app.add_option("--only", only, "run only these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    auto wanted = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };
    bool failed = false;
    auto report = [&](int k, const std::string& name, const Outcome& o) {
        const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::warn ? "WARN" : "FAIL";
        std::cout << "criterion " << k << " " << tag << "  " << name << ": " << o.detail << std::endl;
        if (o.verdict == Verdict::fail) failed = true;
    };
    auto guarded = [](const std::function<Outcome()>& fn) {
        try {
            return fn();
        } catch (const std::exception& e) {
            return Outcome{Verdict::fail, std::string("exception: ") + e.what()};
        }
    };

    if (wanted(1)) report(1, "worked examples", guarded(worked_examples));
    if (wanted(2)) report(2, "overlap case", guarded(overlap_case));
    if (wanted(3)) report(3, "oracle equivalence", guarded(oracle_equivalence));
    if (wanted(4)) report(4, "universal validity", guarded([&] { return universal_validity(data); }));
    if (wanted(5) || wanted(6)) {
        TrendRun run;
        std::string info;
        const Outcome trend_outcome = guarded([&] {
            run = run_trend();
            return trend(run, info);
        });
        if (wanted(5)) {
            report(5, "overhead trend", trend_outcome);
            if (!info.empty()) std::cout << "  info: " << info << std::endl;
        }
        if (wanted(6)) report(6, "chain side effect (soft)", guarded([&] { return side_effect(run, out); }));
    }
    if (wanted(7)) report(7, "throughput", guarded(throughput));
    if (wanted(8)) report(8, "format", guarded([&] { return format_check(data); }));
    return failed ? 1 : 0;
}
