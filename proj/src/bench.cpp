#include "batlz/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "batlz/parsers.hpp"

namespace batlz {

std::string generate_corpus(const CorpusParams& params) {
    if (params.alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
    if (params.mutation_rate < 0.0 || params.mutation_rate > 1.0) {
        throw std::invalid_argument("mutation rate must lie in [0, 1]");
    }
    if (params.mutation_rate > 0.0 && params.alphabet.size() < 2) {
        throw std::invalid_argument("mutations need at least two alphabet symbols");
    }
    if (params.seed_bytes * params.copies > max_input_bytes) throw std::invalid_argument("corpus too large");

    std::mt19937_64 rng(params.rng_seed);
    const std::size_t k = params.alphabet.size();
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::uniform_int_distribution<std::size_t> other(1, k > 1 ? k - 1 : 1);
    std::bernoulli_distribution mutate(params.mutation_rate);

    std::vector<std::size_t> seed(params.seed_bytes);
    for (auto& s : seed) s = pick(rng);

    std::string out;
    out.reserve(params.seed_bytes * params.copies);
    for (std::size_t c = 0; c < params.copies; ++c) {
        for (auto s : seed) {
            if (mutate(rng)) s = (s + other(rng)) % k;
            out.push_back(params.alphabet[s]);
        }
    }
    return out;
}

std::string format_c(std::uint32_t c) {
    return c == unbounded_c ? "inf" : std::to_string(c);
}

std::uint32_t parse_c(const std::string& s) {
    if (s == "inf") return unbounded_c;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || v > unbounded_c) throw std::invalid_argument("bad chain bound '" + s + "'");
    return static_cast<std::uint32_t>(v);
}

std::string histogram_file_name(const BenchRow& row) {
    return "hist_" + row.file + "_" + std::string(to_string(row.algo)) + "_" + format_c(row.c) + ".csv";
}

namespace {

void fill_stats(BenchRow& row, const Parse& parse, const Text& t) {
    const auto rep = validate(parse, t);
    if (!rep.ok()) {
        row.error = "invalid parse: " + rep.message;
        return;
    }
    const auto chains = replay_chains(parse);
    row.max_chain = rep.max_chain;
    row.mean_chain = static_cast<double>(std::accumulate(chains.begin(), chains.end(), std::int64_t{0})) /
                     static_cast<double>(chains.size());
    row.histogram = chain_histogram(chains);
}

BenchRow run_cell(const TextIndex& idx, const std::string& name, Algo algo, std::uint32_t c, std::size_t z_lz,
                  const BenchConfig& cfg) {
    BenchRow row;
    row.file = name;
    row.n = idx.text.n;
    row.algo = algo;
    row.c = algo == Algo::lz ? unbounded_c : c;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        Parse parse;
        if (algo == Algo::batlz1) {
            auto res = parse_batlz1(idx.text, c, parse_lz(idx));
            row.zprime = res.formula_size;
            parse = std::move(res.parse);
        } else {
            ParseOptions opt;
            opt.space = cfg.space;
            parse = run_parser(idx, algo, c, opt);
            row.zprime = parse.size();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        row.overhead = static_cast<double>(row.zprime) / static_cast<double>(algo == Algo::lz ? row.zprime : z_lz);
        fill_stats(row, parse, idx.text);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchInput>& inputs, const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    for (const auto& in : inputs) {
        const TextIndex idx(ingest(in.bytes));
        BenchRow lz = run_cell(idx, in.name, Algo::lz, unbounded_c, 0, cfg);
        const std::size_t z = lz.zprime;
        rows.push_back(std::move(lz));

        std::vector<std::pair<Algo, std::uint32_t>> cells;
        for (auto a : cfg.algos) {
            if (a == Algo::lz) continue;
            for (auto c : cfg.cs) cells.emplace_back(a, c);
        }
        std::vector<BenchRow> out(cells.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next++; k < cells.size(); k = next++) {
                out[k] = run_cell(idx, in.name, cells[k].first, cells[k].second, z, cfg);
            }
        };
        const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cells.size())));
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        }
        for (auto& r : out) rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.file, a.algo, a.c) < std::tie(b.file, b.algo, b.c);
    });
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool deterministic) {
    out << "file,n,algo,c,zprime,overhead,max_chain,mean_chain,seconds\n";
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.file << ',' << r.n << ',' << to_string(r.algo) << ',' << format_c(r.c) << ',';
        if (!r.error.empty()) {
            line << ",,,,";
        } else {
            line << r.zprime << ',' << std::fixed << std::setprecision(6) << r.overhead << ',' << r.max_chain << ','
                 << r.mean_chain << ',' << (deterministic ? 0.0 : r.seconds);
        }
        out << line.str() << '\n';
    }
}

}  // namespace batlz
