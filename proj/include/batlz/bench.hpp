#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "batlz/chain_ledger.hpp"
#include "batlz/parse.hpp"
#include "batlz/rangemax3d.hpp"

namespace batlz {

/// Repetitive synthetic text: `copies` copies of a uniformly random seed
/// block, each copy independently point-mutated (a mutated symbol is
/// replaced by a different alphabet symbol).
struct CorpusParams {
    std::size_t seed_bytes = 10000;
    std::size_t copies = 100;
    double mutation_rate = 0.005;
    std::uint64_t rng_seed = 1;
    std::string alphabet = "ACGT";
};

/// Throws std::invalid_argument on bad parameters. Same parameters, same bytes.
std::string generate_corpus(const CorpusParams& params);

struct BenchInput {
    std::string name;
    std::string bytes;
};

struct BenchRow {
    std::string file;
    std::size_t n = 0;
    Algo algo = Algo::lz;
    std::uint32_t c = unbounded_c;
    std::size_t zprime = 0;
    double overhead = 0;
    chain_t max_chain = 0;
    double mean_chain = 0;
    double seconds = 0;
    std::string error;  // empty on success
    std::map<chain_t, std::size_t> histogram;
};

struct BenchConfig {
    std::vector<Algo> algos;
    std::vector<std::uint32_t> cs;
    SpaceVariant space = SpaceVariant::linear;
    unsigned jobs = 1;
};

/// Runs lz once per input plus every (algo, c) cell with algo != lz. Rows are
/// sorted by (file, algo, c). A failing cell carries its message in `error`
/// and the run continues.
std::vector<BenchRow> run_bench(const std::vector<BenchInput>& inputs, const BenchConfig& cfg);

/// CSV with header "file,n,algo,c,zprime,overhead,max_chain,mean_chain,seconds".
/// Unbounded c is written as "inf"; with `deterministic` every time is 0.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool deterministic);

/// "hist_<file>_<algo>_<c>.csv".
std::string histogram_file_name(const BenchRow& row);

std::string format_c(std::uint32_t c);

/// Parses a decimal c, or "inf" for unbounded.
std::uint32_t parse_c(const std::string& s);

}  // namespace batlz
