// batlz: compress / decompress / extract / stats / verify / bench / gen.
//
// Exit codes: 0 ok, 1 verification or parameter failure, 2 I/O error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "batlz/bench.hpp"
#include "batlz/codec.hpp"
#include "batlz/parsers.hpp"

namespace fs = std::filesystem;
using namespace batlz;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_io = 2;

bool debug_asserts() {
    const char* v = std::getenv("BATLZ_DEBUG_ASSERT");
    return v != nullptr && std::string(v) == "1";
}

std::string as_string(const std::vector<std::uint8_t>& b) { return {b.begin(), b.end()}; }

void write_text_file(const fs::path& path, const std::string& s) {
    write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

SpaceVariant space_from_string(const std::string& s) {
    return s == "fast" ? SpaceVariant::fast : SpaceVariant::linear;
}

std::vector<std::uint32_t> parse_c_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) out.push_back(parse_c(item));
    }
    return out;
}

std::vector<Algo> parse_algo_list(const std::string& s) {
    std::vector<Algo> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) out.push_back(algo_from_string(item));
    }
    return out;
}

struct CompressArgs {
    std::string input, output, algo = "greedy", c = "16", space = "linear";
    std::size_t baseline_z = 0;
};

int cmd_compress(const CompressArgs& a) {
    const Algo algo = algo_from_string(a.algo);
    const std::uint32_t c = algo == Algo::lz ? unbounded_c : parse_c(a.c);
    if (algo != Algo::lz && c < 1) throw std::invalid_argument("c must be at least 1");

    const auto bytes = read_file_bytes(a.input);
    const TextIndex idx(ingest(bytes));
    ParseOptions opt;
    opt.space = space_from_string(a.space);
    opt.debug_checks = debug_asserts();
    const Parse parse = run_parser(idx, algo, c, opt);

    const auto rep = validate(parse, idx.text);
    if (!rep.ok()) {
        std::cerr << "error: produced an invalid parse: " << rep.message << '\n';
        return exit_fail;
    }
    CompressedFile::from_parse(parse, idx.text).save_file(a.output);

    std::cout << "n=" << idx.text.n << " algo=" << to_string(algo) << " c=" << format_c(parse.c)
              << " zprime=" << parse.size() << " max_chain=" << rep.max_chain;
    if (a.baseline_z > 0) {
        std::cout << " overhead=" << std::fixed << std::setprecision(6) << static_cast<double>(parse.size()) / static_cast<double>(a.baseline_z);
    }
    std::cout << '\n';
    return exit_ok;
}

int cmd_decompress(const std::string& input, const std::string& output) {
    const auto f = CompressedFile::load_file(input);
    const std::string text = f.decompress();
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        write_text_file(output, text);
    }
    return exit_ok;
}

int cmd_extract(const std::string& input, pos_t pos, pos_t len, bool show_hops) {
    const auto f = CompressedFile::load_file(input);
    if (pos < 1 || static_cast<std::uint64_t>(pos) + len > f.n()) {
        std::cerr << "error: range " << pos << "+" << len << " is outside 1.." << f.n() - 1 << '\n';
        return exit_fail;
    }
    const auto ex = f.extract(pos, len);
    std::cout << ex.bytes;
    if (show_hops) {
        std::cout << '\n';
        for (std::size_t k = 0; k < ex.hops.size(); ++k) std::cout << (k ? "," : "") << ex.hops[k];
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_stats(const std::string& input, const std::string& hist_path) {
    const auto f = CompressedFile::load_file(input);
    const auto chains = replay_chains(f.to_parse());
    const auto max_chain = chains.empty() ? 0 : *std::max_element(chains.begin(), chains.end());
    const double mean = static_cast<double>(std::accumulate(chains.begin(), chains.end(), std::int64_t{0})) /
                        static_cast<double>(chains.size());
    std::cout << "n=" << f.n() << " sigma=" << f.sigma() << " c=" << format_c(f.c()) << " zprime=" << f.records().size()
              << " n_over_z=" << static_cast<double>(f.n()) / static_cast<double>(f.records().size())
              << " max_chain=" << max_chain << " mean_chain=" << mean << '\n';
    const auto hist = chain_histogram(chains);
    if (hist_path.empty()) {
        write_histogram_csv(std::cout, hist);
    } else {
        std::ofstream out(hist_path);
        if (!out) throw IoError("cannot create " + hist_path);
        write_histogram_csv(out, hist);
    }
    return exit_ok;
}

int cmd_verify(const std::string& compressed, const std::string& original) {
    const std::string orig = as_string(read_file_bytes(original));
    CompressedFile f;
    try {
        f = CompressedFile::load_file(compressed);
    } catch (const FormatError& e) {
        std::cerr << "FAIL: malformed file: " << e.what() << '\n';
        return exit_fail;
    } catch (const CorruptionError& e) {
        std::cerr << "FAIL: corrupt file: " << e.what() << '\n';
        return exit_fail;
    }
    if (f.n() != orig.size() + 1) {
        std::cerr << "FAIL: length " << f.n() - 1 << " differs from original length " << orig.size() << '\n';
        return exit_fail;
    }
    const std::string dec = f.decompress();
    const auto diff = std::mismatch(dec.begin(), dec.end(), orig.begin(), orig.end());
    if (diff.first != dec.end()) {
        std::cerr << "FAIL: decompression differs at offset " << (diff.first - dec.begin()) << '\n';
        return exit_fail;
    }
    std::uint32_t max_hops = 0;
    for (pos_t p = 1; p < f.n(); ++p) {
        const auto [b, hops] = f.access(p);
        if (static_cast<char>(b) != orig[p - 1]) {
            std::cerr << "FAIL: extraction differs at offset " << p - 1 << '\n';
            return exit_fail;
        }
        max_hops = std::max(max_hops, hops);
    }
    if (f.bounded() && max_hops > f.c()) {
        std::cerr << "FAIL: " << max_hops << " hops exceed c=" << f.c() << '\n';
        return exit_fail;
    }
    std::cout << "OK n=" << f.n() << " zprime=" << f.records().size() << " max_hops=" << max_hops << '\n';
    return exit_ok;
}

struct BenchArgs {
    std::vector<std::string> inputs;
    std::string algos = "lz,batlz1,batlz2,greedy,minmax,greedier";
    std::string cs = "4,8,16,24,32";
    std::string out, hist_dir, space = "linear";
    unsigned jobs = 1;
    bool deterministic = false;
};

int cmd_bench(const BenchArgs& a) {
    std::vector<fs::path> files;
    for (const auto& in : a.inputs) {
        if (fs::is_directory(in)) {
            for (const auto& e : fs::directory_iterator(in)) {
                if (e.is_regular_file()) files.push_back(e.path());
            }
        } else if (fs::is_regular_file(in)) {
            files.emplace_back(in);
        } else {
            throw IoError("no such file or directory: " + in);
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<BenchInput> inputs;
    for (const auto& p : files) inputs.push_back({p.filename().string(), as_string(read_file_bytes(p))});

    BenchConfig cfg;
    cfg.algos = parse_algo_list(a.algos);
    cfg.cs = parse_c_list(a.cs);
    cfg.space = space_from_string(a.space);
    cfg.jobs = std::max(1u, a.jobs);
    const auto rows = run_bench(inputs, cfg);

    if (a.out.empty() || a.out == "-") {
        write_bench_csv(std::cout, rows, a.deterministic);
    } else {
        std::ofstream out(a.out);
        if (!out) throw IoError("cannot create " + a.out);
        write_bench_csv(out, rows, a.deterministic);
    }
    if (!a.hist_dir.empty()) {
        fs::create_directories(a.hist_dir);
        for (const auto& r : rows) {
            if (!r.error.empty()) continue;
            std::ofstream h(fs::path(a.hist_dir) / histogram_file_name(r));
            if (!h) throw IoError("cannot write histogram into " + a.hist_dir);
            write_histogram_csv(h, r.histogram);
        }
    }
    bool failed = false;
    for (const auto& r : rows) {
        if (r.error.empty()) continue;
        failed = true;
        std::cerr << "row " << r.file << ' ' << to_string(r.algo) << " c=" << format_c(r.c) << ": " << r.error << '\n';
    }
    return failed ? exit_fail : exit_ok;
}

int cmd_gen(const CorpusParams& params, const std::string& output) {
    write_text_file(output, generate_corpus(params));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded access time Lempel-Ziv compressor"};
    app.require_subcommand(1);

    CompressArgs ca;
    auto* compress = app.add_subcommand("compress", "Compress a file");
    compress->add_option("input", ca.input, "Input file")->required();
    compress->add_option("-o,--output", ca.output, "Output file")->required();
    compress->add_option("--algo", ca.algo, "lz|batlz1|batlz2|greedy|minmax|greedier")
        ->check(CLI::IsMember({"lz", "batlz1", "batlz2", "greedy", "minmax", "greedier"}));
    compress->add_option("--c", ca.c, "Chain bound (>= 1), or inf");
    compress->add_option("--space", ca.space, "Range structure variant")->check(CLI::IsMember({"linear", "fast"}));
    compress->add_option("--baseline-z", ca.baseline_z, "LZ phrase count to report the overhead against");

    std::string in_path, out_path;
    auto* decompress = app.add_subcommand("decompress", "Restore the original bytes");
    decompress->add_option("input", in_path, "Compressed file")->required();
    decompress->add_option("-o,--output", out_path, "Output file (default stdout)");

    pos_t pos = 1, len = 1;
    bool show_hops = false;
    auto* extract = app.add_subcommand("extract", "Random access to a byte range");
    extract->add_option("input", in_path, "Compressed file")->required();
    extract->add_option("--pos", pos, "First position (1-based)")->required();
    extract->add_option("--len", len, "Number of bytes");
    extract->add_flag("--hops", show_hops, "Also print hops per position");

    std::string hist_path;
    auto* stats = app.add_subcommand("stats", "Header and chain statistics");
    stats->add_option("input", in_path, "Compressed file")->required();
    stats->add_option("--hist", hist_path, "Write the chain histogram CSV here (default stdout)");

    std::string original;
    auto* verify = app.add_subcommand("verify", "Check a compressed file against its original");
    verify->add_option("compressed", in_path, "Compressed file")->required();
    verify->add_option("original", original, "Original file")->required();

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Overhead table over a corpus");
    bench->add_option("inputs", ba.inputs, "Corpus files or directories")->required();
    bench->add_option("--algos", ba.algos, "Comma-separated algorithms");
    bench->add_option("--c", ba.cs, "Comma-separated chain bounds");
    bench->add_option("-o,--out", ba.out, "CSV output (default stdout)");
    bench->add_option("--hist-dir", ba.hist_dir, "Directory for chain histograms");
    bench->add_option("--space", ba.space, "Range structure variant")->check(CLI::IsMember({"linear", "fast"}));
    bench->add_option("--jobs", ba.jobs, "Cells run concurrently");
    bench->add_flag("--deterministic", ba.deterministic, "Write 0 in the seconds column");

    CorpusParams gs;
    auto* gen = app.add_subcommand("gen", "Generate a repetitive synthetic file");
    gen->add_option("--seed-bytes", gs.seed_bytes, "Seed block size");
    gen->add_option("--copies", gs.copies, "Number of copies");
    gen->add_option("--rate", gs.mutation_rate, "Per-symbol mutation rate");
    gen->add_option("--rng-seed", gs.rng_seed, "Random seed");
    gen->add_option("--alphabet", gs.alphabet, "Symbols to draw from");
    gen->add_option("-o,--output", out_path, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_fail;
    }

    try {
        if (*compress) return cmd_compress(ca);
        if (*decompress) return cmd_decompress(in_path, out_path);
        if (*extract) return cmd_extract(in_path, pos, len, show_hops);
        if (*stats) return cmd_stats(in_path, hist_path);
        if (*verify) return cmd_verify(in_path, original);
        if (*bench) return cmd_bench(ba);
        if (*gen) return cmd_gen(gs, out_path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_fail;
}
