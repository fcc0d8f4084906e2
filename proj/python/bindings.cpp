#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "batlz/bench.hpp"
#include "batlz/codec.hpp"
#include "batlz/parsers.hpp"

namespace py = pybind11;
using namespace batlz;

namespace {

std::uint32_t to_c(std::optional<std::uint32_t> c) { return c ? *c : unbounded_c; }

SpaceVariant to_space(const std::string& s) {
    if (s == "linear") return SpaceVariant::linear;
    if (s == "fast") return SpaceVariant::fast;
    throw py::value_error("space must be 'linear' or 'fast'");
}

std::span<const std::uint8_t> as_span(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// Runs without the GIL; arguments are converted beforehand.
Parse make_parse(const TextIndex& idx, Algo a, std::uint32_t c, SpaceVariant space) {
    if (a == Algo::batlz1) return parse_batlz1(idx.text, c, parse_lz(idx)).parse;
    ParseOptions opt;
    opt.space = space;
    return run_parser(idx, a, c, opt);
}

// Phrases as (source, length, literal) with 1-based sources, None for no
// source and for the final sentinel literal.
using PyPhrase = std::tuple<std::optional<pos_t>, pos_t, std::optional<int>>;

std::vector<PyPhrase> py_phrases(const Parse& p, const Text& t) {
    std::vector<PyPhrase> out;
    out.reserve(p.size());
    for (const auto& ph : p.phrases) {
        out.emplace_back(ph.len ? std::optional<pos_t>(ph.source) : std::nullopt, ph.len,
                         ph.literal ? std::optional<int>(t.decode_map[ph.literal]) : std::nullopt);
    }
    return out;
}

CompressedFile load_blob(const py::bytes& blob) {
    const std::string s = blob;
    return CompressedFile::load(as_span(s));
}

}  // namespace

PYBIND11_MODULE(_batlz, m) {
    m.doc() = "Lempel-Ziv parsing with bounded chain length (random access cost)";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<CorruptionError>(m, "CorruptionError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.attr("ALGORITHMS") = std::vector<std::string>{"lz", "batlz1", "batlz2", "greedy", "minmax", "greedier"};

    m.def(
        "parse",
        [](const py::bytes& data, const std::string& algo, std::optional<std::uint32_t> c, const std::string& space) {
            const std::string s = data;
            const Algo a = algo_from_string(algo);
            const SpaceVariant v = to_space(space);
            Parse p;
            TextIndex idx(ingest(s));
            {
                py::gil_scoped_release release;
                p = make_parse(idx, a, to_c(c), v);
            }
            return py_phrases(p, idx.text);
        },
        py::arg("data"), py::arg("algo") = "greedier", py::arg("c") = py::none(), py::arg("space") = "linear",
        "Phrases (source, length, literal) of the text followed by a sentinel; c=None means unbounded.");

    m.def(
        "chains",
        [](const py::bytes& data, const std::string& algo, std::optional<std::uint32_t> c) {
            const std::string s = data;
            const TextIndex idx(ingest(s));
            auto chains = replay_chains(make_parse(idx, algo_from_string(algo), to_c(c), SpaceVariant::linear));
            return std::vector<chain_t>(chains.begin(), chains.end());
        },
        py::arg("data"), py::arg("algo") = "greedier", py::arg("c") = py::none(),
        "Chain length of every position, sentinel included.");

    m.def(
        "compress",
        [](const py::bytes& data, const std::string& algo, std::optional<std::uint32_t> c, const std::string& space) {
            const std::string s = data;
            const Algo a = algo_from_string(algo);
            const SpaceVariant v = to_space(space);
            std::vector<std::uint8_t> out;
            {
                py::gil_scoped_release release;
                const TextIndex idx(ingest(s));
                out = CompressedFile::from_parse(make_parse(idx, a, to_c(c), v), idx.text).serialize();
            }
            return py::bytes(reinterpret_cast<const char*>(out.data()), out.size());
        },
        py::arg("data"), py::arg("algo") = "greedier", py::arg("c") = py::none(), py::arg("space") = "linear");

    m.def(
        "decompress", [](const py::bytes& blob) { return py::bytes(load_blob(blob).decompress()); }, py::arg("blob"));

    m.def(
        "extract",
        [](const py::bytes& blob, pos_t pos, pos_t length) {
            const auto ex = load_blob(blob).extract(pos, length);
            return py::make_tuple(py::bytes(ex.bytes), ex.hops);
        },
        py::arg("blob"), py::arg("pos"), py::arg("length"),
        "Bytes at 1-based positions pos..pos+length-1 and the copy hops each one took.");

    m.def(
        "generate_corpus",
        [](std::size_t seed_bytes, std::size_t copies, double rate, std::uint64_t rng_seed, const std::string& alphabet) {
            CorpusParams params{seed_bytes, copies, rate, rng_seed, alphabet};
            return py::bytes(generate_corpus(params));
        },
        py::arg("seed_bytes") = 10000, py::arg("copies") = 100, py::arg("rate") = 0.005, py::arg("rng_seed") = 1,
        py::arg("alphabet") = "ACGT");

    py::class_<CompressedFile>(m, "CompressedFile")
        .def_static("load", &load_blob, py::arg("blob"))
        .def_property_readonly("n", &CompressedFile::n)
        .def_property_readonly("c", [](const CompressedFile& f) -> std::optional<std::uint32_t> {
            return f.bounded() ? std::optional<std::uint32_t>(f.c()) : std::nullopt;
        })
        .def_property_readonly("zprime", [](const CompressedFile& f) { return f.records().size(); })
        .def("decompress", [](const CompressedFile& f) { return py::bytes(f.decompress()); })
        .def("access", &CompressedFile::access, py::arg("pos"), "(byte, hops) at a 1-based position.")
        .def("serialize", [](const CompressedFile& f) {
            const auto b = f.serialize();
            return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
        });
}
