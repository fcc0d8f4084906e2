#include "batlz/codec.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>

namespace batlz {
namespace {

constexpr std::array<std::uint8_t, 5> magic{'B', 'A', 'T', 'L', 'Z'};
constexpr std::size_t fixed_header = 5 + 1 + 8 + 4 + 8 + 2;

template <typename U>
void put_le(std::vector<std::uint8_t>& out, U v) {
    for (std::size_t k = 0; k < sizeof(U); ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> b) : bytes_(b) {}

    std::size_t offset() const { return off_; }
    std::size_t remaining() const { return bytes_.size() - off_; }

    std::uint8_t byte() {
        if (off_ >= bytes_.size()) throw FormatError("truncated input at offset " + std::to_string(off_));
        return bytes_[off_++];
    }

    template <typename U>
    U le() {
        U v = 0;
        for (std::size_t k = 0; k < sizeof(U); ++k) v |= static_cast<U>(static_cast<U>(byte()) << (8 * k));
        return v;
    }

    // Minimal-length LEB128 of at most 32 bits.
    std::uint32_t varint() {
        const std::size_t at = off_;
        std::uint64_t v = 0;
        for (unsigned shift = 0;; shift += 7) {
            if (shift > 28) throw FormatError("varint too long at offset " + std::to_string(at));
            const std::uint8_t b = byte();
            v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
            if (!(b & 0x80)) {
                if (b == 0 && shift > 0) throw FormatError("non-minimal varint at offset " + std::to_string(at));
                break;
            }
        }
        if (v > 0xFFFFFFFFu) throw FormatError("varint overflow at offset " + std::to_string(at));
        return static_cast<std::uint32_t>(v);
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t off_ = 0;
};

}  // namespace

CompressedFile CompressedFile::from_parse(const Parse& parse, const Text& t) {
    if (parse.n != t.n) throw std::invalid_argument("parse does not match the text length");
    CompressedFile f;
    f.n_ = t.n;
    f.c_ = parse.c;
    f.decode_map_ = t.decode_map;
    f.records_.reserve(parse.size());
    for (const auto& ph : parse.phrases) {
        const std::uint8_t lit = ph.literal == 0 ? 0 : t.decode_map.at(ph.literal);
        f.records_.push_back({ph.source, ph.len, lit});
    }
    f.rebuild_starts();
    if (!f.records_.empty() && static_cast<std::uint64_t>(f.starts_.back()) + f.records_.back().len != f.n_) {
        throw std::invalid_argument("phrases do not cover the text");
    }
    return f;
}

void CompressedFile::rebuild_starts() {
    starts_.clear();
    starts_.reserve(records_.size());
    std::uint64_t i = 1;
    for (const auto& r : records_) {
        starts_.push_back(static_cast<pos_t>(i));
        i += static_cast<std::uint64_t>(r.len) + 1;
    }
}

std::vector<std::uint8_t> CompressedFile::serialize() const {
    std::vector<std::uint8_t> out(magic.begin(), magic.end());
    out.push_back(format_version);
    put_le<std::uint64_t>(out, n_);
    put_le<std::uint32_t>(out, c_);
    put_le<std::uint64_t>(out, records_.size());
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(decode_map_.size()));
    out.insert(out.end(), decode_map_.begin(), decode_map_.end());
    for (const auto& r : records_) {
        put_varint(out, r.len);
        if (r.len > 0) put_varint(out, r.source);
        out.push_back(r.literal);
    }
    return out;
}

CompressedFile CompressedFile::load(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < fixed_header) throw FormatError("file shorter than the header");
    if (!std::equal(magic.begin(), magic.end(), bytes.begin())) throw FormatError("bad magic");
    Reader rd(bytes.subspan(magic.size()));
    const std::uint8_t version = rd.byte();
    if (version != format_version) throw FormatError("unsupported version " + std::to_string(version));

    CompressedFile f;
    f.n_ = rd.le<std::uint64_t>();
    f.c_ = rd.le<std::uint32_t>();
    const auto z = rd.le<std::uint64_t>();
    const auto sigma = rd.le<std::uint16_t>();
    if (f.n_ < 1 || f.n_ > max_input_bytes + 1) throw FormatError("bad text length " + std::to_string(f.n_));
    if (z < 1 || z > f.n_) throw FormatError("bad phrase count " + std::to_string(z));
    if (sigma < 1 || sigma > 257) throw FormatError("bad alphabet size " + std::to_string(sigma));

    f.decode_map_.resize(sigma);
    for (auto& b : f.decode_map_) b = rd.byte();
    if (f.decode_map_[0] != 0) throw FormatError("decode map placeholder must be 0");
    for (std::size_t k = 2; k < sigma; ++k) {
        if (f.decode_map_[k] <= f.decode_map_[k - 1]) throw FormatError("decode map is not increasing");
    }

    f.records_.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(z, rd.remaining() / 2 + 1)));
    std::uint64_t i = 1;
    for (std::uint64_t k = 0; k < z; ++k) {
        Record r;
        r.len = rd.varint();
        if (r.len > 0) {
            r.source = rd.varint();
            if (r.source < 1 || r.source >= i) {
                throw CorruptionError("phrase " + std::to_string(k + 1) + " at " + std::to_string(i) +
                                      " has source " + std::to_string(r.source));
            }
        }
        r.literal = rd.byte();
        i += static_cast<std::uint64_t>(r.len) + 1;
        if (i > f.n_ + 1) throw CorruptionError("phrase " + std::to_string(k + 1) + " runs past the text end");
        f.records_.push_back(r);
    }
    if (i != f.n_ + 1) throw CorruptionError("phrases end before the text end");
    if (rd.remaining() != 0) throw FormatError("trailing bytes after the last record");
    f.rebuild_starts();
    return f;
}

CompressedFile CompressedFile::load_file(const std::filesystem::path& path) {
    return load(read_file_bytes(path));
}

void CompressedFile::save_file(const std::filesystem::path& path) const {
    write_file_bytes(path, serialize());
}

Parse CompressedFile::to_parse() const {
    std::array<sym_t, 256> code{};
    for (std::size_t k = 1; k < decode_map_.size(); ++k) code[decode_map_[k]] = static_cast<sym_t>(k);
    Parse p;
    p.n = n_;
    p.c = c_;
    p.phrases.reserve(records_.size());
    for (std::size_t k = 0; k < records_.size(); ++k) {
        const auto& r = records_[k];
        const sym_t lit = k + 1 == records_.size() ? 0 : code[r.literal];
        p.phrases.push_back({r.source, r.len, lit});
    }
    return p;
}

std::string CompressedFile::decompress() const {
    std::string out;
    out.reserve(n_);
    for (const auto& r : records_) {
        const std::size_t s = r.source - 1;
        for (pos_t l = 0; l < r.len; ++l) out.push_back(out[s + l]);
        out.push_back(static_cast<char>(r.literal));
    }
    out.pop_back();  // sentinel
    return out;
}

std::pair<std::uint8_t, std::uint32_t> CompressedFile::access(pos_t p) const {
    if (p < 1 || p >= n_) throw std::out_of_range("position " + std::to_string(p) + " is not addressable");
    std::uint32_t hops = 0;
    for (;;) {
        const auto it = std::upper_bound(starts_.begin(), starts_.end(), p) - 1;
        const pos_t ip = *it;
        const Record& r = records_[static_cast<std::size_t>(it - starts_.begin())];
        const pos_t o = p - ip;
        if (o == r.len) return {r.literal, hops};
        const pos_t gap = ip - r.source;
        if (o < gap) {
            p = r.source + o;
            ++hops;
        } else {
            p = ip + o % gap;
        }
    }
}

Extraction CompressedFile::extract(pos_t i, pos_t len) const {
    if (i < 1 || static_cast<std::uint64_t>(i) + len > n_) {
        throw std::out_of_range("range " + std::to_string(i) + "+" + std::to_string(len) + " is outside the text");
    }
    Extraction ex;
    ex.bytes.reserve(len);
    ex.hops.reserve(len);
    for (pos_t k = 0; k < len; ++k) {
        const auto [b, h] = access(i + k);
        ex.bytes.push_back(static_cast<char>(b));
        ex.hops.push_back(h);
    }
    return ex;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("error reading " + path.string());
    return data;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error writing " + path.string());
}

}  // namespace batlz
