#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "batlz/parse.hpp"
#include "batlz/text.hpp"

namespace batlz {

/// Malformed header, bad varint, truncated or trailing data.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally readable but semantically impossible (e.g. a source that
/// does not precede its phrase).
struct CorruptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint8_t format_version = 0x01;
inline constexpr std::uint32_t wire_unbounded_c = 0xFFFFFFFFu;

/// One phrase on disk. `literal` is in the original byte alphabet; the
/// sentinel that ends the last phrase is written as 0x00.
struct Record {
    pos_t source = no_pos;  // 1-based, no_pos iff len == 0
    pos_t len = 0;
    std::uint8_t literal = 0;

    friend bool operator==(const Record&, const Record&) = default;
};

/// Hop statistics of an extraction: hops[k] is the number of copy hops taken
/// to resolve position i+k.
struct Extraction {
    std::string bytes;
    std::vector<std::uint32_t> hops;
};

/// A parse in its serialized form.
///
/// Layout: "BATLZ", version (1 byte), n (u64 LE, sentinel included),
/// c (u32 LE, 0xFFFFFFFF = unbounded), z' (u64 LE), sigma (u16 LE),
/// decode_map (sigma bytes, entry 0 is the sentinel placeholder 0x00), then
/// z' records: LEB128 len; LEB128 source if len > 0; one literal byte.
class CompressedFile {
public:
    CompressedFile() = default;

    static CompressedFile from_parse(const Parse& parse, const Text& t);

    /// Throws FormatError or CorruptionError. Accepts only canonical input
    /// (minimal varints, no trailing bytes), so load followed by serialize is
    /// the identity on bytes.
    static CompressedFile load(std::span<const std::uint8_t> bytes);
    static CompressedFile load_file(const std::filesystem::path& path);

    std::vector<std::uint8_t> serialize() const;
    void save_file(const std::filesystem::path& path) const;

    std::uint64_t n() const { return n_; }
    std::uint32_t c() const { return c_; }
    bool bounded() const { return c_ != wire_unbounded_c; }
    std::size_t sigma() const { return decode_map_.size(); }
    const std::vector<std::uint8_t>& decode_map() const { return decode_map_; }
    const std::vector<Record>& records() const { return records_; }
    /// 1-based start of every phrase, rebuilt from the lengths.
    const std::vector<pos_t>& starts() const { return starts_; }

    /// Phrase structure only (sources and lengths); literals are dense codes
    /// where the byte is in the alphabet, 0 otherwise.
    Parse to_parse() const;

    /// Original bytes, sentinel stripped.
    std::string decompress() const;

    /// Byte at position p (1 <= p <= n-1) and the hops taken to reach it.
    std::pair<std::uint8_t, std::uint32_t> access(pos_t p) const;

    /// Positions i..i+len-1, all within 1..n-1; throws std::out_of_range.
    Extraction extract(pos_t i, pos_t len) const;

private:
    void rebuild_starts();

    std::uint64_t n_ = 0;
    std::uint32_t c_ = wire_unbounded_c;
    std::vector<std::uint8_t> decode_map_;
    std::vector<Record> records_;
    std::vector<pos_t> starts_;
};

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace batlz
