#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace batlz {

// 1-based text position or suffix-array rank. 0 means "none".
using pos_t = std::uint32_t;
// Dense symbol code; code 0 is reserved for the end-of-text sentinel.
using sym_t = std::uint16_t;

inline constexpr pos_t no_pos = 0;

// Largest accepted input (in bytes). Positions, ranks and the D-array
// infinity (n+1) must all fit in a signed 32-bit value.
inline constexpr std::size_t max_input_bytes = 0x7FFFFFF0u;

/// A text with an appended unique sentinel, remapped to a dense alphabet.
///
/// Distinct input bytes get codes 1..sigma-1 in increasing byte order, so
/// lexicographic order of symbols matches that of the original bytes and the
/// sentinel (code 0) is the unique smallest symbol.
struct Text {
    std::vector<sym_t> data;               // data[p-1] = T[p]
    std::size_t n = 0;                     // length including the sentinel
    std::size_t sigma = 0;                 // codes in use, sentinel included
    std::vector<std::uint8_t> decode_map;  // code -> byte; entry 0 is a placeholder

    sym_t operator[](pos_t p) const { return data[p - 1]; }

    /// Original bytes, sentinel stripped.
    std::string decode() const;
};

Text ingest(std::span<const std::uint8_t> bytes);
Text ingest(std::string_view bytes);

}  // namespace batlz
