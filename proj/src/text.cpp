#include "batlz/text.hpp"

#include <array>
#include <stdexcept>

namespace batlz {

Text ingest(std::span<const std::uint8_t> bytes) {
    if (bytes.size() > max_input_bytes) {
        throw std::length_error("input of " + std::to_string(bytes.size()) +
                                " bytes exceeds the supported text size");
    }

    std::array<bool, 256> used{};
    for (auto b : bytes) used[b] = true;

    std::array<sym_t, 256> code{};
    Text t;
    t.decode_map.push_back(0);
    for (unsigned b = 0; b < 256; ++b) {
        if (!used[b]) continue;
        code[b] = static_cast<sym_t>(t.decode_map.size());
        t.decode_map.push_back(static_cast<std::uint8_t>(b));
    }
    t.sigma = t.decode_map.size();

    t.data.reserve(bytes.size() + 1);
    for (auto b : bytes) t.data.push_back(code[b]);
    t.data.push_back(0);
    t.n = t.data.size();
    return t;
}

Text ingest(std::string_view bytes) {
    return ingest(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::string Text::decode() const {
    std::string out;
    out.reserve(n ? n - 1 : 0);
    for (std::size_t p = 0; p + 1 < n; ++p) out.push_back(static_cast<char>(decode_map[data[p]]));
    return out;
}

}  // namespace batlz
