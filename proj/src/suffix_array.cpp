#include "batlz/suffix_array.hpp"

#include <cstdint>
#include <limits>

namespace batlz {
namespace {

constexpr std::uint32_t empty = std::numeric_limits<std::uint32_t>::max();

// Induced sorting over 0-based positions. Requires s.back() to be the unique
// smallest symbol (0).
void sais(const std::vector<std::uint32_t>& s, std::vector<std::uint32_t>& sa, std::uint32_t alphabet) {
    const std::size_t n = s.size();
    sa.assign(n, empty);
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> stype(n);
    stype[n - 1] = true;
    for (std::size_t i = n - 1; i-- > 0;) {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    auto is_lms = [&](std::size_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::uint32_t> counts(alphabet, 0);
    for (auto c : s) ++counts[c];
    std::vector<std::uint32_t> bkt(alphabet);
    auto bucket_starts = [&] {
        std::uint32_t sum = 0;
        for (std::uint32_t c = 0; c < alphabet; ++c) {
            bkt[c] = sum;
            sum += counts[c];
        }
    };
    auto bucket_ends = [&] {
        std::uint32_t sum = 0;
        for (std::uint32_t c = 0; c < alphabet; ++c) {
            sum += counts[c];
            bkt[c] = sum;
        }
    };
    auto induce = [&] {
        bucket_starts();
        for (std::size_t i = 0; i < n; ++i) {
            if (sa[i] == empty || sa[i] == 0) continue;
            std::uint32_t j = sa[i] - 1;
            if (!stype[j]) sa[bkt[s[j]]++] = j;
        }
        bucket_ends();
        for (std::size_t i = n; i-- > 0;) {
            if (sa[i] == empty || sa[i] == 0) continue;
            std::uint32_t j = sa[i] - 1;
            if (stype[j]) sa[--bkt[s[j]]] = j;
        }
    };

    bucket_ends();
    for (std::size_t i = 1; i < n; ++i) {
        if (is_lms(i)) sa[--bkt[s[i]]] = static_cast<std::uint32_t>(i);
    }
    induce();

    // Sorted LMS substrings to the front, then name them.
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_lms(sa[i])) sa[m++] = sa[i];
    }
    std::fill(sa.begin() + static_cast<std::ptrdiff_t>(m), sa.end(), empty);
    std::uint32_t names = 0;
    std::uint32_t prev = empty;
    for (std::size_t k = 0; k < m; ++k) {
        const std::uint32_t pos = sa[k];
        bool diff = prev == empty;
        for (std::size_t d = 0; !diff; ++d) {
            if (s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                diff = true;
            } else if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) {
                break;
            }
        }
        if (diff) {
            ++names;
            prev = pos;
        }
        sa[m + pos / 2] = names - 1;
    }
    std::vector<std::uint32_t> reduced;
    reduced.reserve(m);
    for (std::size_t i = m; i < n; ++i) {
        if (sa[i] != empty) reduced.push_back(sa[i]);
    }

    std::vector<std::uint32_t> reduced_sa;
    if (names < m) {
        sais(reduced, reduced_sa, names);
    } else {
        reduced_sa.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) reduced_sa[reduced[i]] = static_cast<std::uint32_t>(i);
    }

    std::vector<std::uint32_t> lms_pos;
    lms_pos.reserve(m);
    for (std::size_t i = 1; i < n; ++i) {
        if (is_lms(i)) lms_pos.push_back(static_cast<std::uint32_t>(i));
    }
    std::fill(sa.begin(), sa.end(), empty);
    bucket_ends();
    for (std::size_t k = m; k-- > 0;) {
        std::uint32_t j = lms_pos[reduced_sa[k]];
        sa[--bkt[s[j]]] = j;
    }
    induce();
}

}  // namespace

SuffixArrays build_suffix_arrays(const Text& t) {
    std::vector<std::uint32_t> s(t.data.begin(), t.data.end());
    std::vector<std::uint32_t> sa0;
    sais(s, sa0, static_cast<std::uint32_t>(t.sigma));

    SuffixArrays out;
    out.sa.resize(t.n);
    out.isa.resize(t.n);
    for (std::size_t r = 0; r < t.n; ++r) {
        out.sa[r] = sa0[r] + 1;
        out.isa[sa0[r]] = static_cast<pos_t>(r + 1);
    }
    return out;
}

std::vector<pos_t> build_lcp(const Text& t, const SuffixArrays& sa) {
    const std::size_t n = t.n;
    std::vector<pos_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t r = sa.isa[p] - 1;
        if (r == 0) {
            h = 0;
            continue;
        }
        const std::size_t q = sa.sa[r - 1] - 1;
        while (p + h < n && q + h < n && t.data[p + h] == t.data[q + h]) ++h;
        lcp[r] = static_cast<pos_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace batlz
