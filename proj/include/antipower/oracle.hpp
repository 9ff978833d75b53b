#pragma once

// Brute-force reference: block-by-block literal comparison, no naming and no
// hashing. Meant for small inputs and as ground truth in tests.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "antipower/text.hpp"

namespace antipower::oracle {

/// Query for text[i..j] (1-based, inclusive) split into k blocks.
struct QueryTriple {
    std::size_t i = 1;
    std::size_t j = 1;
    std::size_t k = 1;
};

namespace detail {

inline bool blocks_equal(const Text& text, std::size_t a, std::size_t b, std::size_t len) {
    for (std::size_t t = 0; t < len; ++t)
        if (text[a + t] != text[b + t]) return false;
    return true;
}

}  // namespace detail

/// Whether the k blocks of length p starting at 0-based `start` are
/// pairwise distinct. No range checks.
inline bool blocks_pairwise_distinct(const Text& text, std::size_t start, std::size_t p,
                                     std::size_t k) {
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (detail::blocks_equal(text, start + a * p, start + b * p, p)) return false;
    return true;
}

/// Number of distinct blocks among the k blocks of length p at `start`.
inline std::size_t distinct_block_count(const Text& text, std::size_t start, std::size_t p,
                                        std::size_t k) {
    std::set<std::vector<symbol_t>> blocks;
    auto symbols = text.symbols();
    for (std::size_t a = 0; a < k; ++a) {
        auto first = symbols.begin() + static_cast<std::ptrdiff_t>(start + a * p);
        blocks.emplace(first, first + static_cast<std::ptrdiff_t>(p));
    }
    return blocks.size();
}

inline bool is_anti_power(const Text& text, const QueryTriple& q) {
    if (q.k == 0) throw std::invalid_argument("order must be positive");
    if (q.i == 0 || q.i > q.j || q.j > text.size())
        throw std::out_of_range("query range outside the text");
    const std::size_t len = q.j - q.i + 1;
    if (len % q.k != 0) throw std::invalid_argument("length is not a multiple of the order");
    return blocks_pairwise_distinct(text, q.i - 1, len / q.k, q.k);
}

/// Every k-anti-power occurrence, by trying each (start, anti-period).
inline std::set<AntiPowerHit> enumerate_all(const Text& text, std::size_t k) {
    if (k < 2) throw std::invalid_argument("order must exceed 1");
    std::set<AntiPowerHit> hits;
    const std::size_t n = text.size();
    for (std::size_t p = 1; p * k <= n; ++p)
        for (std::size_t start = 0; start + p * k <= n; ++start)
            if (blocks_pairwise_distinct(text, start, p, k)) hits.insert({start, p, k});
    return hits;
}

}  // namespace antipower::oracle
