#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "antipower/text.hpp"

namespace antipower::witness {

/// ceil(log2(m)), with 0 for m <= 1.
constexpr std::uint64_t ceil_log2(std::uint64_t m) noexcept {
    return m <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(m - 1));
}

/// Digits in the binary expansion of v; 0 is written "0".
constexpr std::uint64_t binary_length(std::uint64_t v) noexcept {
    return v == 0 ? 1 : static_cast<std::uint64_t>(std::bit_width(v));
}

struct WitnessParams {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t log_term = 0;
};

constexpr WitnessParams params(std::uint64_t m) noexcept {
    WitnessParams w{m, 0, ceil_log2(m)};
    for (std::uint64_t v = 0; v <= m; ++v) w.n += binary_length(v) + 1;
    return w;
}

/// Binary expansions of 0, 1, ..., m, each followed by '$'.
inline std::string generate(std::uint64_t m) {
    std::string out;
    out.reserve(params(m).n);
    for (std::uint64_t v = 0; v <= m; ++v) {
        for (auto bit = binary_length(v); bit-- > 0;) out.push_back(((v >> bit) & 1) ? '1' : '0');
        out.push_back('$');
    }
    return out;
}

inline Text generate_text(std::uint64_t m) { return Text::from_bytes(generate(m)); }

/// Anti-periods strictly above this threshold put two '$' in every block.
constexpr std::uint64_t anti_period_threshold(std::uint64_t m) noexcept {
    return 3 + 2 * ceil_log2(m);
}

/// floor(n^2/(2k) - 7n/2 - 2n*ceil(log2 m)): a lower bound on the number of
/// k-anti-powers in w_m with anti-period above anti_period_threshold(m).
/// Negative when the bound is vacuous.
inline std::int64_t lower_bound_value(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
    if (k < 2) throw std::invalid_argument("order must exceed 1");
    const auto nn = static_cast<std::int64_t>(n);
    const auto kk = static_cast<std::int64_t>(k);
    const auto lg = static_cast<std::int64_t>(ceil_log2(m));
    // common denominator 2k
    const std::int64_t numerator = nn * nn - 7 * nn * kk - 4 * nn * kk * lg;
    const std::int64_t denominator = 2 * kk;
    std::int64_t q = numerator / denominator;
    if (numerator % denominator != 0 && numerator < 0) --q;
    return q;
}

/// True iff every factor with at least two '$' occurs exactly once.
/// Quadratic number of factors; meant for small witnesses.
inline bool check_unique_dollar_factors(const Text& text) {
    const symbol_t dollar = text.code_of('$');
    if (dollar == text.sigma()) return true;

    const auto symbols = text.symbols();
    const std::string_view view(reinterpret_cast<const char*>(symbols.data()),
                                symbols.size() * sizeof(symbol_t));
    std::unordered_map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        std::size_t dollars = 0;
        for (std::size_t j = i; j < symbols.size(); ++j) {
            if (symbols[j] == dollar) ++dollars;
            if (dollars < 2) continue;
            auto factor = view.substr(i * sizeof(symbol_t), (j - i + 1) * sizeof(symbol_t));
            if (++seen[factor] > 1) return false;
        }
    }
    return true;
}

}  // namespace antipower::witness
