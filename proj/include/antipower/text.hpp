#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antipower {

using symbol_t = std::uint32_t;

/// Immutable text over a dense integer alphabet [0, sigma).
///
/// Codes are assigned in increasing order of the original symbol, so
/// comparing dense substrings gives the same answer as comparing the
/// original ones. The original symbols are kept in alphabet_map().
class Text {
public:
    Text() = default;

    static Text from_bytes(std::string_view bytes) {
        check_length(bytes.size());
        std::array<bool, 256> present{};
        for (unsigned char c : bytes) present[c] = true;

        Text text;
        std::array<symbol_t, 256> code{};
        for (unsigned c = 0; c < 256; ++c) {
            if (present[c]) {
                code[c] = static_cast<symbol_t>(text.alphabet_.size());
                text.alphabet_.push_back(c);
            }
        }
        text.symbols_.reserve(bytes.size());
        for (unsigned char c : bytes) text.symbols_.push_back(code[c]);
        return text;
    }

    /// Token-level input: any 32-bit values, remapped densely in value order.
    static Text from_symbols(std::span<const std::uint32_t> raw) {
        check_length(raw.size());
        Text text;
        text.alphabet_.assign(raw.begin(), raw.end());
        std::sort(text.alphabet_.begin(), text.alphabet_.end());
        text.alphabet_.erase(std::unique(text.alphabet_.begin(), text.alphabet_.end()),
                             text.alphabet_.end());
        text.symbols_.reserve(raw.size());
        for (auto v : raw) {
            auto it = std::lower_bound(text.alphabet_.begin(), text.alphabet_.end(), v);
            text.symbols_.push_back(static_cast<symbol_t>(it - text.alphabet_.begin()));
        }
        return text;
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t sigma() const noexcept { return alphabet_.size(); }

    symbol_t operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const symbol_t> symbols() const noexcept { return symbols_; }
    std::span<const std::uint32_t> alphabet_map() const noexcept { return alphabet_; }

    /// Dense code of an original symbol, or sigma() if it does not occur.
    symbol_t code_of(std::uint32_t original) const noexcept {
        auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), original);
        if (it == alphabet_.end() || *it != original) return static_cast<symbol_t>(sigma());
        return static_cast<symbol_t>(it - alphabet_.begin());
    }

    std::vector<std::uint32_t> original() const {
        std::vector<std::uint32_t> out;
        out.reserve(size());
        for (auto s : symbols_) out.push_back(alphabet_[s]);
        return out;
    }

    /// Inverse of from_bytes. Throws if some original symbol is not a byte.
    std::string render() const {
        if (!alphabet_.empty() && alphabet_.back() > 0xFF)
            throw std::logic_error("text alphabet is not byte-valued");
        std::string out;
        out.reserve(size());
        for (auto s : symbols_) out.push_back(static_cast<char>(alphabet_[s]));
        return out;
    }

    /// Renders [start, start + len) through the alphabet map.
    std::string render(std::size_t start, std::size_t len) const {
        std::string out;
        for (std::size_t i = start; i < start + len && i < size(); ++i)
            out.push_back(static_cast<char>(alphabet_[symbols_[i]]));
        return out;
    }

private:
    static void check_length(std::size_t n) {
        // names and positions are stored as 32-bit values
        if (n >= std::numeric_limits<std::uint32_t>::max())
            throw std::length_error("text too long");
    }

    std::vector<symbol_t> symbols_;
    std::vector<std::uint32_t> alphabet_;
};

/// One k-anti-power occurrence: text[start, start + order * anti_period).
struct AntiPowerHit {
    std::size_t start = 0;
    std::size_t anti_period = 1;
    std::size_t order = 2;

    std::size_t end() const noexcept { return start + order * anti_period; }

    friend auto operator<=>(const AntiPowerHit&, const AntiPowerHit&) = default;
};

/// 1-based inclusive coordinates, as used for presentation.
struct OneBasedSpan {
    std::size_t first = 0;
    std::size_t last = 0;

    friend bool operator==(const OneBasedSpan&, const OneBasedSpan&) = default;
};

inline OneBasedSpan to_paper_coords(const AntiPowerHit& hit) noexcept {
    return {hit.start + 1, hit.end()};
}

}  // namespace antipower
