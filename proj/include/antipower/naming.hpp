#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "antipower/text.hpp"

namespace antipower {

using name_t = std::uint32_t;

/// Names for every length-p substring of a text.
///
/// names[i] is the lexicographic rank (1-based) of text[i, i + p) among the
/// distinct length-p substrings, so equal names mean equal substrings.
/// order lists positions 0..n-p sorted by (name, position).
struct NameTable {
    std::size_t p = 0;
    std::vector<name_t> names;
    std::size_t num_names = 0;
    std::vector<std::uint32_t> order;

    /// True when every length-p substring occurs once.
    bool saturated() const noexcept { return num_names == names.size(); }
};

/// Advances name tables one substring length at a time.
///
/// Owns the radix-sort scratch for one text, so a chain of extend_in_place
/// calls costs O(n + sigma) per round with no further allocation. Once a
/// table is saturated every longer length is too, and names at p + 1 are the
/// names at p re-ranked after dropping the last position; that case skips
/// the sorts.
class Namer {
public:
    explicit Namer(const Text& text)
        : text_(&text),
          scratch_(text.size()),
          staged_(text.size()),
          counts_(text.size() + 2) {}

    const Text& text() const noexcept { return *text_; }

    NameTable initial() {
        NameTable table;
        initial_into(table);
        return table;
    }

    /// Resets table to length 1, reusing its storage.
    void initial_into(NameTable& table) {
        const Text& s = *text_;
        if (s.empty()) throw std::invalid_argument("cannot name substrings of an empty text");

        table.p = 1;
        table.names.resize(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) table.names[i] = s[i] + 1;

        const std::size_t buckets = s.sigma() + 1;
        std::fill_n(counts_.begin(), buckets, 0u);
        for (std::size_t i = 0; i < s.size(); ++i) ++counts_[s[i] + 1];
        for (std::size_t c = 1; c < buckets; ++c) counts_[c] += counts_[c - 1];
        table.order.resize(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            table.order[counts_[s[i]]++] = static_cast<std::uint32_t>(i);

        // every code in [0, sigma) occurs
        table.num_names = s.sigma();
    }

    /// Turns a table for length p into the table for length p + 1.
    ///
    /// With keep_order == false a saturated table stops maintaining order
    /// (it is left empty); names and num_names stay exact.
    void extend_in_place(NameTable& table, bool keep_order = true) {
        const Text& s = *text_;
        const std::size_t p = table.p;
        if (p + 1 > s.size()) throw std::out_of_range("substring length would exceed the text");
        if (table.names.size() != s.size() - p + 1)
            throw std::invalid_argument("name table does not belong to this text");

        const std::size_t count = s.size() - p;  // positions i with i + p + 1 <= n

        if (table.saturated()) {
            const name_t removed = table.names[count];
            for (std::size_t i = 0; i < count; ++i)
                table.names[i] -= table.names[i] > removed ? 1 : 0;
            table.names.resize(count);
            if (keep_order && !table.order.empty()) {
                table.order.erase(table.order.begin() + (removed - 1));
            } else {
                table.order.clear();
            }
            table.num_names = count;
            table.p = p + 1;
            return;
        }

        // Stable LSD radix sort on (name, next symbol): by next symbol first,
        // then by the previous name.
        counting_sort_by_symbol(count, p);
        table.order.resize(count);
        counting_sort_by_name(table, count);

        name_t next = 0;
        name_t prev_name = 0;
        symbol_t prev_sym = 0;
        for (std::size_t idx = 0; idx < count; ++idx) {
            const std::uint32_t i = table.order[idx];
            const name_t m = table.names[i];
            const symbol_t c = s[i + p];
            if (idx == 0 || m != prev_name || c != prev_sym) {
                ++next;
                prev_name = m;
                prev_sym = c;
            }
            staged_[i] = next;
        }
        std::copy_n(staged_.begin(), count, table.names.begin());
        table.names.resize(count);
        table.num_names = next;
        table.p = p + 1;
    }

    /// Bytes of scratch owned by this namer.
    std::size_t scratch_bytes() const noexcept {
        return (scratch_.capacity() + staged_.capacity() + counts_.capacity()) *
               sizeof(std::uint32_t);
    }

private:
    void counting_sort_by_symbol(std::size_t count, std::size_t p) {
        const Text& s = *text_;
        const std::size_t buckets = s.sigma() + 1;
        std::fill_n(counts_.begin(), buckets, 0u);
        for (std::size_t i = 0; i < count; ++i) ++counts_[s[i + p] + 1];
        for (std::size_t c = 1; c < buckets; ++c) counts_[c] += counts_[c - 1];
        for (std::size_t i = 0; i < count; ++i)
            scratch_[counts_[s[i + p]]++] = static_cast<std::uint32_t>(i);
    }

    void counting_sort_by_name(NameTable& table, std::size_t count) {
        const std::size_t buckets = table.num_names + 1;
        std::fill_n(counts_.begin(), buckets, 0u);
        for (std::size_t idx = 0; idx < count; ++idx) ++counts_[table.names[scratch_[idx]]];
        // names start at 1: shift to exclusive prefix sums indexed by name - 1
        std::uint32_t running = 0;
        for (std::size_t m = 1; m < buckets; ++m) {
            const std::uint32_t c = counts_[m];
            counts_[m - 1] = running;
            running += c;
        }
        for (std::size_t idx = 0; idx < count; ++idx) {
            const std::uint32_t i = scratch_[idx];
            table.order[counts_[table.names[i] - 1]++] = i;
        }
    }

    const Text* text_;
    std::vector<std::uint32_t> scratch_;
    std::vector<name_t> staged_;
    std::vector<std::uint32_t> counts_;
};

inline NameTable initial_names(const Text& text) { return Namer(text).initial(); }

inline NameTable extend(const Text& text, const NameTable& table) {
    if (table.p + 1 > text.size()) throw std::out_of_range("substring length would exceed the text");
    NameTable next = table;
    Namer(text).extend_in_place(next);
    return next;
}

/// Table for length p, built by p - 1 extensions of the initial table.
inline NameTable names_for_length(const Text& text, std::size_t p) {
    if (p == 0 || p > text.size()) throw std::out_of_range("substring length out of range");
    Namer namer(text);
    NameTable table = namer.initial();
    while (table.p < p) namer.extend_in_place(table);
    return table;
}

}  // namespace antipower
