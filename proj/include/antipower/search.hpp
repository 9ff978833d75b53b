#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "antipower/distinct_window.hpp"
#include "antipower/naming.hpp"
#include "antipower/text.hpp"

namespace antipower {

/// Restricts the anti-periods a search reports. Hits are always produced in
/// ascending (anti-period, residue, metastring index) order.
struct SearchOptions {
    std::size_t min_anti_period = 1;
    /// Defaults to floor(n / k); larger values are clamped to it.
    std::optional<std::size_t> max_anti_period;
};

/// Names of the length-p substrings starting at positions r, r + p, r + 2p, ...
struct Metastring {
    std::size_t p = 0;
    std::size_t r = 0;
    std::vector<name_t> values;
};

/// Number of positions i = r (mod p) that start a length-p substring of a
/// text of length n.
constexpr std::size_t metastring_size(std::size_t n, std::size_t p, std::size_t r) noexcept {
    if (p == 0 || p > n || r > n - p) return 0;
    return (n - p - r) / p + 1;
}

namespace detail {

inline void fill_metastring(const NameTable& table, std::size_t r, Metastring& out) {
    out.p = table.p;
    out.r = r;
    out.values.clear();
    for (std::size_t i = r; i < table.names.size(); i += table.p) out.values.push_back(table.names[i]);
}

struct NoObserver {
    void operator()(const Metastring&) const noexcept {}
};

}  // namespace detail

inline Metastring build_metastring(const NameTable& table, std::size_t r) {
    if (r >= table.p) throw std::out_of_range("residue must be below the anti-period");
    Metastring m;
    m.values.reserve(table.names.size() / table.p + 1);
    detail::fill_metastring(table, r, m);
    return m;
}

/// Window j..j+k-1 of metastring (p, r) covers text[r + j*p, r + (j+k)*p).
constexpr AntiPowerHit map_hit(std::size_t p, std::size_t r, std::size_t j, std::size_t k) noexcept {
    return {r + j * p, p, k};
}

/// All scratch a search needs, allocated once per text.
///
/// Holds one name table (advanced in place round by round), one metastring
/// buffer and one window scanner, all O(n). Reusing a workspace across
/// searches on the same text allocates nothing new.
class SearchWorkspace {
public:
    explicit SearchWorkspace(const Text& text)
        : text_(&text), namer_(text), scanner_(text.size() + 1) {
        table_.names.reserve(text.size());
        table_.order.reserve(text.size());
        metastring_.values.reserve(text.size());
    }

    const Text& text() const noexcept { return *text_; }

    std::size_t bytes() const noexcept {
        return namer_.scratch_bytes() + scanner_.table_bytes() +
               (table_.names.capacity() + table_.order.capacity() +
                metastring_.values.capacity()) * sizeof(std::uint32_t);
    }

    std::uint64_t scanner_steps() const noexcept { return scanner_.steps(); }

    /// Reports every k-anti-power occurrence of the text to sink.
    ///
    /// Round p names all length-p substrings, splits the names into p
    /// residue metastrings and reports every length-k window of distinct
    /// names. Time is O(n^2 / k), extra space O(n); hits are streamed, never
    /// stored. The observer sees each metastring as it is scanned.
    template <typename Sink, typename Observer = detail::NoObserver>
    std::uint64_t run(std::size_t k, const SearchOptions& options, Sink&& sink,
                      Observer&& observer = {}) {
        if (k < 2) throw std::invalid_argument("order must exceed 1");
        if (options.min_anti_period == 0) throw std::invalid_argument("anti-period must be positive");
        if (options.max_anti_period && *options.max_anti_period < options.min_anti_period)
            throw std::invalid_argument("minimum anti-period exceeds maximum");

        const std::size_t n = text_->size();
        std::size_t last_round = n / k;
        if (options.max_anti_period) last_round = std::min(last_round, *options.max_anti_period);
        if (n == 0 || last_round < options.min_anti_period) return 0;

        constexpr bool observed =
            !std::is_same_v<std::remove_cvref_t<Observer>, detail::NoObserver>;

        std::uint64_t total = 0;
        namer_.initial_into(table_);
        for (std::size_t p = 1; p <= last_round; ++p) {
            if (p > 1) namer_.extend_in_place(table_, /*keep_order=*/false);
            if (p < options.min_anti_period) continue;

            // residues r <= (n - p) % p get one more position than the rest
            const std::size_t shortest = (n - p) / p;
            const std::size_t longer_until = (n - p) % p;
            for (std::size_t r = 0; r < p; ++r) {
                const std::size_t len = r <= longer_until ? shortest + 1 : shortest;
                if (observed || !table_.saturated()) detail::fill_metastring(table_, r, metastring_);
                if constexpr (observed) observer(static_cast<const Metastring&>(metastring_));
                if (len < k) continue;

                if (table_.saturated()) {
                    // all names distinct: every window qualifies
                    for (std::size_t j = 0; j + k <= len; ++j) sink(map_hit(p, r, j, k));
                    total += len - k + 1;
                } else {
                    total += scanner_.distinct_k_windows_unchecked(
                        std::span<const name_t>(metastring_.values), k,
                        [&](std::size_t j) { sink(map_hit(p, r, j, k)); });
                }
            }
        }
        return total;
    }

private:
    const Text* text_;
    Namer namer_;
    NameTable table_;
    Metastring metastring_;
    WindowScanner scanner_;
};

template <typename Sink, typename Observer = detail::NoObserver>
std::uint64_t find_all(SearchWorkspace& ws, std::size_t k, const SearchOptions& options, Sink&& sink,
                       Observer&& observer = {}) {
    return ws.run(k, options, std::forward<Sink>(sink), std::forward<Observer>(observer));
}

template <typename Sink>
std::uint64_t find_all(const Text& text, std::size_t k, const SearchOptions& options, Sink&& sink) {
    if (k < 2) throw std::invalid_argument("order must exceed 1");
    SearchWorkspace ws(text);
    return find_all(ws, k, options, std::forward<Sink>(sink));
}

/// Collecting adapter for tests and small inputs.
inline std::vector<AntiPowerHit> collect_all(const Text& text, std::size_t k,
                                             const SearchOptions& options = {}) {
    std::vector<AntiPowerHit> hits;
    find_all(text, k, options, [&](const AntiPowerHit& h) { hits.push_back(h); });
    return hits;
}

/// AP(k, p) for p = 0..floor(n/k); entry 0 is always zero.
inline std::vector<std::uint64_t> count_by_anti_period(const Text& text, std::size_t k) {
    if (k < 2) throw std::invalid_argument("order must exceed 1");
    std::vector<std::uint64_t> counts(text.size() / k + 1, 0);
    find_all(text, k, {}, [&](const AntiPowerHit& h) { ++counts[h.anti_period]; });
    return counts;
}

}  // namespace antipower
