#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace antipower {

struct DistinctRun {
    std::size_t start = 0;
    std::size_t length = 0;

    friend bool operator==(const DistinctRun&, const DistinctRun&) = default;
};

/// Sliding-window scanner for windows of pairwise-distinct values.
///
/// Keeps the last position of every value seen in the current scan. Entries
/// are stamped with a scan epoch, so starting a new scan is O(1) rather than
/// a clear of the whole table.
class WindowScanner {
public:
    explicit WindowScanner(std::size_t capacity) : last_seen_(capacity) {}

    std::size_t capacity() const noexcept { return last_seen_.size(); }

    /// Window-pointer moves performed so far, across all scans.
    std::uint64_t steps() const noexcept { return steps_; }

    std::size_t table_bytes() const noexcept { return last_seen_.capacity() * sizeof(Entry); }

    /// Leftmost longest window of distinct values.
    template <typename T>
    DistinctRun longest_distinct_substring(std::span<const T> seq) {
        check_values(seq);
        DistinctRun best;
        begin_scan();
        std::size_t left = 0;
        for (std::size_t right = 0; right < seq.size(); ++right) {
            left = admit(static_cast<std::size_t>(seq[right]), right, left);
            if (right + 1 - left > best.length) best = {left, right + 1 - left};
        }
        return best;
    }

    /// Calls sink(j) for each j, ascending, with seq[j, j + k) pairwise distinct.
    /// Returns the number of reports.
    template <typename T, typename Sink>
    std::uint64_t distinct_k_windows(std::span<const T> seq, std::size_t k, Sink&& sink) {
        if (k == 0) throw std::invalid_argument("window length must be positive");
        check_values(seq);
        return distinct_k_windows_unchecked(seq, k, sink);
    }

    /// As distinct_k_windows; every value must already be below capacity().
    template <typename T, typename Sink>
    std::uint64_t distinct_k_windows_unchecked(std::span<const T> seq, std::size_t k, Sink&& sink) {
        if (k > seq.size()) return 0;
        begin_scan();
        std::uint64_t reports = 0;
        std::size_t left = 0;
        for (std::size_t right = 0; right < seq.size(); ++right) {
            left = admit(static_cast<std::size_t>(seq[right]), right, left);
            // [left, right] is distinct, hence so is its length-k suffix
            if (right + 1 - left >= k) {
                sink(right + 1 - k);
                ++reports;
            }
        }
        return reports;
    }

private:
    struct Entry {
        std::uint32_t epoch = 0;
        std::uint32_t pos = 0;
    };

    template <typename T>
    void check_values(std::span<const T> seq) const {
        for (const T& v : seq)
            if (static_cast<std::size_t>(v) >= last_seen_.size())
                throw std::out_of_range("sequence value exceeds scanner capacity");
    }

    void begin_scan() {
        if (++epoch_ == 0) {
            for (auto& e : last_seen_) e = Entry{};
            epoch_ = 1;
        }
    }

    // Extends the window to `right`; returns the new left end.
    std::size_t admit(std::size_t value, std::size_t right, std::size_t left) {
        Entry& e = last_seen_[value];
        ++steps_;
        if (e.epoch == epoch_ && e.pos >= left) {
            left = e.pos + 1;
            ++steps_;
        }
        e = {epoch_, static_cast<std::uint32_t>(right)};
        return left;
    }

    std::vector<Entry> last_seen_;
    std::uint32_t epoch_ = 0;
    std::uint64_t steps_ = 0;
};

}  // namespace antipower
