#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "antipower/distinct_window.hpp"

namespace antipower {
namespace {

using Seq = std::vector<std::uint32_t>;

std::vector<std::size_t> windows(WindowScanner& scanner, const Seq& seq, std::size_t k) {
    std::vector<std::size_t> out;
    scanner.distinct_k_windows(std::span<const std::uint32_t>(seq), k,
                               [&](std::size_t j) { out.push_back(j); });
    return out;
}

std::vector<std::size_t> brute_windows(const Seq& seq, std::size_t k) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j + k <= seq.size(); ++j) {
        bool ok = true;
        for (std::size_t a = j; a < j + k && ok; ++a)
            for (std::size_t b = a + 1; b < j + k && ok; ++b) ok = seq[a] != seq[b];
        if (ok) out.push_back(j);
    }
    return out;
}

DistinctRun brute_longest(const Seq& seq) {
    DistinctRun best;
    for (std::size_t len = seq.size(); len > 0; --len) {
        auto found = brute_windows(seq, len);
        if (!found.empty()) return {found.front(), len};
    }
    return best;
}

TEST(DistinctWindow, LongestExamples) {
    WindowScanner scanner(10);
    EXPECT_EQ(scanner.longest_distinct_substring(std::span<const std::uint32_t>(Seq{1, 2, 6, 3})),
              (DistinctRun{0, 4}));
    EXPECT_EQ(scanner.longest_distinct_substring(std::span<const std::uint32_t>(Seq{7, 7, 7})),
              (DistinctRun{0, 1}));
    EXPECT_EQ(scanner.longest_distinct_substring(std::span<const std::uint32_t>(Seq{2, 2, 2, 4, 2})),
              (DistinctRun{2, 2}));
    EXPECT_EQ(scanner.longest_distinct_substring(std::span<const std::uint32_t>(Seq{})),
              (DistinctRun{0, 0}));
}

TEST(DistinctWindow, TableMetastrings) {
    WindowScanner scanner(10);
    EXPECT_EQ(windows(scanner, {1, 2, 6, 3}, 3), (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(windows(scanner, {2, 2, 2, 4, 2}, 3).empty());
    EXPECT_TRUE(windows(scanner, {4, 3, 4}, 3).empty());
}

TEST(DistinctWindow, OrderLongerThanSequence) {
    WindowScanner scanner(10);
    EXPECT_TRUE(windows(scanner, {1, 2}, 3).empty());
}

TEST(DistinctWindow, ValueBeyondCapacityIsAnError) {
    WindowScanner scanner(4);
    EXPECT_THROW(windows(scanner, {1, 4}, 1), std::out_of_range);
    const Seq big{9};
    EXPECT_THROW(scanner.longest_distinct_substring(std::span<const std::uint32_t>(big)),
                 std::out_of_range);
}

TEST(DistinctWindow, ZeroOrderIsAnError) {
    WindowScanner scanner(4);
    EXPECT_THROW(windows(scanner, {1}, 0), std::invalid_argument);
}

TEST(DistinctWindow, ExhaustiveSmallSequences) {
    // every sequence over {0..3} of length <= 8, every k <= 6
    WindowScanner scanner(4);
    for (std::size_t len = 0; len <= 8; ++len) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            Seq seq(len);
            for (std::size_t i = 0, c = code; i < len; ++i, c /= 4) seq[i] = static_cast<std::uint32_t>(c % 4);
            for (std::size_t k = 1; k <= 6; ++k) ASSERT_EQ(windows(scanner, seq, k), brute_windows(seq, k));
            ASSERT_EQ(scanner.longest_distinct_substring(std::span<const std::uint32_t>(seq)),
                      brute_longest(seq));
        }
    }
}

TEST(DistinctWindowProperty, RandomAgainstBruteForce) {
    std::mt19937_64 rng(3);
    WindowScanner scanner(7);
    for (int trial = 0; trial < 5000; ++trial) {
        std::uniform_int_distribution<std::size_t> len(0, 20);
        std::uniform_int_distribution<std::uint32_t> val(0, 6);
        Seq seq(len(rng));
        for (auto& v : seq) v = val(rng);
        for (std::size_t k = 1; k <= 6; ++k) {
            const auto got = windows(scanner, seq, k);
            ASSERT_EQ(got, brute_windows(seq, k));
            ASSERT_LE(got.size(), seq.size() >= k ? seq.size() - k + 1 : 0);

            // a distinct window of length k + 1 contains distinct windows of length k at j, j + 1
            const auto longer = windows(scanner, seq, k + 1);
            const std::set<std::size_t> shorter(got.begin(), got.end());
            for (auto j : longer) {
                ASSERT_TRUE(shorter.count(j));
                ASSERT_TRUE(shorter.count(j + 1));
            }
        }
    }
}

TEST(DistinctWindowProperty, LinearWork) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {10u, 1000u, 100000u}) {
        WindowScanner scanner(17);
        Seq seq(n);
        std::uniform_int_distribution<std::uint32_t> val(0, 16);
        for (auto& v : seq) v = val(rng);
        const auto before = scanner.steps();
        windows(scanner, seq, 3);
        EXPECT_LE(scanner.steps() - before, 2 * n);
    }
}

TEST(DistinctWindowProperty, EpochsIsolateScans) {
    WindowScanner scanner(5);
    EXPECT_TRUE(windows(scanner, {1, 1}, 2).empty());
    // the 1 from the previous scan must not shrink this window
    EXPECT_EQ(windows(scanner, {2, 1}, 2), (std::vector<std::size_t>{0}));
}

}  // namespace
}  // namespace antipower
