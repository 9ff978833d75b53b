#include <algorithm>

#include <gtest/gtest.h>

#include "antipower/oracle.hpp"
#include "antipower/search.hpp"
#include "antipower/witness.hpp"

namespace antipower {
namespace {

using namespace witness;

TEST(Witness, Generate) {
    EXPECT_EQ(generate(5), "0$1$10$11$100$101$");
    EXPECT_EQ(generate(5).size(), 18u);
    EXPECT_EQ(generate(0), "0$");
    EXPECT_EQ(generate_text(5).sigma(), 3u);
}

TEST(Witness, Params) {
    EXPECT_EQ(params(5).n, 18u);
    EXPECT_EQ(params(64).n, 394u);
    EXPECT_EQ(params(64).n, generate(64).size());
    EXPECT_EQ(params(64).log_term, 6u);
    EXPECT_EQ(params(1).log_term, 0u);
    EXPECT_EQ(params(0).log_term, 0u);
    EXPECT_EQ(ceil_log2(5), 3u);
    EXPECT_EQ(ceil_log2(65), 7u);
    EXPECT_EQ(anti_period_threshold(64), 15u);
}

TEST(Witness, DollarCount) {
    for (std::uint64_t m = 0; m <= 200; ++m) {
        const auto w = generate(m);
        EXPECT_EQ(static_cast<std::uint64_t>(std::count(w.begin(), w.end(), '$')), m + 1);
        EXPECT_EQ(w.size(), params(m).n);
    }
}

TEST(Witness, LowerBoundValue) {
    EXPECT_EQ(lower_bound_value(18, 2, 5), -90);
    // 394^2/4 - 7*394/2 - 2*394*ceil(log2 64) = 38809 - 1379 - 4728
    EXPECT_EQ(lower_bound_value(394, 2, 64), 32702);
    // 100^2/6 - 350 - 0 = 1316.67 -> 1316
    EXPECT_EQ(lower_bound_value(100, 3, 1), 1316);
    // negative, non-integral: 10^2/6 - 35 - 40 = -58.33 -> -59
    EXPECT_EQ(lower_bound_value(10, 3, 4), -59);
    EXPECT_LT(lower_bound_value(50, 2, 64), 0);
    EXPECT_THROW(lower_bound_value(10, 1, 4), std::invalid_argument);
}

TEST(Witness, UniqueDollarFactors) {
    EXPECT_TRUE(check_unique_dollar_factors(generate_text(5)));
    EXPECT_FALSE(check_unique_dollar_factors(Text::from_bytes("0$1$0$1$")));
    EXPECT_TRUE(check_unique_dollar_factors(Text::from_bytes("01")));
    EXPECT_TRUE(check_unique_dollar_factors(Text::from_bytes("")));
}

TEST(WitnessProperty, UniqueDollarFactorsUpTo32) {
    for (std::uint64_t m = 0; m <= 32; ++m) EXPECT_TRUE(check_unique_dollar_factors(generate_text(m))) << m;
}

TEST(WitnessProperty, EveryEarlyPositionStartsAnAntiPower) {
    for (std::uint64_t m = 1; m <= 32; ++m) {
        const Text w = generate_text(m);
        const std::size_t n = w.size();
        for (std::size_t k = 2; k <= 4; ++k)
            for (std::size_t p = anti_period_threshold(m) + 1; p * k < n; ++p)
                for (std::size_t i = 0; i + p * k < n; ++i)
                    ASSERT_TRUE(oracle::is_anti_power(w, {i + 1, i + p * k, k}))
                        << "m=" << m << " k=" << k << " p=" << p << " i=" << i;
    }
}

TEST(WitnessProperty, CountMeetsBoundWhenPositive) {
    for (std::uint64_t m : {16u, 40u, 64u, 100u}) {
        const Text w = generate_text(m);
        for (std::size_t k : {2u, 3u}) {
            const auto bound = lower_bound_value(w.size(), k, m);
            if (bound <= 0) continue;
            std::uint64_t above = 0;
            find_all(w, k, {}, [&](const AntiPowerHit& h) {
                if (h.anti_period > anti_period_threshold(m)) ++above;
            });
            EXPECT_GE(static_cast<std::int64_t>(above), bound) << "m=" << m << " k=" << k;
        }
    }
}

}  // namespace
}  // namespace antipower
