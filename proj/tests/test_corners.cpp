#include "hookwalk/corners.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hookwalk;

TEST(Corners, Examples)
{
    const auto a = corners(Partition{6, 3, 2, 2});
    EXPECT_EQ(a.x, (std::vector<int>{-4, 0, 2, 6}));
    EXPECT_EQ(a.y, (std::vector<int>{-2, 1, 5}));
    EXPECT_EQ(corners(Partition{}), (CornerData{{0}, {}}));
    EXPECT_EQ(corners(Partition{3}), (CornerData{{-1, 3}, {2}}));
}

TEST(Corners, AddCell)
{
    EXPECT_EQ(add_cell(Partition{}, 0), Partition{1});
    EXPECT_EQ(add_cell(Partition{3}, -1), (Partition{3, 1}));
    EXPECT_EQ(add_cell(Partition{3}, 3), Partition{4});
    EXPECT_THROW(add_cell(Partition{3}, 1), std::invalid_argument);
    EXPECT_TRUE(is_inner_corner(Partition{6, 3, 2, 2}, -4));
    EXPECT_FALSE(is_inner_corner(Partition{6, 3, 2, 2}, 1));
}

TEST(Corners, QkBasics)
{
    const Partition p{6, 3, 2, 2};
    EXPECT_EQ(q_k(p, 1), 0);
    EXPECT_EQ(q_k(p, 2), 26);
    EXPECT_EQ(q_k(Partition{}, 0), 1);
    EXPECT_EQ(q_k(Partition{}, 3), 0);
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            EXPECT_EQ(q_k(lambda, 0), 1);
            EXPECT_EQ(q_k(lambda, 1), 0);
            EXPECT_EQ(q_k(lambda, 2), 2 * n);
        }
    EXPECT_EQ(q_k(Partition{3}, -1), Rational(-1) + Rational(1, 3) - Rational(1, 2));
    EXPECT_THROW(q_k(Partition{}, -1), std::domain_error);
}

TEST(Corners, Q3AlongGrowthChain)
{
    Partition p;
    Rational q3 = 0;
    for (int c : {0, 1, -1}) {
        q3 += Rational(q_increment(p, 3, c));
        p = add_cell(p, c);
    }
    EXPECT_EQ(p, (Partition{2, 1}));
    EXPECT_EQ(q3, q_k(p, 3));
}

TEST(Corners, QTuple)
{
    const std::vector<Partition> quotients{Partition{2, 1}, Partition{3}};
    EXPECT_EQ(q_tuple(quotients, {Partition{}, Partition{}}), 1);
    EXPECT_EQ(q_tuple(quotients, {Partition{}, Partition{2}}), 6);
    EXPECT_EQ(q_tuple(quotients, {Partition{2, 2}, Partition{}}), 36);
    EXPECT_EQ(q_tuple(quotients, {Partition{2}, Partition{3}}), q_k(quotients[0], 2) * q_k(quotients[1], 3));
    EXPECT_THROW(q_tuple(quotients, {Partition{}}), std::invalid_argument);
}

TEST(Corners, QIncrement)
{
    const Partition p{6, 3, 2, 2};
    for (int x : corners(p).x) {
        EXPECT_EQ(q_increment(p, 2, x), 2);
        EXPECT_EQ(q_increment(p, 3, x), 6 * x);
    }
    EXPECT_EQ(q_increment(p, 4, 2), 50);
    EXPECT_EQ(Rational(50), q_k(add_cell(p, 2), 4) - q_k(p, 4));
    EXPECT_THROW(q_increment(p, 4, 1), std::invalid_argument);
}

TEST(Corners, WeightedCornerSums)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            EXPECT_EQ(weighted_corner_sum(lambda, 0), 1);
            EXPECT_EQ(weighted_corner_sum(lambda, 1), 0);
            EXPECT_EQ(weighted_corner_sum(lambda, 2), n);
        }
}

TEST(StatSpec, ParseAndRender)
{
    const auto s = parse_stat_spec("hook:t=3,j=1,pow=2,paired");
    EXPECT_EQ(s, (StatSpec{StatKind::hook, 3, 1, 2, true}));
    EXPECT_EQ(to_string(s), "hook:t=3,j=1,pow=2,paired");
    EXPECT_EQ(to_string(parse_stat_spec("content:t=3,j=2,pow=1")), "content:t=3,j=2,pow=1");
    EXPECT_EQ(parse_stat_spec("hook:pow=2", 2), (StatSpec{StatKind::hook, 2, 0, 2, false}));
    EXPECT_THROW(parse_stat_spec("hook:pow=2"), std::invalid_argument);
    EXPECT_THROW(parse_stat_spec("hook:t=2,j=2,pow=2"), std::invalid_argument);
    EXPECT_THROW(parse_stat_spec("cell:t=2,pow=2"), std::invalid_argument);
    EXPECT_THROW(parse_stat_spec("hook:t=2,j=0"), std::invalid_argument);
    EXPECT_THROW(parse_stat_spec("hook:t=2,pow=x"), std::invalid_argument);
    EXPECT_THROW(parse_stat_spec("hook:t=2,pow=2,G"), std::invalid_argument);
}

TEST(StatSpec, Evaluation)
{
    EXPECT_EQ(stat_eval(Partition{2}, {StatKind::hook, 2, 0, 2, true}), 8);
    EXPECT_EQ(stat_eval(Partition{2}, {StatKind::content, 2, 1, 2, false}), 1);
    EXPECT_EQ(stat_eval(Partition{}, {StatKind::hook, 3, 1, 4, true}), 0);
    EXPECT_EQ(stat_eval(Partition{1, 1}, {StatKind::content, 2, 1, 1, false}), -1);
    EXPECT_EQ(stat_eval(Partition{6, 3, 2, 2}, {StatKind::hook, 1, 0, 0, false}), 13);
    EXPECT_EQ(stat_eval(Partition{6, 3, 2, 2}, {StatKind::hook, 4, 1, 1, true}), 9 + 5 + 3 + 1 + 5 + 1 + 3 + 1);
}

TEST(Increments, ContentDelta)
{
    auto dec = decompose(Partition{}, 2);
    EXPECT_EQ(content_delta(dec, 0, 0), (std::vector<int>{0, -1}));
    EXPECT_EQ(recompose(grow_quotient(dec, 0, 0)), (Partition{1, 1}));
    EXPECT_EQ(content_delta(dec, 1, 0), (std::vector<int>{1, 0}));
    EXPECT_EQ(recompose(grow_quotient(dec, 1, 0)), Partition{2});
    EXPECT_EQ(content_delta(decompose(Partition{3, 1}, 1), 0, -2), (std::vector<int>{-2}));
    EXPECT_THROW(content_delta(dec, 0, 1), std::invalid_argument);
    EXPECT_THROW(content_delta(dec, 2, 0), std::invalid_argument);
}

TEST(Increments, HookDeltaAtZeroPower)
{
    for (int t = 1; t <= 4; ++t)
        for (int n = 0; n <= 8; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                const auto dec = decompose(lambda, t);
                for (int i = 0; i < t; ++i)
                    for (int c : corners(dec.quotients[static_cast<std::size_t>(i)]).x) {
                        EXPECT_EQ(hook_delta_power(dec, i, c, 0, 0), 1);
                        EXPECT_EQ(hook_delta_power_total(dec, i, c, 0), t);
                    }
            }
}

TEST(Increments, TotalFormulaAtModulusOne)
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto dec = decompose(lambda, 1);
            for (int c : corners(lambda).x)
                for (int r = 0; r <= 3; ++r) {
                    const StatSpec s{StatKind::hook, 1, 0, 2 * r, false};
                    EXPECT_EQ(hook_delta_power_total(dec, 0, c, r), stat_eval(add_cell(lambda, c), s) - stat_eval(lambda, s));
                }
        }
}

TEST(Increments, RandomAgainstDirectRecomputation)
{
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int t = std::uniform_int_distribution<int>(1, 4)(rng);
        const auto options = partitions_of(std::uniform_int_distribution<int>(0, 14)(rng));
        const auto lambda = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        const auto dec = decompose(lambda, t);
        const int i = std::uniform_int_distribution<int>(0, t - 1)(rng);
        const auto xs = corners(dec.quotients[static_cast<std::size_t>(i)]).x;
        const int c = xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
        const auto plus = recompose(grow_quotient(dec, i, c));
        for (int k = 0; k < t; ++k)
            for (int r = 0; r <= 2; ++r) {
                const StatSpec s{StatKind::hook, t, k, 2 * r, k != 0};
                EXPECT_EQ(hook_delta_power(dec, i, c, k, r), stat_eval(plus, s) - stat_eval(lambda, s));
                ++checked;
            }
    }
    EXPECT_GT(checked, 300);
}

namespace {

/// Value at x of the polynomial through the given points.
Rational lagrange(const std::vector<std::pair<int, Rational>>& pts, int x)
{
    Rational total = 0;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        Rational term = pts[a].second;
        for (std::size_t b = 0; b < pts.size(); ++b)
            if (a != b) term *= ratio(x - pts[b].first, pts[a].first - pts[b].first);
        total += term;
    }
    return total;
}

} // namespace

// The increment at each legal corner of a quotient with many corners lies on
// one polynomial in c of the expected degree, and that polynomial is the one
// built from the q-statistics.
TEST(Increments, AdmissibilityByInterpolation)
{
    const int t = 3;
    const Partition core{3, 1};
    const std::vector<Partition> quotients{Partition{2}, Partition{5, 4, 3, 2, 1}, Partition{1, 1}};
    const auto lambda = recompose(core, quotients, t);
    const auto dec = decompose(lambda, t);
    const int i = 1;
    const auto xs = corners(quotients[1]).x;
    ASSERT_EQ(xs.size(), 6U);

    std::vector<StatSpec> specs;
    for (int j = 0; j < t; ++j) {
        for (int pw = 0; pw <= 4; ++pw) specs.push_back({StatKind::content, t, j, pw, false});
        for (int pw : {0, 2, 4}) specs.push_back({StatKind::hook, t, j, pw, true});
    }
    specs.push_back({StatKind::hook, t, 0, 4, false});

    for (const auto& s : specs) {
        std::vector<std::pair<int, Rational>> pts;
        for (int c : xs) pts.emplace_back(c, Rational(stat_eval(recompose(grow_quotient(dec, i, c)), s) - stat_eval(lambda, s)));
        const std::vector<std::pair<int, Rational>> fit(pts.begin(), pts.begin() + s.power + 1);
        for (const auto& [c, v] : pts) EXPECT_EQ(lagrange(fit, c), v) << to_string(s) << " c=" << c;
        const auto poly = increment_polynomial(dec, i, s);
        EXPECT_LE(poly.size(), static_cast<std::size_t>(s.power + 1));
        for (int c = -12; c <= 12; ++c) EXPECT_EQ(evaluate(poly, c), lagrange(fit, c)) << to_string(s) << " c=" << c;
    }
}

TEST(Increments, PolynomialPreconditions)
{
    const auto dec = decompose(Partition{3, 1}, 3);
    EXPECT_THROW(increment_polynomial(dec, 0, {StatKind::hook, 3, 1, 3, true}), std::invalid_argument);
    EXPECT_THROW(increment_polynomial(dec, 0, {StatKind::hook, 3, 1, 2, false}), std::invalid_argument);
    EXPECT_THROW(increment_polynomial(dec, 0, {StatKind::hook, 2, 1, 2, true}), std::invalid_argument);
}
