#include "hookwalk/operators.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hookwalk;

namespace {

const auto G2 = [](const Partition& p) { return G_lambda(p, 2); };

PartitionStatistic hook_square_multiples(int t)
{
    return {t, true, {StatSpec{StatKind::hook, t, 0, 2, false}}, std::nullopt};
}

} // namespace

TEST(Operators, Covers)
{
    const auto c = covers(Partition{}, 2);
    EXPECT_EQ(std::set<Partition>(c.begin(), c.end()), (std::set<Partition>{Partition{2}, Partition{1, 1}}));
    EXPECT_EQ(covers(Partition{}, 1), std::vector<Partition>{Partition{1}});
    const auto up = covers(Partition{3, 1}, 3);
    EXPECT_EQ(up.size(), 3U);
    for (const auto& p : up) {
        EXPECT_EQ(t_core(p, 3), (Partition{3, 1}));
        EXPECT_EQ(decompose(p, 3).weight(), 1);
    }
}

TEST(Operators, ApplyDt)
{
    for (int t = 1; t <= 4; ++t)
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : enumerate_partitions(n))
                EXPECT_EQ(apply_Dt([t](const Partition& q) { return G_lambda(q, t); }, p, t), 0);
    const auto one = [](const Partition&) { return Rational(1); };
    EXPECT_EQ(apply_Dt(one, Partition{}, 2), 1);
    EXPECT_EQ(apply_Dt(one, Partition{3, 1}, 3), 2);
    EXPECT_EQ(apply_Dt(hook_square_multiples(2), Partition{}, 2), 4);
}

TEST(Operators, Powers)
{
    EXPECT_EQ(apply_Dt_power(G2, Partition{}, 2, 0), 1);
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(apply_Dt_power(G2, Partition{1}, 2, r), 0);
    const auto g = hook_square_multiples(2);
    EXPECT_EQ(apply_Dt_power(g, Partition{}, 2, 0), 0);
    EXPECT_EQ(apply_Dt_power(g, Partition{}, 2, 1), 4);
    EXPECT_EQ(apply_Dt_power(g, Partition{}, 2, 2), 6);
    EXPECT_EQ(apply_Dt_power(g, Partition{}, 2, 3), 0);
    const PartitionStatistic raw{2, false, {StatSpec{StatKind::hook, 1, 0, 2, false}}, std::nullopt};
    EXPECT_EQ(apply_Dt_power(raw, Partition{5, 3, 1, 1}, 2, 0), raw(Partition{5, 3, 1, 1}));
    EXPECT_THROW(apply_Dt_power_recursive(G2, Partition{}, 2, -1), std::invalid_argument);
}

TEST(Operators, PlancherelAverages)
{
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(plancherel_average(G2, Partition{}, 2, n), 1);
    EXPECT_EQ(plancherel_average(hook_square_multiples(2), Partition{}, 2, 1), 4);
    const PartitionStatistic c1{2, true, {StatSpec{StatKind::content, 2, 1, 2, false}}, std::nullopt};
    EXPECT_EQ(plancherel_average(c1, Partition{}, 2, 1), 1);
    const PartitionStatistic at_core{3, false, {StatSpec{StatKind::hook, 1, 0, 2, false}}, std::nullopt};
    EXPECT_EQ(plancherel_average(at_core, Partition{5, 3, 1, 1}, 3, 0), at_core(Partition{5, 3, 1, 1}));
    EXPECT_THROW(plancherel_average(G2, Partition{2}, 2, 1), std::invalid_argument);
}

TEST(Operators, WorkerCountDoesNotChangeSums)
{
    const PartitionStatistic g{3, true, {StatSpec{StatKind::hook, 3, 1, 2, true}, StatSpec{StatKind::content, 3, 0, 2, false}},
                               std::nullopt};
    const auto points = layer_above(Partition{}, 3, 4);
    const Rational one = layer_sum(g, points, 1);
    for (unsigned w : {2U, 3U, 8U, 1000U}) EXPECT_EQ(layer_sum(g, points, w), one);
}

TEST(Operators, DifferenceTable)
{
    const auto tab = difference_table({Rational(1), Rational(4), Rational(9), Rational(16), Rational(25)}, 2);
    EXPECT_TRUE(tab.certified);
    EXPECT_EQ(tab.vanishing_order, 3);
    EXPECT_EQ(tab.diffs[2], (std::vector<Rational>{2, 2, 2}));
    const auto low = difference_table(tab.values, 1);
    EXPECT_FALSE(low.certified);
    EXPECT_EQ(low.witness, 0);
    const auto short_window = difference_table({Rational(1), Rational(2)}, 3);
    EXPECT_FALSE(short_window.certified);
    EXPECT_FALSE(short_window.witness);
}

TEST(Operators, CertifyPolynomiality)
{
    const auto tab = certify_polynomiality(hook_square_multiples(2), Partition{}, 2, 2);
    EXPECT_TRUE(tab.certified);
    EXPECT_TRUE(tab.telescoping_ok);
    EXPECT_EQ(tab.window(), 5);
    const std::vector<Rational> head(tab.values.begin(), tab.values.begin() + 4);
    EXPECT_EQ(head, (std::vector<Rational>{0, 4, 14, 30}));
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(tab.values[static_cast<std::size_t>(n)], 4 * n + 6 * choose2(n));

    const auto constant = certify_polynomiality(G2, Partition{}, 2, 0);
    EXPECT_TRUE(constant.certified);
    for (const auto& v : constant.values) EXPECT_EQ(v, 1);

    const PartitionStatistic product{3, true, {StatSpec{StatKind::hook, 3, 1, 2, true}, StatSpec{StatKind::content, 3, 0, 2, false}},
                                     std::nullopt};
    const auto p = certify_polynomiality(product, Partition{}, 3, 4);
    EXPECT_TRUE(p.certified);
    EXPECT_EQ(p.window(), 7);
    EXPECT_EQ(p.vanishing_order, 5);

    const auto refuted = certify_polynomiality(hook_square_multiples(2), Partition{}, 2, 1);
    EXPECT_FALSE(refuted.certified);
    EXPECT_EQ(refuted.witness, 0);
    EXPECT_THROW(certify_polynomiality(G2, Partition{}, 2, 0, 0), std::invalid_argument);
}

TEST(Operators, BinomialTransformPair)
{
    const PartitionStatistic g{3, true, {StatSpec{StatKind::content, 3, 2, 2, false}}, std::nullopt};
    const Partition mu{3, 1};
    DtPowers<PartitionStatistic> powers(g, 3);
    for (int n = 0; n <= 4; ++n) {
        Rational forward = 0;
        for (int k = 0; k <= n; ++k) forward += Rational(binomial(n, k)) * powers(mu, k);
        EXPECT_EQ(plancherel_average(g, mu, 3, n), forward);
        EXPECT_EQ(apply_Dt_power_by_transform(g, mu, 3, n), powers(mu, n));
    }
}

TEST(Operators, QStatisticsVanishAtPredictedOrder)
{
    const PartitionStatistic g{2, true, {}, std::vector<Partition>{Partition{4}, Partition{}}};
    DtPowers<PartitionStatistic> powers(g, 2);
    for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : enumerate_partitions(n)) EXPECT_EQ(powers(lambda, 3), 0) << to_string(lambda);
    EXPECT_EQ(powers(Partition{}, 1), 1);
    EXPECT_EQ(powers(Partition{}, 2), 3);
}

TEST(Operators, Describe)
{
    const PartitionStatistic g{3, true, {StatSpec{StatKind::hook, 3, 1, 2, true}}, std::vector<Partition>{Partition{2}, Partition{}, Partition{}}};
    EXPECT_EQ(g.describe(), "G * [hook:t=3,j=1,pow=2,paired] * q(2;-;-)");
}
