#include "hookwalk/suites.hpp"

#include <gtest/gtest.h>

using namespace hookwalk;

TEST(Checker, RecordsFirstFailure)
{
    const auto r = run_suite("demo", [](Checker& ck) {
        ck.param("x", "1");
        ck.equal("eq", 1, 1, [] { return std::string("a"); });
        ck.equal("eq", Rational(1, 2), Rational(1, 3), [] { return std::string("b"); });
        ck.equal("eq", 2, 3, [] { return std::string("c"); });
        ck.holds("truth", true, [] { return std::string(); });
    });
    EXPECT_EQ(r.checks, 4);
    EXPECT_EQ(r.failures, 2);
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.first_failure);
    EXPECT_EQ(r.first_failure->check, "eq");
    EXPECT_EQ(r.first_failure->inputs, "b");
    EXPECT_EQ(r.first_failure->lhs, "1/2");
    EXPECT_EQ(r.first_failure->rhs, "1/3");
    ASSERT_EQ(r.groups.size(), 2U);
    EXPECT_EQ(r.groups[0].checks, 3);
    EXPECT_EQ(r.groups[0].failures, 2);
    EXPECT_EQ(r.grid.front(), std::make_pair(std::string("x"), std::string("1")));
}

TEST(Checker, ExceptionsBecomeFailures)
{
    const auto r = run_suite("boom", [](Checker& ck) {
        ck.holds("before", true, [] { return std::string(); });
        throw std::runtime_error("bad");
    });
    EXPECT_EQ(r.failures, 1);
    EXPECT_EQ(r.first_failure->lhs, "bad");
}

TEST(Checker, EmptySuiteDoesNotPass)
{
    EXPECT_FALSE(run_suite("empty", [](Checker&) {}).passed());
}

TEST(Checker, Merge)
{
    const auto a = run_suite("a", [](Checker& ck) { ck.holds("x", true, [] { return std::string(); }); });
    const auto b = run_suite("b", [](Checker& ck) { ck.holds("y", false, [] { return std::string("in"); }); });
    const auto m = merge_reports("ab", {a, b});
    EXPECT_EQ(m.checks, 2);
    EXPECT_EQ(m.failures, 1);
    EXPECT_EQ(m.first_failure->check, "b: y");
    EXPECT_EQ(m.groups[0].name, "a: x");
}

TEST(Suites, SmallBoundsPass)
{
    EXPECT_TRUE(bijection_suite(8, {1, 2, 3}).passed());
    EXPECT_TRUE(running_examples_suite().passed());
    EXPECT_TRUE(hook_formula_suite(7, 6).passed());
    EXPECT_TRUE(per_partition_suite(8, {2, 3}, 2).passed());
    EXPECT_TRUE(increments_suite(40, {1, 2, 3}, 3).passed());
    EXPECT_TRUE(averages_suite({2}, {0, 1, 2}).passed());
    OperatorSuiteBounds ob;
    ob.dg_max_size = 6;
    ob.layer_n = 2;
    ob.eq11_n = 3;
    EXPECT_TRUE(operators_suite(ob).passed());
}

TEST(Suites, NamedSuites)
{
    EXPECT_EQ(suite_names().size(), 6U);
    EXPECT_THROW(run_named_suite("nope"), std::invalid_argument);
    SuiteBounds b;
    b.max_size = 6;
    b.ts = {2};
    const auto r = run_named_suite("bijection", b);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.name, "bijection");
}

TEST(Suites, ResultsIndependentOfWorkers)
{
    const auto one = averages_suite({3}, {0, 1, 2, 3}, 1);
    const auto four = averages_suite({3}, {0, 1, 2, 3}, 4);
    EXPECT_EQ(one.checks, four.checks);
    EXPECT_EQ(one.failures, four.failures);
    EXPECT_TRUE(four.passed());
}
