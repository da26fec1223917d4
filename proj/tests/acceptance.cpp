// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include "hookwalk/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

using namespace hookwalk;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<SuiteReport()> run;
};

} // namespace

int main()
{
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());

    const std::vector<Criterion> criteria{
        {"AC1", "Littlewood bijection, |lambda| <= 20, t = 1..5", 60, [] { return bijection_suite(20, {1, 2, 3, 4, 5}); }},
        {"AC2", "worked examples", 60, [] { return running_examples_suite(); }},
        {"AC3", "hook formula and hook sums, |lambda| <= 12", 120, [] { return hook_formula_suite(12, 8); }},
        {"AC4", "walk weights and difference operator", 120,
         [workers] {
             OperatorSuiteBounds b;
             b.workers = workers;
             return operators_suite(b);
         }},
        {"AC5", "per-partition identities, |lambda| <= 18", 180, [] { return per_partition_suite(18, {2, 3, 4}, 3); }},
        {"AC6", "closed-form averages, t = 2,3, n = 0..4", 600, [workers] { return averages_suite({2, 3}, {0, 1, 2, 3, 4}, workers); }},
        {"AC7", "corner increments, 300 samples per t", 60, [] { return increments_suite(300, {1, 2, 3, 4}); }},
        {"AC8", "polynomiality certificates", 600, [workers] { return polynomiality_suite({2, 3}, workers); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const SuiteReport r = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool ok = r.passed() && in_time;
        if (!ok) ++failed;
        std::printf("%s %s: %s (%lld checks, %lld failures, %.2fs / %.0fs)\n", ok ? "PASS" : "FAIL", c.id.c_str(),
                    c.title.c_str(), static_cast<long long>(r.checks), static_cast<long long>(r.failures), secs,
                    c.limit_seconds);
        if (r.first_failure)
            std::printf("    first failure: %s [%s] %s != %s\n", r.first_failure->check.c_str(), r.first_failure->inputs.c_str(),
                        r.first_failure->lhs.c_str(), r.first_failure->rhs.c_str());
        if (!in_time) std::printf("    time limit exceeded\n");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
