#pragma once

// Verification suites: exact checks of the bijection, the hook-walk
// identities, the per-partition square formulas, the closed-form averages
// and polynomiality certificates, each returning a SuiteReport.

#include "hookwalk/boundary.hpp"
#include "hookwalk/corners.hpp"
#include "hookwalk/exact.hpp"
#include "hookwalk/littlewood.hpp"
#include "hookwalk/operators.hpp"
#include "hookwalk/partition.hpp"
#include "hookwalk/tableaux.hpp"
#include "hookwalk/weights.hpp"

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hookwalk {

struct FailureWitness {
    std::string check;
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct CheckGroup {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
};

struct SuiteReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> grid;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::optional<FailureWitness> first_failure;
    std::vector<CheckGroup> groups;
    std::vector<std::string> notes;
    double wall_seconds = 0;

    bool passed() const { return failures == 0 && checks > 0; }
};

namespace detail {

inline std::string show(const std::string& s) { return s; }
inline std::string show(const char* s) { return s; }
inline std::string show(const Rational& q) { return to_string(q); }
inline std::string show(const BigInt& z) { return to_string(z); }
inline std::string show(const Partition& p) { return to_string(p); }
inline std::string show(bool b) { return b ? "true" : "false"; }
template <std::integral T>
std::string show(T v) { return std::to_string(v); }

template <class T>
std::string show(const std::vector<T>& v)
{
    const char* sep = std::is_same_v<T, Partition> ? " | " : ",";
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + show(v[k]);
    return out + ")";
}

template <class T>
std::vector<T> sorted(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// a - b as multisets, or nullopt when b is not contained in a.
inline std::optional<std::vector<int>> multiset_minus(std::vector<int> a, std::vector<int> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> out;
    std::size_t j = 0;
    for (int v : a) {
        if (j < b.size() && b[j] == v)
            ++j;
        else
            out.push_back(v);
    }
    if (j != b.size()) return std::nullopt;
    return out;
}

inline std::vector<int> range_list(int lo, int hi)
{
    std::vector<int> v(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

} // namespace detail

/// Accumulates exact checks for one suite.
class Checker {
public:
    explicit Checker(std::string suite) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(suite); }

    void param(std::string key, std::string value) { report_.grid.emplace_back(std::move(key), std::move(value)); }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    /// inputs is a callable producing a description; it runs only on failure.
    template <class L, class R, class In>
    bool equal(std::string_view check, const L& lhs, const R& rhs, In&& inputs)
    {
        const bool ok = lhs == rhs;
        record(check, ok, [&] { return FailureWitness{std::string(check), inputs(), detail::show(lhs), detail::show(rhs)}; });
        return ok;
    }

    template <class In>
    bool holds(std::string_view check, bool ok, In&& inputs)
    {
        record(check, ok, [&] { return FailureWitness{std::string(check), inputs(), "false", "true"}; });
        return ok;
    }

    void fail(std::string_view check, std::string inputs, std::string lhs, std::string rhs)
    {
        record(check, false, [&] { return FailureWitness{std::string(check), inputs, lhs, rhs}; });
    }

    SuiteReport finish()
    {
        report_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report_;
    }

private:
    template <class W>
    void record(std::string_view check, bool ok, W&& witness)
    {
        auto it = group_index_.find(std::string(check));
        if (it == group_index_.end()) {
            it = group_index_.emplace(std::string(check), report_.groups.size()).first;
            report_.groups.push_back({std::string(check), 0, 0});
        }
        auto& g = report_.groups[it->second];
        ++g.checks;
        ++report_.checks;
        if (ok) return;
        ++g.failures;
        ++report_.failures;
        if (!report_.first_failure) report_.first_failure = witness();
    }

    SuiteReport report_;
    std::map<std::string, std::size_t> group_index_;
    std::chrono::steady_clock::time_point start_;
};

/// Runs body(checker); an escaping exception becomes a failed check.
template <class Body>
SuiteReport run_suite(std::string name, Body&& body)
{
    Checker ck(std::move(name));
    try {
        body(ck);
    } catch (const std::exception& e) {
        ck.fail("uncaught exception", "", e.what(), "no exception");
    }
    return ck.finish();
}

/// One report covering several sub-suites; groups are prefixed by sub-suite.
inline SuiteReport merge_reports(std::string name, const std::vector<SuiteReport>& parts)
{
    SuiteReport out;
    out.name = std::move(name);
    for (const auto& p : parts) {
        for (const auto& [k, v] : p.grid) out.grid.emplace_back(p.name + "." + k, v);
        out.checks += p.checks;
        out.failures += p.failures;
        if (!out.first_failure && p.first_failure) {
            out.first_failure = p.first_failure;
            out.first_failure->check = p.name + ": " + out.first_failure->check;
        }
        for (auto g : p.groups) {
            g.name = p.name + ": " + g.name;
            out.groups.push_back(std::move(g));
        }
        for (const auto& n : p.notes) out.notes.push_back(p.name + ": " + n);
        out.wall_seconds += p.wall_seconds;
    }
    return out;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out;
}

inline std::vector<Partition> cores_up_to(int t, int max_size)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const auto& p : enumerate_partitions(n))
            if (is_t_core(p, t)) out.push_back(p);
    return out;
}

/// Random (core, quotients) instance with quotient weight at most max_weight.
struct RandomInstance {
    Partition core;
    std::vector<Partition> quotients;
    Partition lambda;
    int t = 1;
};

inline RandomInstance random_instance(std::mt19937_64& rng, int t, const std::vector<Partition>& cores, int max_weight)
{
    RandomInstance inst;
    inst.t = t;
    inst.core = cores[std::uniform_int_distribution<std::size_t>(0, cores.size() - 1)(rng)];
    const int w = std::uniform_int_distribution<int>(0, max_weight)(rng);
    std::vector<int> sizes(static_cast<std::size_t>(t), 0);
    for (int k = 0; k < w; ++k) ++sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    for (int s : sizes) {
        const auto options = partitions_of(s);
        inst.quotients.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    inst.lambda = recompose(inst.core, inst.quotients, t);
    return inst;
}

inline Partition random_partition(std::mt19937_64& rng, int max_size)
{
    const auto options = partitions_of(std::uniform_int_distribution<int>(0, max_size)(rng));
    return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

} // namespace detail

// ---------------------------------------------------------------------------
// Littlewood bijection

inline SuiteReport bijection_suite(int max_size = 20, std::vector<int> ts = detail::range_list(1, 5))
{
    return run_suite("bijection", [&](Checker& ck) {
        ck.param("max_size", std::to_string(max_size));
        ck.param("t", detail::join_ints(ts));
        for (int t : ts) {
            for (int n = 0; n <= max_size; ++n)
                for (const auto& lambda : enumerate_partitions(n)) {
                    auto in = [&] { return "lambda=" + to_string(lambda) + " t=" + std::to_string(t); };
                    const auto dec = decompose(lambda, t);
                    ck.equal("recompose(decompose(lambda)) = lambda", recompose(dec), lambda, in);
                    ck.holds("core is a t-core", is_t_core(dec.core, t), in);
                    ck.equal("|lambda| = |core| + t * sum |quotient|", lambda.size(), dec.core.size() + t * dec.weight(), in);
                    std::vector<int> lhs;
                    for (int h : divisible_hooks(lambda, t)) lhs.push_back(h / t);
                    std::vector<int> rhs;
                    for (const auto& q : dec.quotients)
                        for (int h : hooks(q)) rhs.push_back(h);
                    ck.equal("{h/t : t | h} = union of quotient hooks", detail::sorted(lhs), detail::sorted(rhs), in);
                }
            for (const auto& core : detail::cores_up_to(t, max_size))
                for (int w = 0; core.size() + t * w <= max_size; ++w)
                    for_each_multipartition(t, w, [&](const std::vector<Partition>& q) {
                        const auto lambda = recompose(core, q, t);
                        const auto dec = decompose(lambda, t);
                        auto in = [&] {
                            return "core=" + to_string(core) + " quotients=" + detail::show(q) + " t=" + std::to_string(t);
                        };
                        ck.holds("decompose(recompose(core, quotients)) = (core, quotients)",
                                 dec.core == core && dec.quotients == q, in);
                    });
        }
    });
}

// ---------------------------------------------------------------------------
// Worked examples

inline SuiteReport running_examples_suite()
{
    return run_suite("running-examples", [](Checker& ck) {
        auto none = [] { return std::string(); };
        const Partition a{18, 7, 6};
        const auto dec = decompose(a, 3);
        auto in_a = [] { return std::string("lambda=18,7,6 t=3"); };
        ck.equal("3-core of (18,7,6)", dec.core, Partition{3, 1}, in_a);
        ck.equal("3-quotients of (18,7,6)", dec.quotients, std::vector<Partition>{Partition{2}, Partition{}, Partition{5, 2}}, in_a);
        ck.equal("recompose((3,1); (2),-,(5,2))", recompose(Partition{3, 1}, {Partition{2}, Partition{}, Partition{5, 2}}, 3), a, none);
        ck.equal("01-sequence of (18,7,6)", encode(a).render(), std::string("⋯00111|11101011111111111011⋯"), in_a);

        const Partition b{6, 3, 2, 2};
        std::vector<int> row_major;
        for (const auto& c : cell_stats(b)) row_major.push_back(c.hook);
        ck.equal("hooks of (6,3,2,2), row-major", row_major, std::vector<int>{9, 8, 5, 3, 2, 1, 5, 4, 1, 3, 2, 2, 1}, none);
        ck.holds("(6,3,2,2) is a 7-core", is_t_core(b, 7), none);
        const auto cd = corners(b);
        ck.equal("inner corners of (6,3,2,2)", cd.x, std::vector<int>{-4, 0, 2, 6}, none);
        ck.equal("outer corners of (6,3,2,2)", cd.y, std::vector<int>{-2, 1, 5}, none);
        ck.equal("q_1(6,3,2,2)", q_k(b, 1), Rational(0), none);
        ck.equal("q_2(6,3,2,2)", q_k(b, 2), Rational(26), none);

        const Partition c{5, 3, 1, 1};
        const auto off = core_offsets(c, 3);
        auto in_c = [] { return std::string("mu=5,3,1,1 t=3"); };
        ck.equal("b_i of (5,3,1,1)", off.b, std::vector<int>{0, 7, -4}, in_c);
        ck.equal("d_i of (5,3,1,1)", off.d, std::vector<int>{0, 2, -2}, in_c);
        ck.equal("sum d_i", std::accumulate(off.d.begin(), off.d.end(), 0), 0, in_c);
        ck.equal("01-sequence of (5,3,1,1)", encode(c).render(), std::string("⋯001001|1011011⋯"), in_c);
    });
}

// ---------------------------------------------------------------------------
// Hook length formula

inline SuiteReport hook_formula_suite(int max_size = 12, int square_sum_max = 8)
{
    return run_suite("hook-formula", [&](Checker& ck) {
        ck.param("max_size", std::to_string(max_size));
        ck.param("square_sum_max", std::to_string(square_sum_max));
        for (int n = 0; n <= max_size; ++n)
            for (const auto& lambda : enumerate_partitions(n))
                ck.equal("|lambda|!/H_lambda = #SYT", f_lambda(lambda), syt_count_oracle(lambda),
                         [&] { return "lambda=" + to_string(lambda); });
        for (int n = 0; n <= square_sum_max; ++n) {
            BigInt s = 0;
            for (const auto& lambda : enumerate_partitions(n)) s += f_lambda(lambda) * f_lambda(lambda);
            ck.equal("sum f_lambda^2 = n!", s, factorial(n), [&] { return "n=" + std::to_string(n); });
        }
    });
}

// ---------------------------------------------------------------------------
// 01-sequences, corners and core offsets

inline SuiteReport structure_suite(std::uint64_t seed = 20240601)
{
    return run_suite("structure", [&](Checker& ck) {
        ck.param("seed", std::to_string(seed));
        std::mt19937_64 rng(seed);
        for (int n = 0; n <= 20; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                auto in = [&] { return "lambda=" + to_string(lambda); };
                const auto seq = encode(lambda);
                ck.holds("encode is balanced", seq.balanced(), in);
                ck.equal("decode(encode(lambda))", decode(seq), lambda, in);
                ck.equal("q_0 = 1", q_k(lambda, 0), Rational(1), in);
                ck.equal("q_1 = 0", q_k(lambda, 1), Rational(0), in);
                ck.equal("q_2 = 2|lambda|", q_k(lambda, 2), Rational(2 * lambda.size()), in);
                if (n > 15) continue;

                std::vector<int> pair_hooks;
                for (auto [i, j] : inversion_pairs(seq)) pair_hooks.push_back(j - i);
                ck.equal("inversion pairs give the hook multiset", detail::sorted(pair_hooks), detail::sorted(hooks(lambda)), in);

                std::vector<int> row_ends, column_bottoms, zeros, ones;
                const auto conj = lambda.conjugate();
                for (const auto& c : cell_stats(lambda)) {
                    if (c.col == lambda.row(c.row - 1)) row_ends.push_back(c.content);
                    if (c.row == conj[static_cast<std::size_t>(c.col - 1)]) column_bottoms.push_back(c.content);
                }
                for (int i = -lambda.length(); i <= lambda.first_row() - 1; ++i)
                    (seq.at(i) == 0 ? zeros : ones).push_back(seq.at(i) == 0 ? i : i + 1);
                ck.equal("z_i = 0: cell to the left has content i", detail::sorted(zeros), detail::sorted(row_ends), in);
                ck.equal("z_i = 1: cell above has content i + 1", detail::sorted(ones), detail::sorted(column_bottoms), in);

                std::vector<int> addable, removable;
                for (int r = 0; r <= lambda.length(); ++r) {
                    if (r == 0 || lambda.row(r - 1) > lambda.row(r)) addable.push_back(lambda.row(r) - r);
                    if (r < lambda.length() && lambda.row(r) > lambda.row(r + 1)) removable.push_back(lambda.row(r) - 1 - r);
                }
                const auto cd = corners(lambda);
                ck.equal("inner corners are the addable cells", cd.x, detail::sorted(addable), in);
                ck.equal("outer corners are the removable cells", cd.y, detail::sorted(removable), in);
                bool interleaved = cd.x.size() == cd.y.size() + 1;
                for (std::size_t k = 0; interleaved && k < cd.y.size(); ++k)
                    interleaved = cd.x[k] < cd.y[k] && cd.y[k] < cd.x[k + 1];
                ck.holds("x_0 < y_1 < x_1 < ... < x_m", interleaved, in);
            }
        for (int n = 0; n <= 16; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                auto in = [&] { return "lambda=" + to_string(lambda); };
                ck.equal("sum (H/H+) x_i = 0", weighted_corner_sum(lambda, 1), Rational(0), in);
                ck.equal("sum (H/H+) x_i^2 = |lambda|", weighted_corner_sum(lambda, 2), Rational(lambda.size()), in);
            }

        for (int t = 2; t <= 5; ++t)
            for (const auto& mu : detail::cores_up_to(t, 15))
                for (const auto& id : bk_identities(mu, t))
                    ck.equal(id.name, id.lhs, id.rhs, [&] { return "mu=" + to_string(mu) + " t=" + std::to_string(t); });

        for (int trial = 0; trial < 200; ++trial) {
            const int t = std::uniform_int_distribution<int>(2, 5)(rng);
            const auto lambda = detail::random_partition(rng, 20);
            Partition p = lambda;
            for (auto down = t_hook_removals(p, t); !down.empty(); down = t_hook_removals(p, t))
                p = down[std::uniform_int_distribution<std::size_t>(0, down.size() - 1)(rng)];
            ck.equal("random removal order reaches the t-core", p, t_core(lambda, t),
                     [&] { return "lambda=" + to_string(lambda) + " t=" + std::to_string(t); });
        }

        std::map<int, std::vector<Partition>> cores;
        for (int t = 2; t <= 5; ++t) cores[t] = detail::cores_up_to(t, 10);
        for (int trial = 0; trial < 200; ++trial) {
            const int t = std::uniform_int_distribution<int>(2, 5)(rng);
            const auto inst = detail::random_instance(rng, t, cores[t], 5);
            int n = 0;
            for (const auto& q : inst.quotients) n += q.size();
            for (int k = 1; k < t; ++k) {
                const int lhs = residue_hook_count(inst.lambda, t, k) + residue_hook_count(inst.lambda, t, t - k) -
                                residue_hook_count(inst.core, t, k) - residue_hook_count(inst.core, t, t - k);
                ck.equal("|lambda(k)| + |lambda(t-k)| - |mu(k)| - |mu(t-k)| = 2n", lhs, 2 * n, [&] {
                    return "lambda=" + to_string(inst.lambda) + " t=" + std::to_string(t) + " k=" + std::to_string(k);
                });
            }
        }
    });
}

// ---------------------------------------------------------------------------
// Difference operators, hook walks and normalizations

namespace detail {

inline std::vector<Partition> normalization_cores(int t)
{
    switch (t) {
    case 1: return {Partition{}};
    case 2: return {Partition{}, Partition{1}, Partition{2, 1}};
    case 3: return {Partition{}, Partition{3, 1}, Partition{5, 3, 1, 1}};
    default: return {Partition{}, Partition{1}, Partition{2}};
    }
}

inline std::vector<Partition> transform_bases(int t)
{
    switch (t) {
    case 2: return {Partition{}, Partition{1}};
    case 3: return {Partition{}, Partition{5, 3, 1, 1}};
    default: return {Partition{}};
    }
}

inline std::vector<PartitionStatistic> transform_statistics(int t)
{
    std::vector<PartitionStatistic> out;
    out.push_back({t, true, {}, std::nullopt});
    out.push_back({t, false, {}, std::nullopt});
    out.push_back({t, true, {StatSpec{StatKind::hook, t, 0, 2, false}}, std::nullopt});
    out.push_back({t, true, {StatSpec{StatKind::content, t, t > 1 ? 1 : 0, 2, false}}, std::nullopt});
    out.push_back({t, true, {StatSpec{StatKind::hook, t, t > 1 ? 1 : 0, 2, true}, StatSpec{StatKind::content, t, 0, 1, false}},
                   std::nullopt});
    out.push_back({t, false, {StatSpec{StatKind::content, 1, 0, 3, false}}, std::nullopt});
    std::vector<Partition> nu(static_cast<std::size_t>(t));
    nu[0] = Partition{2};
    out.push_back({t, true, {}, nu});
    return out;
}

} // namespace detail

struct OperatorSuiteBounds {
    int dg_max_size = 14;
    std::vector<int> dg_ts = detail::range_list(1, 4);
    std::vector<int> layer_ts = detail::range_list(1, 3);
    int layer_n = 4;
    int eq11_n = 5;
    unsigned workers = 1;
};

inline SuiteReport operators_suite(const OperatorSuiteBounds& bounds = {})
{
    return run_suite("operators", [&](Checker& ck) {
        ck.param("dg_max_size", std::to_string(bounds.dg_max_size));
        ck.param("dg_t", detail::join_ints(bounds.dg_ts));
        ck.param("layer_t", detail::join_ints(bounds.layer_ts));
        ck.param("layer_n", std::to_string(bounds.layer_n));
        ck.param("eq11_n", std::to_string(bounds.eq11_n));
        const auto G = [](int t) { return [t](const Partition& p) { return G_lambda(p, t); }; };

        for (int t : bounds.dg_ts)
            for (int n = 0; n <= bounds.dg_max_size; ++n)
                for (const auto& lambda : enumerate_partitions(n)) {
                    auto in = [&] { return "lambda=" + to_string(lambda) + " t=" + std::to_string(t); };
                    ck.equal("D_t G = 0", apply_Dt(G(t), lambda, t), Rational(0), in);
                    const auto dec = decompose(lambda, t);
                    BigInt h = 1;
                    for (int v : divisible_hooks(lambda, t)) h *= v;
                    ck.equal("F_lambda * prod_{t | h} h = n! t^n", F_skew(lambda, dec.core, t) * h,
                             factorial(dec.weight()) * ipow(t, static_cast<unsigned>(dec.weight())), in);
                    if (is_t_core(lambda, t)) ck.equal("G of a t-core is 1", G_lambda(lambda, t), Rational(1), in);
                    if (t == 1) ck.equal("G at t = 1 is 1/H", G_lambda(lambda, 1), Rational(BigInt(1), hook_product(lambda)), in);
                }

        for (int t : bounds.layer_ts) {
            for (const auto& mu : detail::normalization_cores(t)) {
                if (!is_t_core(mu, t)) continue;
                for (int n = 0; n <= bounds.layer_n; ++n) {
                    const auto points = layer_above(mu, t, n);
                    auto in = [&] { return "mu=" + to_string(mu) + " t=" + std::to_string(t) + " n=" + std::to_string(n); };
                    ck.equal("sum F G = 1 over a layer", layer_sum(G(t), points, bounds.workers), Rational(1), in);
                    for (const auto& p : points)
                        ck.equal("F product formula = removal recursion", p.walks, F_skew_by_removal(p.lambda, mu, t),
                                 [&] { return in() + " lambda=" + to_string(p.lambda); });
                }
            }
            for (const auto& mu : {Partition{1}, Partition{2}, Partition{2, 2}}) {
                if (is_t_core(mu, t) || mu.size() < t) continue;
                for (int n = 0; n <= std::min(bounds.layer_n, 3); ++n)
                    for (const auto& p : layer_above(mu, t, n))
                        ck.equal("F product formula = removal recursion", p.walks, F_skew_by_removal(p.lambda, mu, t), [&] {
                            return "mu=" + to_string(mu) + " t=" + std::to_string(t) + " lambda=" + to_string(p.lambda);
                        });
            }
        }

        for (int t : bounds.layer_ts)
            for (int n = 0; n <= bounds.eq11_n; ++n) {
                Rational s = 0;
                for_each_multipartition(t, n, [&](const std::vector<Partition>& q) {
                    std::vector<std::int64_t> sizes;
                    Rational term = 1;
                    for (const auto& p : q) {
                        sizes.push_back(p.size());
                        term *= Rational(f_lambda(p) * f_lambda(p), factorial(p.size()));
                    }
                    s += Rational(multinomial(sizes)) * term;
                });
                ck.equal("sum multinomial prod f^2/|lambda^i|! = t^n", s, Rational(ipow(t, static_cast<unsigned>(n))),
                         [&] { return "t=" + std::to_string(t) + " n=" + std::to_string(n); });
            }

        for (int t : bounds.layer_ts)
            for (const auto& mu : detail::transform_bases(t))
                for (const auto& g : detail::transform_statistics(t)) {
                    auto in = [&] { return "g=" + g.describe() + " mu=" + to_string(mu) + " t=" + std::to_string(t); };
                    DtPowers<PartitionStatistic> powers(g, t);
                    std::vector<Rational> P, D;
                    std::vector<std::vector<LayerPoint>> layers;
                    for (int n = 0; n <= bounds.layer_n; ++n) {
                        layers.push_back(layer_above(mu, t, n));
                        P.push_back(layer_sum(g, layers.back(), bounds.workers));
                        D.push_back(powers(mu, n));
                    }
                    for (int n = 0; n <= bounds.layer_n; ++n) {
                        Rational forward = 0;
                        Rational inverse = 0;
                        for (int k = 0; k <= n; ++k) {
                            forward += Rational(binomial(n, k)) * D[static_cast<std::size_t>(k)];
                            const Rational term = Rational(binomial(n, k)) * P[static_cast<std::size_t>(k)];
                            inverse += (n + k) % 2 == 0 ? term : Rational(-term);
                        }
                        auto at = [&] { return in() + " n=" + std::to_string(n); };
                        ck.equal("P_g(n) = sum_k C(n,k) D^k g(mu)", P[static_cast<std::size_t>(n)], forward, at);
                        ck.equal("D^n g(mu) = sum_k (-1)^(n+k) C(n,k) P_g(k)", D[static_cast<std::size_t>(n)], inverse, at);
                        if (n < bounds.layer_n) {
                            const auto dg = [&](const Partition& p) { return apply_Dt(g, p, t); };
                            ck.equal("P_g(n+1) - P_g(n) = P_{D g}(n)",
                                     P[static_cast<std::size_t>(n) + 1] - P[static_cast<std::size_t>(n)],
                                     layer_sum(dg, layers[static_cast<std::size_t>(n)], bounds.workers), at);
                        }
                    }
                }
    });
}

// ---------------------------------------------------------------------------
// Per-partition square identities

inline SuiteReport per_partition_suite(int max_size = 18, std::vector<int> ts = {2, 3, 4}, int layer_n = 3)
{
    return run_suite("per-partition", [&](Checker& ck) {
        ck.param("max_size", std::to_string(max_size));
        ck.param("t", detail::join_ints(ts));
        ck.param("layer_n", std::to_string(layer_n));

        for (int t : ts)
            for (int w = 0; t * w <= max_size; ++w)
                for (const auto& lambda : enumerate_layer(Partition{}, t, w)) {
                    const auto q = t_quotients(lambda, t);
                    for (int k = 0; k < t; ++k) {
                        const BigInt lhs = stat_eval(lambda, {StatKind::hook, t, k, 2, true}) -
                                           stat_eval(lambda, {StatKind::content, t, k, 2, true});
                        BigInt s = 0;
                        for (int i = 0; i + k <= t - 1; ++i) s += q[static_cast<std::size_t>(i)].size() * q[static_cast<std::size_t>(i + k)].size();
                        for (int i = 0; i <= k - 1; ++i) s += q[static_cast<std::size_t>(i)].size() * q[static_cast<std::size_t>(i + t - k)].size();
                        ck.equal("empty core: paired h^2 - c^2 = 2t^2 sum n_i n_j", lhs, BigInt(2 * t * t * s), [&] {
                            return "lambda=" + to_string(lambda) + " t=" + std::to_string(t) + " k=" + std::to_string(k);
                        });
                    }
                }

        for (int n = 0; n <= max_size; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                BigInt s = 0;
                for (const auto& c : cell_stats(lambda)) s += c.hook * c.hook - c.content * c.content;
                ck.equal("sum h^2 - sum c^2 = |lambda|^2", s, BigInt(n) * n, [&] { return "lambda=" + to_string(lambda); });
            }

        for (int t : ts)
            for (const auto& mu : {Partition{1}, Partition{2}, Partition{5, 3, 1, 1}}) {
                if (!is_t_core(mu, t)) continue;
                const auto off = core_offsets(mu, t);
                const StatSpec c0{StatKind::content, t, 0, 2, false};
                const StatSpec h0{StatKind::hook, t, 0, 2, false};
                for (int w = 0; w <= layer_n; ++w)
                    for (const auto& lambda : enumerate_layer(mu, t, w)) {
                        const auto q = t_quotients(lambda, t);
                        auto n_of = [&](int i) { return Rational(q[static_cast<std::size_t>(i)].size()); };
                        for (int k = 1; k < t; ++k) {
                            const StatSpec sh{StatKind::hook, t, k, 2, true};
                            const StatSpec sc{StatKind::content, t, k, 2, true};
                            const Rational lhs = Rational(stat_eval(lambda, sh) - stat_eval(lambda, sc));
                            Rational rhs = Rational(stat_eval(mu, sh) - stat_eval(mu, sc));
                            for (auto [i, j] : b_pairs(t, k)) {
                                const Rational bi = off.b[static_cast<std::size_t>(i)], bj = off.b[static_cast<std::size_t>(j)];
                                const Rational di = off.d[static_cast<std::size_t>(i)], dj = off.d[static_cast<std::size_t>(j)];
                                rhs += 2 * t * t * n_of(i) * n_of(j) + t * (bj + j - 2 * bi) * dj * n_of(i) +
                                       t * (bi + i - 2 * bj) * di * n_of(j) -
                                       Rational(t * t, 3) * (dj * q_k(q[static_cast<std::size_t>(i)], 3) +
                                                             di * q_k(q[static_cast<std::size_t>(j)], 3));
                            }
                            ck.equal("core mu: paired h^2 - c^2 via B_k", lhs, rhs, [&] {
                                return "mu=" + to_string(mu) + " lambda=" + to_string(lambda) + " t=" + std::to_string(t) +
                                       " k=" + std::to_string(k);
                            });
                        }
                        const Rational lhs = Rational(stat_eval(lambda, h0) - stat_eval(lambda, c0));
                        Rational rhs = -Rational(stat_eval(mu, c0));
                        for (int i = 0; i < t; ++i) {
                            const Rational di = off.d[static_cast<std::size_t>(i)];
                            rhs += t * t * (n_of(i) * n_of(i) - di * di * n_of(i) - di * q_k(q[static_cast<std::size_t>(i)], 3) / 3);
                        }
                        ck.equal("core mu: h^2 - c^2 over multiples of t", lhs, rhs, [&] {
                            return "mu=" + to_string(mu) + " lambda=" + to_string(lambda) + " t=" + std::to_string(t);
                        });
                    }
            }
    });
}

// ---------------------------------------------------------------------------
// Single-cell increments

inline SuiteReport increments_suite(int samples = 300, std::vector<int> ts = detail::range_list(1, 4),
                                    std::uint64_t seed = 20240601)
{
    return run_suite("increments", [&](Checker& ck) {
        ck.param("samples", std::to_string(samples));
        ck.param("t", detail::join_ints(ts));
        ck.param("seed", std::to_string(seed));
        std::mt19937_64 rng(seed);
        std::map<int, std::vector<Partition>> cores;
        for (int t : ts) cores[t] = detail::cores_up_to(t, 8);
        for (int trial = 0; trial < samples; ++trial) {
            const int t = ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
            const auto inst = detail::random_instance(rng, t, cores[t], 4);
            const auto dec = decompose(inst.lambda, t);
            const int i = std::uniform_int_distribution<int>(0, t - 1)(rng);
            const auto& qi = dec.quotients[static_cast<std::size_t>(i)];
            const auto xs = corners(qi).x;
            const int c = xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
            const auto grown = grow_quotient(dec, i, c);
            const auto plus = recompose(grown);
            auto in = [&] {
                return "lambda=" + to_string(inst.lambda) + " t=" + std::to_string(t) + " i=" + std::to_string(i) +
                       " c=" + std::to_string(c);
            };

            const auto gained = detail::multiset_minus(contents(plus), contents(inst.lambda));
            ck.holds("C(lambda) is contained in C(lambda+)", gained.has_value(), in);
            if (gained) ck.equal("C(lambda+) - C(lambda) = {ct + b_i - j}", *gained, detail::sorted(content_delta(dec, i, c)), in);

            std::vector<int> predicted;
            for (int j = 0; j < t; ++j)
                for (const auto& cell : cell_stats(grown.quotients[static_cast<std::size_t>(j)]))
                    for (int v = 0; v < t; ++v) predicted.push_back(t * cell.content + dec.offsets.b[static_cast<std::size_t>(j)] - v);
            const auto core_gap = detail::multiset_minus(contents(plus), contents(dec.core));
            ck.holds("C(mu) is contained in C(lambda+)", core_gap.has_value(), in);
            if (core_gap) ck.equal("C(lambda+) - C(mu) = union {tc + b_i - j}", *core_gap, detail::sorted(predicted), in);

            for (int r = 0; r <= 2; ++r) {
                for (int k = 0; k < t; ++k) {
                    const StatSpec s{StatKind::hook, t, k, 2 * r, k != 0};
                    ck.equal("hook_delta_power = direct change", hook_delta_power(dec, i, c, k, r),
                             stat_eval(plus, s) - stat_eval(inst.lambda, s),
                             [&] { return in() + " k=" + std::to_string(k) + " r=" + std::to_string(r); });
                }
                const StatSpec all{StatKind::hook, 1, 0, 2 * r, false};
                ck.equal("hook_delta_power_total = direct change", hook_delta_power_total(dec, i, c, r),
                         stat_eval(plus, all) - stat_eval(inst.lambda, all), [&] { return in() + " r=" + std::to_string(r); });
            }

            for (int k = 0; k <= 4; ++k)
                ck.equal("q_increment = direct change of q_k", Rational(q_increment(qi, k, c)),
                         q_k(add_cell(qi, c), k) - q_k(qi, k), [&] { return in() + " k=" + std::to_string(k); });

            for (int j = 0; j < t; ++j)
                for (int pw = 0; pw <= 4; ++pw) {
                    std::vector<StatSpec> specs{{StatKind::content, t, j, pw, false}, {StatKind::content, t, j, pw, true}};
                    if (pw % 2 == 0) specs.push_back({StatKind::hook, t, j, pw, true});
                    if (pw % 2 == 0 && j == 0) specs.push_back({StatKind::hook, t, 0, pw, false});
                    for (const auto& s : specs)
                        ck.equal("increment polynomial at c = direct change", evaluate(increment_polynomial(dec, i, s), c),
                                 Rational(stat_eval(plus, s) - stat_eval(inst.lambda, s)),
                                 [&] { return in() + " stat=" + to_string(s); });
                }
        }
    });
}

// ---------------------------------------------------------------------------
// Closed-form averages

namespace detail {

inline std::vector<Partition> average_cores(int t)
{
    switch (t) {
    case 1: return {Partition{}};
    case 2: return {Partition{}, Partition{1}};
    case 3: return {Partition{}, Partition{5, 3, 1, 1}, Partition{3, 1}};
    default: return {Partition{}, Partition{1}, Partition{2}};
    }
}

} // namespace detail

inline SuiteReport averages_suite(std::vector<int> ts = {2, 3}, std::vector<int> ns = detail::range_list(0, 4),
                                  unsigned workers = 1)
{
    return run_suite("averages", [&](Checker& ck) {
        ck.param("t", detail::join_ints(ts));
        ck.param("n", detail::join_ints(ns));
        for (int t : ts)
            for (const auto& mu : detail::average_cores(t)) {
                const auto off = core_offsets(mu, t);
                for (int n : ns) {
                    const auto points = layer_above(mu, t, n);
                    auto avg = [&](const StatSpec& s) {
                        return layer_sum(PartitionStatistic{t, true, {s}, std::nullopt}, points, workers);
                    };
                    auto in = [&] { return "mu=" + to_string(mu) + " t=" + std::to_string(t) + " n=" + std::to_string(n); };
                    const Rational N = n;
                    const Rational C2 = choose2(n);
                    const Rational T = t;
                    const Rational M = mu.size();

                    for (int k = 1; k < t; ++k) {
                        const StatSpec s{StatKind::hook, t, k, 2, true};
                        const Rational expect = 6 * T * C2 +
                                                (2 * k * (t - k) + 4 * T * residue_hook_count(mu, t, k) +
                                                 4 * T * residue_hook_count(mu, t, t - k)) * N +
                                                Rational(stat_eval(mu, s));
                        ck.equal("paired h^2 average, residue k", avg(s), expect, [&] { return in() + " k=" + std::to_string(k); });
                    }
                    ck.equal("h^2 average over multiples of t", avg({StatKind::hook, t, 0, 2, false}), N * T * T + 3 * T * C2, in);
                    ck.equal("h^2 average", avg({StatKind::hook, 1, 0, 2, false}),
                             3 * T * T * N * N / 2 + N * T * (T * T - 3 * T - 1 + 24 * M) / 6 +
                                 Rational(stat_eval(mu, {StatKind::hook, 1, 0, 2, false})),
                             in);
                    for (int k = 0; k < t; ++k) {
                        const StatSpec s{StatKind::content, t, k, 2, false};
                        Rational spread = 0;
                        for (int i = 0; i < t; ++i) {
                            const auto ip = mod_floor(i - k, t);
                            const Rational gap = off.b[static_cast<std::size_t>(i)] - ip;
                            spread += gap * gap;
                        }
                        ck.equal("c^2 average, residue k", avg(s), T * C2 + spread * N / T + Rational(stat_eval(mu, s)),
                                 [&] { return in() + " k=" + std::to_string(k); });
                        if (mu.empty())
                            ck.equal("c^2 average, residue k, empty core", avg(s), T * C2 + k * (t - k) * N,
                                     [&] { return in() + " k=" + std::to_string(k); });
                    }
                    const StatSpec call{StatKind::content, 1, 0, 2, false};
                    ck.equal("c^2 average", avg(call),
                             T * T * C2 + (T * T * T - T) * N / 6 + 2 * T * N * M + Rational(stat_eval(mu, call)), in);
                }
            }
    });
}

// ---------------------------------------------------------------------------
// Polynomiality certificates

namespace detail {

inline std::vector<std::vector<StatSpec>> mixed_statistics(int t)
{
    auto h = [t](int j, int pw) { return StatSpec{StatKind::hook, t, j, pw, true}; };
    auto c = [t](int j, int pw) { return StatSpec{StatKind::content, t, j, pw, false}; };
    return {
        {h(1, 2)},
        {h(0, 4)},
        {c(1, 3)},
        {h(1, 2), c(0, 2)},
        {h(0, 2), c(1, 1)},
        {c(0, 1), c(1, 1), c(0, 2)},
        {h(1, 4), c(1, 2)},
        {h(1, 2), h(0, 2), c(0, 1)},
        {h(0, 6)},
        {c(1, 5), c(0, 1)},
    };
}

/// Least r with r >= w/2 + 1.
constexpr int q_vanishing_order(int weight) { return (weight + 1) / 2 + 1; }

} // namespace detail

inline SuiteReport polynomiality_suite(std::vector<int> ts = {2, 3}, unsigned workers = 1)
{
    return run_suite("polynomiality", [&](Checker& ck) {
        ck.param("t", detail::join_ints(ts));
        const Partition empty;
        for (int t : ts)
            for (const auto& factors : detail::mixed_statistics(t)) {
                const PartitionStatistic g{t, true, factors, std::nullopt};
                int d = static_cast<int>(factors.size());
                for (const auto& f : factors) d += f.power;
                const auto tab = certify_polynomiality(g, empty, t, d, 3, true, workers);
                auto in = [&] { return "g=" + g.describe() + " t=" + std::to_string(t) + " d=" + std::to_string(d); };
                ck.holds("difference table certified on [0, d+3]", tab.certified, in);
                ck.holds("telescoping holds on the window", tab.telescoping_ok, in);
                ck.note(g.describe() + " t=" + std::to_string(t) + ": " + tab.verdict() + " with d=" + std::to_string(d) +
                        ", vanishing order " + (tab.vanishing_order ? std::to_string(*tab.vanishing_order) : "none"));
            }

        for (int t : ts) {
            std::vector<Partition> starts;
            for (int n = 0; n <= (t == 2 ? 4 : 3); ++n)
                for (const auto& p : enumerate_partitions(n)) starts.push_back(p);
            for (int w = 1; w <= 4; ++w)
                for_each_multipartition(t, w, [&](const std::vector<Partition>& nu) {
                    const PartitionStatistic g{t, true, {}, nu};
                    const int r = detail::q_vanishing_order(w);
                    DtPowers<PartitionStatistic> powers(g, t);
                    for (const auto& lambda : starts)
                        ck.equal("D^r (G q) = 0 for r >= |nu|/2 + 1", powers(lambda, r), Rational(0), [&] {
                            return "nu=" + detail::show(nu) + " lambda=" + to_string(lambda) + " t=" + std::to_string(t) +
                                   " r=" + std::to_string(r);
                        });
                    const auto tab = certify_polynomiality(g, empty, t, r - 1, 3, true, workers);
                    ck.holds("q-statistic average has degree below r", tab.certified,
                             [&] { return "g=" + g.describe() + " t=" + std::to_string(t); });
                });
        }

        const std::vector<StatSpec> classical{
            {StatKind::content, 1, 0, 1, false},
            {StatKind::content, 1, 0, 2, false},
            {StatKind::hook, 1, 0, 2, false},
            {StatKind::hook, 1, 0, 4, false},
        };
        for (const auto& s : classical) {
            const PartitionStatistic g{1, true, {s}, std::nullopt};
            const int d = s.power + 1;
            const auto tab = certify_polynomiality(g, empty, 1, d, 8 - d, true, workers);
            auto in = [&] { return "g=" + g.describe() + " t=1 d=" + std::to_string(d); };
            ck.holds("t = 1 average certified on [0, 8]", tab.certified, in);
            ck.note(g.describe() + " t=1: " + tab.verdict() + " with d=" + std::to_string(d) + ", vanishing order " +
                    (tab.vanishing_order ? std::to_string(*tab.vanishing_order) : "none"));
            if (s.kind == StatKind::content && s.power == 2)
                for (int n = 0; n <= 8; ++n)
                    ck.equal("t = 1: average of sum c^2 = C(n,2)", tab.values[static_cast<std::size_t>(n)], Rational(choose2(n)),
                             [&] { return "n=" + std::to_string(n); });
            if (s.kind == StatKind::hook && s.power == 2)
                for (int n = 0; n <= 8; ++n)
                    ck.equal("t = 1: average of sum h^2 = (3n^2 - n)/2", tab.values[static_cast<std::size_t>(n)],
                             Rational(3 * n * n - n, 2), [&] { return "n=" + std::to_string(n); });
        }
    });
}

// ---------------------------------------------------------------------------
// Named suites

struct SuiteBounds {
    std::optional<int> max_size;
    std::vector<int> ts;
    std::vector<int> ns;
    unsigned workers = 1;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"bijection", "fundamental", "per-partition",
                                                "averages",  "operators",   "polynomiality"};
    return names;
}

/// Throws std::invalid_argument for an unknown name.
inline SuiteReport run_named_suite(const std::string& name, const SuiteBounds& b = {})
{
    auto ts_or = [&](std::vector<int> fallback) { return b.ts.empty() ? fallback : b.ts; };
    auto max_n = [&](int fallback) { return b.ns.empty() ? fallback : *std::max_element(b.ns.begin(), b.ns.end()); };
    SuiteReport out;
    if (name == "bijection") {
        out = bijection_suite(b.max_size.value_or(20), ts_or(detail::range_list(1, 5)));
    } else if (name == "fundamental") {
        out = merge_reports(name, {running_examples_suite(), hook_formula_suite(b.max_size.value_or(12), max_n(8)),
                                   structure_suite()});
    } else if (name == "per-partition") {
        out = merge_reports(name, {per_partition_suite(b.max_size.value_or(18), ts_or({2, 3, 4}), max_n(3)),
                                   increments_suite(300, ts_or(detail::range_list(1, 4)))});
    } else if (name == "averages") {
        out = averages_suite(ts_or({2, 3}), b.ns.empty() ? detail::range_list(0, 4) : b.ns, b.workers);
    } else if (name == "operators") {
        OperatorSuiteBounds ob;
        ob.dg_max_size = b.max_size.value_or(ob.dg_max_size);
        ob.dg_ts = ts_or(ob.dg_ts);
        ob.layer_ts = ts_or(ob.layer_ts);
        ob.layer_n = max_n(ob.layer_n);
        ob.eq11_n = b.ns.empty() ? ob.eq11_n : ob.layer_n;
        ob.workers = b.workers;
        out = operators_suite(ob);
    } else if (name == "polynomiality") {
        out = polynomiality_suite(ts_or({2, 3}), b.workers);
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    out.name = name;
    return out;
}

} // namespace hookwalk
