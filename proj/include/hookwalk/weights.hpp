#pragma once

// Hook-walk counts F_{lambda/mu} along t-hook additions, the weights
// G_lambda = 1 / prod_{h in H_t(lambda)} h, and the layers
// { lambda >=_t mu : |lambda/mu| = n t } they are summed over.

#include "hookwalk/exact.hpp"
#include "hookwalk/littlewood.hpp"
#include "hookwalk/partition.hpp"
#include "hookwalk/tableaux.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hookwalk {

/// lambda >=_t mu: same t-core and every quotient of mu sits inside the
/// matching quotient of lambda.
inline bool t_dominates(const Partition& lambda, const Partition& mu, int t)
{
    if (lambda.size() < mu.size() || (lambda.size() - mu.size()) % t != 0) return false;
    if (t_core(lambda, t) != t_core(mu, t)) return false;
    const auto ql = t_quotients(lambda, t);
    const auto qm = t_quotients(mu, t);
    for (std::size_t i = 0; i < ql.size(); ++i)
        if (!ql[i].contains(qm[i])) return false;
    return true;
}

namespace detail {

inline SkewTableauCounter& thread_counter()
{
    thread_local SkewTableauCounter counter;
    return counter;
}

/// multinomial(|outer_i/inner_i|) * prod f_{outer_i/inner_i}
inline BigInt walk_count(const std::vector<Partition>& outer, const std::vector<Partition>& inner)
{
    std::vector<std::int64_t> sizes;
    BigInt prod = 1;
    auto& counter = thread_counter();
    for (std::size_t i = 0; i < outer.size(); ++i) {
        sizes.push_back(outer[i].size() - inner[i].size());
        prod *= counter.count(outer[i], inner[i]);
    }
    return multinomial(sizes) * prod;
}

} // namespace detail

/// Number of maximal chains of t-hook additions from mu up to lambda, by the
/// product over quotients of skew tableau counts times the multinomial that
/// interleaves them.
inline BigInt F_skew(const Partition& lambda, const Partition& mu, int t)
{
    if (!t_dominates(lambda, mu, t))
        throw std::invalid_argument(to_string(lambda) + " is not above " + to_string(mu) + " by " +
                                    std::to_string(t) + "-hook additions");
    return detail::walk_count(t_quotients(lambda, t), t_quotients(mu, t));
}

/// Same count by the defining recursion: F_{mu/mu} = 1 and F_{lambda/mu} is
/// the sum of F_{lambda^-/mu} over t-hook removals lambda^- still above mu.
inline BigInt F_skew_by_removal(const Partition& lambda, const Partition& mu, int t)
{
    if (!t_dominates(lambda, mu, t))
        throw std::invalid_argument(to_string(lambda) + " is not above " + to_string(mu) + " by " +
                                    std::to_string(t) + "-hook additions");
    std::unordered_map<Partition, BigInt> memo;
    std::function<BigInt(const Partition&)> rec = [&](const Partition& p) -> BigInt {
        if (p == mu) return 1;
        if (p.size() <= mu.size()) return 0;
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        BigInt total = 0;
        for (const auto& down : t_hook_removals(p, t))
            if (down.size() >= mu.size() && t_dominates(down, mu, t)) total += rec(down);
        memo.emplace(p, total);
        return total;
    };
    return rec(lambda);
}

/// 1 / prod of the hook lengths divisible by t.
inline Rational G_lambda(const Partition& lambda, int t)
{
    if (t < 1) throw std::invalid_argument("t must be a positive integer");
    BigInt prod = 1;
    for (int h : hooks(lambda))
        if (h % t == 0) prod *= h;
    return Rational(BigInt(1), prod);
}

/// One element of a layer: lambda, its quotients, and F_{lambda/mu}.
struct LayerPoint {
    Partition lambda;
    std::vector<Partition> quotients;
    BigInt walks;
};

/// Calls fn(tuple) for every t-tuple of partitions with total size n.
/// Order: compositions n_0 + ... + n_{t-1} = n in decreasing lexicographic
/// order, then the product of the per-slot enumerations in order.
template <class Fn>
void for_each_multipartition(int t, int n, Fn&& fn)
{
    if (t < 1) throw std::invalid_argument("t must be a positive integer");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= n; ++k) by_size.push_back(partitions_of(k));
    std::vector<Partition> tuple(static_cast<std::size_t>(t));
    std::function<void(int, int)> place = [&](int slot, int left) {
        if (slot == t - 1) {
            for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
                tuple[static_cast<std::size_t>(slot)] = p;
                fn(static_cast<const std::vector<Partition>&>(tuple));
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
                tuple[static_cast<std::size_t>(slot)] = p;
                place(slot + 1, left - k);
            }
    };
    place(0, n);
}

/// Every lambda >=_t mu with |lambda/mu| = n t, with F_{lambda/mu}. mu need
/// not be a t-core; the enumeration runs through quotient space.
inline std::vector<LayerPoint> layer_above(const Partition& mu, int t, int n)
{
    const auto dec = decompose(mu, t);
    std::vector<LayerPoint> out;
    // partitions of each size containing a given inner shape
    auto supersets = [&](const Partition& inner, int extra) {
        std::vector<Partition> v;
        for (const auto& p : enumerate_partitions(inner.size() + extra))
            if (p.contains(inner)) v.push_back(p);
        return v;
    };
    std::vector<Partition> tuple(static_cast<std::size_t>(t));
    std::function<void(int, int)> place = [&](int slot, int left) {
        const auto& inner = dec.quotients[static_cast<std::size_t>(slot)];
        if (slot == t - 1) {
            for (auto& p : supersets(inner, left)) {
                tuple[static_cast<std::size_t>(slot)] = p;
                out.push_back({recompose(dec.core, tuple, t), tuple, detail::walk_count(tuple, dec.quotients)});
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (auto& p : supersets(inner, k)) {
                tuple[static_cast<std::size_t>(slot)] = p;
                place(slot + 1, left - k);
            }
    };
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    place(0, n);
    return out;
}

/// Every lambda with t-core mu and |lambda/mu| = n t.
inline std::vector<Partition> enumerate_layer(const Partition& mu, int t, int n)
{
    detail::require_core(mu, t);
    std::vector<Partition> out;
    for_each_multipartition(t, n, [&](const std::vector<Partition>& q) { out.push_back(recompose(mu, q, t)); });
    return out;
}

} // namespace hookwalk
