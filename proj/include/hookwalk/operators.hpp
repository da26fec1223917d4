#pragma once

// The t-difference operator D_t g(lambda) = sum over t-hook covers of
// g(lambda+) - g(lambda), its powers, the layer sums
// P_g(n) = sum_{lambda >=_t mu, |lambda/mu| = nt} F_{lambda/mu} g(lambda),
// the binomial-transform pair linking the two, and forward-difference
// certificates of polynomiality in n.

#include "hookwalk/corners.hpp"
#include "hookwalk/exact.hpp"
#include "hookwalk/littlewood.hpp"
#include "hookwalk/partition.hpp"
#include "hookwalk/weights.hpp"

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace hookwalk {

template <class F>
concept PartitionFunction = std::invocable<const F&, const Partition&> &&
                            std::convertible_to<std::invoke_result_t<const F&, const Partition&>, Rational>;

/// All lambda+ >=_t lambda with |lambda+/lambda| = t.
inline std::vector<Partition> covers(const Partition& lambda, int t) { return t_hook_additions(lambda, t); }

/// A product statistic: optional G_lambda weight, residue power sums and an
/// optional tuple of q-statistics of the quotients, all at modulus t.
struct PartitionStatistic {
    int t = 1;
    bool weight_g = false;
    std::vector<StatSpec> factors;
    std::optional<std::vector<Partition>> q_exponents;

    Rational operator()(const Partition& lambda) const
    {
        Rational v = weight_g ? G_lambda(lambda, t) : Rational(1);
        for (const auto& f : factors) {
            if (v == 0) return v;
            v *= Rational(stat_eval(lambda, f));
        }
        if (q_exponents) v *= q_tuple(t_quotients(lambda, t), *q_exponents);
        return v;
    }

    std::string describe() const
    {
        std::string out = weight_g ? "G" : "1";
        for (const auto& f : factors) out += " * [" + to_string(f) + "]";
        if (q_exponents) {
            out += " * q(";
            for (std::size_t i = 0; i < q_exponents->size(); ++i) out += (i ? ";" : "") + to_string((*q_exponents)[i]);
            out += ")";
        }
        return out;
    }
};

template <PartitionFunction F>
Rational apply_Dt(const F& g, const Partition& lambda, int t)
{
    Rational s = 0;
    for (const auto& up : covers(lambda, t)) s += g(up);
    return s - g(lambda);
}

/// D_t^r g evaluated by the inductive definition D_t^r = D_t(D_t^{r-1}),
/// memoized per (lambda, r). Not thread-safe.
template <PartitionFunction F>
class DtPowers {
public:
    DtPowers(const F& g, int t) : g_(g), t_(t) {}

    Rational operator()(const Partition& lambda, int r)
    {
        if (r < 0) throw std::invalid_argument("operator power must be non-negative");
        if (memo_.size() <= static_cast<std::size_t>(r)) memo_.resize(static_cast<std::size_t>(r) + 1);
        auto& level = memo_[static_cast<std::size_t>(r)];
        if (auto it = level.find(lambda); it != level.end()) return it->second;
        Rational v;
        if (r == 0) {
            v = g_(lambda);
        } else {
            v = -(*this)(lambda, r - 1);
            for (const auto& up : covers(lambda, t_)) v += (*this)(up, r - 1);
        }
        memo_[static_cast<std::size_t>(r)].emplace(lambda, v);
        return v;
    }

private:
    F g_;
    int t_;
    std::vector<std::unordered_map<Partition, Rational>> memo_;
};

template <PartitionFunction F>
Rational apply_Dt_power_recursive(const F& g, const Partition& mu, int t, int r)
{
    DtPowers<F> powers(g, t);
    return powers(mu, r);
}

/// sum over the points of F_{lambda/mu} * g(lambda), split across workers.
template <PartitionFunction F>
Rational layer_sum(const F& g, const std::vector<LayerPoint>& points, unsigned workers = 1)
{
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
    if (workers <= 1) {
        Rational s = 0;
        for (const auto& p : points) s += Rational(p.walks) * g(p.lambda);
        return s;
    }
    std::vector<Rational> partial(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (points.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t from = w * chunk;
            const std::size_t to = std::min(points.size(), from + chunk);
            Rational s = 0;
            for (std::size_t k = from; k < to; ++k) s += Rational(points[k].walks) * g(points[k].lambda);
            partial[w] = s;
        });
    }
    for (auto& th : pool) th.join();
    Rational s = 0;
    for (const auto& v : partial) s += v;
    return s;
}

/// P_g(n) for an arbitrary base partition mu.
template <PartitionFunction F>
Rational layer_sum(const F& g, const Partition& mu, int t, int n, unsigned workers = 1)
{
    return layer_sum(g, layer_above(mu, t, n), workers);
}

/// P_g(n) = sum over lambda with t-core mu and |lambda/mu| = n t of F_{lambda/mu} g(lambda).
template <PartitionFunction F>
Rational plancherel_average(const F& g, const Partition& mu, int t, int n, unsigned workers = 1)
{
    detail::require_core(mu, t);
    return layer_sum(g, mu, t, n, workers);
}

/// sum_{k=0}^{r} (-1)^{r+k} C(r,k) P_g(k): D_t^r g(mu) through layer sums.
template <PartitionFunction F>
Rational apply_Dt_power_by_transform(const F& g, const Partition& mu, int t, int r, unsigned workers = 1)
{
    Rational s = 0;
    for (int k = 0; k <= r; ++k) {
        Rational term = Rational(binomial(r, k)) * layer_sum(g, mu, t, k, workers);
        s += (r + k) % 2 == 0 ? term : Rational(-term);
    }
    return s;
}

/// D_t^r g(mu), computed by the inductive definition and by the alternating
/// binomial transform of the layer sums; the two must agree.
template <PartitionFunction F>
Rational apply_Dt_power(const F& g, const Partition& mu, int t, int r, unsigned workers = 1)
{
    const Rational direct = apply_Dt_power_recursive(g, mu, t, r);
    const Rational via_layers = apply_Dt_power_by_transform(g, mu, t, r, workers);
    if (direct != via_layers)
        throw std::logic_error("D_t^" + std::to_string(r) + " at " + to_string(mu) + ": recursion gives " +
                               to_string(direct) + " but layer transform gives " + to_string(via_layers));
    return direct;
}

/// Values P(0..m), the forward-difference table, and whether every
/// difference of order degree+1 vanishes on the sampled window. A certified
/// table proves polynomial behaviour on the window only; globality comes
/// from the theorem that the statistic family satisfies.
struct DifferenceTable {
    std::vector<Rational> values;
    std::vector<std::vector<Rational>> diffs;  // diffs[k][j] = forward difference of order k at j
    int degree = 0;                            // claimed bound
    bool certified = false;
    std::optional<int> witness;                // first j with a nonzero order-(degree+1) difference
    std::optional<int> vanishing_order;        // least k whose whole row vanishes on the window
    bool telescoping_checked = false;
    bool telescoping_ok = true;
    std::optional<int> telescoping_witness;    // first n where P(n+1) - P(n) != P_{D g}(n)

    std::string verdict() const { return certified ? "certified" : "refuted"; }
    int window() const { return static_cast<int>(values.size()) - 1; }
};

inline DifferenceTable difference_table(std::vector<Rational> values, int degree)
{
    DifferenceTable tab;
    tab.degree = degree;
    tab.values = std::move(values);
    tab.diffs.push_back(tab.values);
    while (tab.diffs.back().size() > 1) {
        const auto& prev = tab.diffs.back();
        std::vector<Rational> next;
        for (std::size_t j = 0; j + 1 < prev.size(); ++j) next.push_back(prev[j + 1] - prev[j]);
        tab.diffs.push_back(std::move(next));
    }
    for (std::size_t k = 0; k < tab.diffs.size(); ++k) {
        const auto& row = tab.diffs[k];
        if (std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; })) {
            tab.vanishing_order = static_cast<int>(k);
            break;
        }
    }
    const auto order = static_cast<std::size_t>(degree + 1);
    tab.certified = order < tab.diffs.size();
    if (tab.certified) {
        const auto& row = tab.diffs[order];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                tab.certified = false;
                tab.witness = static_cast<int>(j);
                break;
            }
    }
    return tab;
}

/// P_g(0..degree+safety) over the layers above mu, certified when all
/// differences of order degree+1 vanish. With check_telescoping, every
/// consecutive difference is also compared against an independent
/// evaluation of P_{D_t g}(n); a mismatch refutes the certificate.
template <PartitionFunction F>
DifferenceTable certify_polynomiality(const F& g, const Partition& mu, int t, int degree, int safety = 3,
                                      bool check_telescoping = true, unsigned workers = 1)
{
    if (degree < 0 || safety < 1) throw std::invalid_argument("need degree >= 0 and safety >= 1");
    const int m = degree + safety;
    std::vector<Rational> values;
    std::vector<std::vector<LayerPoint>> layers;
    for (int n = 0; n <= m; ++n) {
        layers.push_back(layer_above(mu, t, n));
        values.push_back(layer_sum(g, layers.back(), workers));
    }
    auto tab = difference_table(std::move(values), degree);
    if (check_telescoping) {
        tab.telescoping_checked = true;
        const auto dg = [&](const Partition& lambda) { return apply_Dt(g, lambda, t); };
        for (int n = 0; n < m; ++n) {
            const Rational via_operator = layer_sum(dg, layers[static_cast<std::size_t>(n)], workers);
            if (tab.values[static_cast<std::size_t>(n) + 1] - tab.values[static_cast<std::size_t>(n)] != via_operator) {
                tab.telescoping_ok = false;
                tab.telescoping_witness = n;
                tab.certified = false;
                break;
            }
        }
    }
    return tab;
}

} // namespace hookwalk
