#pragma once

// Corner contents, the corner power sums q_k, residue-filtered power sums of
// hooks and contents, and the exact change of those sums when one cell is
// added to a quotient of the Littlewood decomposition.

#include "hookwalk/boundary.hpp"
#include "hookwalk/exact.hpp"
#include "hookwalk/littlewood.hpp"
#include "hookwalk/partition.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookwalk {

/// x: contents of the inner (addable) corners, ascending, m+1 of them.
/// y: contents of the outer (removable) corners, ascending, m of them.
struct CornerData {
    std::vector<int> x;
    std::vector<int> y;
    bool operator==(const CornerData&) const = default;
};

inline CornerData corners(const Partition& lambda)
{
    auto cc = corner_contents(encode(lambda));
    return {std::move(cc.inner), std::move(cc.outer)};
}

inline bool is_inner_corner(const Partition& lambda, int content)
{
    const auto x = corners(lambda).x;
    return std::find(x.begin(), x.end(), content) != x.end();
}

/// lambda with one cell added at the inner corner of the given content.
inline Partition add_cell(const Partition& lambda, int content)
{
    const auto seq = encode(lambda);
    if (seq.at(content - 1) != 0 || seq.at(content) != 1)
        throw std::invalid_argument("no inner corner of content " + std::to_string(content) + " in " +
                                    to_string(lambda));
    const int lo = std::min(seq.lo(), content - 1);
    const int hi = std::max(seq.hi(), content);
    auto z = seq.slice(lo, hi);
    std::swap(z[static_cast<std::size_t>(content - 1 - lo)], z[static_cast<std::size_t>(content - lo)]);
    return decode(BoundarySequence::from_window(lo, std::move(z)));
}

/// sum x_i^k - sum y_j^k, for any integer k (0^0 = 1). A zero content under a
/// negative exponent is a domain error.
inline Rational q_k(const Partition& lambda, int k)
{
    const auto cd = corners(lambda);
    auto power = [k](int v) -> Rational {
        if (k >= 0) return Rational(ipow(v, static_cast<unsigned>(k)));
        if (v == 0) throw std::domain_error("q_k with negative k at a zero content");
        return ratio(1, ipow(v, static_cast<unsigned>(-k)));
    };
    Rational s = 0;
    for (int v : cd.x) s += power(v);
    for (int v : cd.y) s -= power(v);
    return s;
}

/// prod over parts p of nu of q_p(lambda).
inline Rational q_nu(const Partition& lambda, const Partition& nu)
{
    Rational r = 1;
    for (int p : nu.parts()) r *= q_k(lambda, p);
    return r;
}

/// prod_i q_{exponents[i]}(quotients[i]). The tuple form keeps the product
/// over quotient indices separate from the product over parts of one nu.
inline Rational q_tuple(const std::vector<Partition>& quotients, const std::vector<Partition>& exponents)
{
    if (quotients.size() != exponents.size())
        throw std::invalid_argument("q_tuple: quotient and exponent tuples differ in length");
    Rational r = 1;
    for (std::size_t i = 0; i < quotients.size(); ++i) r *= q_nu(quotients[i], exponents[i]);
    return r;
}

/// q_k(lambda + cell at x) - q_k(lambda) = sum_{1 <= j <= k/2} 2 C(k, 2j) x^{k-2j}.
inline BigInt q_increment(const Partition& lambda, int k, int x)
{
    if (k < 0) throw std::invalid_argument("q_increment needs k >= 0");
    if (!is_inner_corner(lambda, x))
        throw std::invalid_argument("content " + std::to_string(x) + " is not an inner corner of " + to_string(lambda));
    BigInt s = 0;
    for (int j = 1; 2 * j <= k; ++j) s += 2 * binomial(k, 2 * j) * ipow(x, static_cast<unsigned>(k - 2 * j));
    return s;
}

/// sum over inner corners of (H_lambda / H_{lambda + cell}) x_i^k.
inline Rational weighted_corner_sum(const Partition& lambda, int k)
{
    const BigInt h = hook_product(lambda);
    Rational s = 0;
    for (int x : corners(lambda).x)
        s += Rational(h, hook_product(add_cell(lambda, x))) * Rational(ipow(x, static_cast<unsigned>(k)));
    return s;
}

// ---------------------------------------------------------------------------
// Residue-filtered power sums

enum class StatKind { hook, content };

/// hook:    sum_{h = j mod t} h^power  (+ sum_{h = t-j mod t} h^power when paired)
/// content: sum_{c = j mod t} c^power  (+ sum_{c = t-j mod t} c^power when paired)
/// When j and t-j name the same class, a paired statistic counts it twice.
struct StatSpec {
    StatKind kind = StatKind::hook;
    int t = 1;
    int residue = 0;
    int power = 0;
    bool paired = false;
    bool operator==(const StatSpec&) const = default;
};

inline std::string to_string(const StatSpec& s)
{
    std::string out = s.kind == StatKind::hook ? "hook:" : "content:";
    out += "t=" + std::to_string(s.t) + ",j=" + std::to_string(s.residue) + ",pow=" + std::to_string(s.power);
    if (s.paired) out += ",paired";
    return out;
}

/// Parses "hook:t=3,j=1,pow=2,paired" or "content:t=3,j=2,pow=1". t may be
/// omitted when default_t is given; j defaults to 0.
inline StatSpec parse_stat_spec(std::string_view text, std::optional<int> default_t = std::nullopt)
{
    const auto bad = [&](const std::string& why) {
        return std::invalid_argument("bad statistic '" + std::string(text) + "': " + why);
    };
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw bad("expected '<hook|content>:...'");
    StatSpec s;
    const auto kind = text.substr(0, colon);
    if (kind == "hook")
        s.kind = StatKind::hook;
    else if (kind == "content")
        s.kind = StatKind::content;
    else
        throw bad("unknown kind '" + std::string(kind) + "'");

    std::optional<int> t = default_t;
    std::optional<int> power;
    std::size_t pos = colon + 1;
    while (pos < text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string tok(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (tok == "paired") {
            s.paired = true;
            continue;
        }
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw bad("unknown token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(tok.substr(eq + 1), &used);
            if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw bad("'" + tok + "' is not an integer assignment");
        }
        if (key == "t")
            t = value;
        else if (key == "j")
            s.residue = value;
        else if (key == "pow")
            power = value;
        else
            throw bad("unknown key '" + key + "'");
    }
    if (!t) throw bad("missing t");
    if (!power) throw bad("missing pow");
    s.t = *t;
    s.power = *power;
    if (s.t < 1) throw bad("t must be positive");
    if (s.residue < 0 || s.residue >= s.t) throw bad("j must lie in 0..t-1");
    if (s.power < 0) throw bad("pow must be non-negative");
    return s;
}

inline BigInt stat_eval(const Partition& lambda, const StatSpec& s)
{
    const int j1 = s.residue;
    const int j2 = static_cast<int>(mod_floor(s.t - s.residue, s.t));
    const auto e = static_cast<unsigned>(s.power);
    BigInt total = 0;
    auto add = [&](int v) {
        const auto r = static_cast<int>(mod_floor(v, s.t));
        int mult = r == j1 ? 1 : 0;
        if (s.paired && r == j2) ++mult;
        if (mult) total += mult * ipow(v, e);
    };
    if (s.kind == StatKind::hook)
        for (int h : hooks(lambda)) add(h);
    else
        for (int c : contents(lambda)) add(c);
    return total;
}

// ---------------------------------------------------------------------------
// Single-cell increments inside the Littlewood decomposition

namespace detail {

inline void require_quotient_corner(const LittlewoodDecomposition& dec, int i, int c)
{
    if (i < 0 || i >= dec.t) throw std::invalid_argument("quotient index out of range");
    if (!is_inner_corner(dec.quotients[static_cast<std::size_t>(i)], c))
        throw std::invalid_argument("content " + std::to_string(c) + " is not an inner corner of quotient " +
                                    std::to_string(i) + " = " + to_string(dec.quotients[static_cast<std::size_t>(i)]));
}

} // namespace detail

/// The decomposition obtained by adding a cell of content c to quotient i.
inline LittlewoodDecomposition grow_quotient(const LittlewoodDecomposition& dec, int i, int c)
{
    detail::require_quotient_corner(dec, i, c);
    auto next = dec;
    next.quotients[static_cast<std::size_t>(i)] = add_cell(dec.quotients[static_cast<std::size_t>(i)], c);
    return next;
}

/// Contents gained by lambda when a cell of content c joins quotient i:
/// {c t + b_i - j : 0 <= j <= t-1}, listed for j = 0, 1, ...
inline std::vector<int> content_delta(const LittlewoodDecomposition& dec, int i, int c)
{
    detail::require_quotient_corner(dec, i, c);
    const int b = dec.offsets.b[static_cast<std::size_t>(i)];
    std::vector<int> out;
    for (int j = 0; j < dec.t; ++j) out.push_back(c * dec.t + b - j);
    return out;
}

namespace detail {

/// sum_l (A - t x_l)^e - sum_l (A - t y_l)^e over the corners of q.
inline BigInt corner_power_difference(const Partition& q, std::int64_t a, int t, unsigned e)
{
    const auto cd = corners(q);
    BigInt s = 0;
    for (int x : cd.x) s += ipow(a - static_cast<std::int64_t>(t) * x, e);
    for (int y : cd.y) s -= ipow(a - static_cast<std::int64_t>(t) * y, e);
    return s;
}

} // namespace detail

/// Predicted change, when a cell of content c joins quotient i, of
///   k = 0:          sum_{h = 0 mod t} h^{2r}
///   1 <= k <= t-1:  sum_{h = k mod t} h^{2r} + sum_{h = t-k mod t} h^{2r}
/// The k = 0 sum skips the corner being filled: its term is the hook
/// t(c - c) = 0, which only matters for r = 0.
inline BigInt hook_delta_power(const LittlewoodDecomposition& dec, int i, int c, int k, int r)
{
    detail::require_quotient_corner(dec, i, c);
    if (k < 0 || k >= dec.t) throw std::invalid_argument("residue out of range");
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    const int t = dec.t;
    const auto e = static_cast<unsigned>(2 * r);
    const auto& b = dec.offsets.b;
    const std::int64_t base = static_cast<std::int64_t>(t) * c + b[static_cast<std::size_t>(i)];
    if (k == 0) {
        BigInt s = ipow(t, e) +
                   detail::corner_power_difference(dec.quotients[static_cast<std::size_t>(i)],
                                                   static_cast<std::int64_t>(t) * c, t, e);
        if (r == 0) s -= 1;
        return s;
    }
    BigInt s = 0;
    for (int other : {static_cast<int>(mod_floor(i + k, t)), static_cast<int>(mod_floor(i - k, t))}) {
        const auto o = static_cast<std::size_t>(other);
        s += detail::corner_power_difference(dec.quotients[o], base - b[o], t, e);
    }
    return s;
}

/// Predicted change of sum over all cells of h^{2r} when a cell of content c
/// joins quotient i.
inline BigInt hook_delta_power_total(const LittlewoodDecomposition& dec, int i, int c, int r)
{
    detail::require_quotient_corner(dec, i, c);
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    const int t = dec.t;
    const auto e = static_cast<unsigned>(2 * r);
    const auto& b = dec.offsets.b;
    const std::int64_t base = static_cast<std::int64_t>(t) * c + b[static_cast<std::size_t>(i)];
    BigInt s = ipow(t, e);
    for (int j = 0; j < t; ++j)
        s += detail::corner_power_difference(dec.quotients[static_cast<std::size_t>(j)],
                                             base - b[static_cast<std::size_t>(j)], t, e);
    if (r == 0) s -= 1;
    return s;
}

// ---------------------------------------------------------------------------
// Increments as polynomials in the content of the added cell

/// Coefficients in ascending degree.
using Poly = std::vector<Rational>;

inline Rational evaluate(const Poly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace detail {

inline void add_scaled(Poly& into, const Poly& p, const Rational& scale)
{
    if (into.size() < p.size()) into.resize(p.size(), Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) into[k] += scale * p[k];
}

/// (a c + b)^e
inline Poly linear_power(std::int64_t a, std::int64_t b, unsigned e)
{
    Poly p(e + 1, Rational(0));
    for (unsigned k = 0; k <= e; ++k)
        p[k] = Rational(binomial(e, k) * ipow(a, k) * ipow(b, e - k));
    return p;
}

/// sum_l (t c + beta - t x_l)^e - sum_l (t c + beta - t y_l)^e, expanded in c
/// with coefficients built from q_s(q): sum_s C(e,s) (tc+beta)^{e-s} (-t)^s q_s.
inline Poly corner_power_difference_poly(const Partition& q, int t, std::int64_t beta, unsigned e)
{
    Poly out;
    for (unsigned s = 0; s <= e; ++s) {
        const Rational coeff = Rational(binomial(e, s) * ipow(-static_cast<std::int64_t>(t), s)) *
                               q_k(q, static_cast<int>(s));
        add_scaled(out, linear_power(t, beta, e - s), coeff);
    }
    return out;
}

} // namespace detail

/// The increment of stat_eval(., spec) when a cell of content c joins
/// quotient i, as a polynomial in c whose coefficients are built from the
/// q-statistics of the quotients and the core offsets. Hook statistics must
/// have even power and be either paired or of residue 0.
inline Poly increment_polynomial(const LittlewoodDecomposition& dec, int i, const StatSpec& spec)
{
    const int t = dec.t;
    if (spec.t != t) throw std::invalid_argument("statistic modulus differs from decomposition modulus");
    if (i < 0 || i >= t) throw std::invalid_argument("quotient index out of range");
    const auto& b = dec.offsets.b;
    const std::int64_t bi = b[static_cast<std::size_t>(i)];
    Poly out;
    if (spec.kind == StatKind::content) {
        const auto e = static_cast<unsigned>(spec.power);
        std::vector<int> classes{spec.residue};
        if (spec.paired) classes.push_back(static_cast<int>(mod_floor(t - spec.residue, t)));
        for (int j : classes) {
            // the new content congruent to j is c t + b_i - ((i - j) mod t)
            detail::add_scaled(out, detail::linear_power(t, bi - mod_floor(i - j, t), e), Rational(1));
        }
        return out;
    }
    if (spec.power % 2 != 0) throw std::invalid_argument("hook increments need an even power");
    if (!spec.paired && spec.residue != 0)
        throw std::invalid_argument("hook increments need a paired statistic or residue 0");
    const auto e = static_cast<unsigned>(spec.power);
    const int k = spec.residue;
    if (k == 0) {
        Poly p = detail::corner_power_difference_poly(dec.quotients[static_cast<std::size_t>(i)], t, 0, e);
        Rational constant = Rational(ipow(t, e)) - (e == 0 ? 1 : 0);
        detail::add_scaled(p, Poly{constant}, Rational(1));
        detail::add_scaled(out, p, Rational(spec.paired ? 2 : 1));
        return out;
    }
    for (int other : {static_cast<int>(mod_floor(i + k, t)), static_cast<int>(mod_floor(i - k, t))}) {
        const auto o = static_cast<std::size_t>(other);
        detail::add_scaled(out, detail::corner_power_difference_poly(dec.quotients[o], t, bi - b[o], e), Rational(1));
    }
    return out;
}

} // namespace hookwalk
