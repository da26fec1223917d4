#pragma once

// t-hook moves on the 01-sequence, t-cores, t-quotients and the Littlewood
// bijection lambda <-> (core; quotient_0, ..., quotient_{t-1}), together with
// the per-residue offsets b_i = t d_i + i of a t-core and the B_k identities.

#include "hookwalk/boundary.hpp"
#include "hookwalk/exact.hpp"
#include "hookwalk/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hookwalk {

namespace detail {

inline void require_modulus(int t)
{
    if (t < 1) throw std::invalid_argument("t must be a positive integer");
}

inline std::string not_a_core_message(const Partition& mu, int t)
{
    const auto cell = find_divisible_hook(mu, t);
    std::string msg = "partition " + to_string(mu) + " is not a " + std::to_string(t) + "-core";
    if (cell)
        msg += ": hook " + std::to_string(cell->hook) + " at cell (" + std::to_string(cell->row) + "," +
               std::to_string(cell->col) + ") is divisible by " + std::to_string(t);
    return msg;
}

inline void require_core(const Partition& mu, int t)
{
    require_modulus(t);
    if (!is_t_core(mu, t)) throw std::invalid_argument(not_a_core_message(mu, t));
}

} // namespace detail

/// Partitions obtained by one swap (z_i, z_{i+t}) = (0, 1) -> (1, 0), ordered by i.
inline std::vector<Partition> t_hook_additions(const Partition& lambda, int t)
{
    detail::require_modulus(t);
    const auto seq = encode(lambda);
    const int lo = seq.lo() - t;
    auto z = seq.slice(lo, seq.hi() + t);
    std::vector<Partition> out;
    for (std::size_t i = 0; i + static_cast<std::size_t>(t) < z.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(t);
        if (z[i] == 0 && z[j] == 1) {
            std::swap(z[i], z[j]);
            out.push_back(decode(BoundarySequence::from_window(lo, z)));
            std::swap(z[i], z[j]);
        }
    }
    return out;
}

/// Partitions obtained by one swap (z_i, z_{i+t}) = (1, 0) -> (0, 1), ordered by i.
inline std::vector<Partition> t_hook_removals(const Partition& lambda, int t)
{
    detail::require_modulus(t);
    const auto seq = encode(lambda);
    auto z = seq.slice(seq.lo(), seq.hi());
    std::vector<Partition> out;
    for (std::size_t i = 0; i + static_cast<std::size_t>(t) < z.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(t);
        if (z[i] == 1 && z[j] == 0) {
            std::swap(z[i], z[j]);
            out.push_back(decode(BoundarySequence::from_window(seq.lo(), z)));
            std::swap(z[i], z[j]);
        }
    }
    return out;
}

/// Removing t-hooks until none is left only reorders each residue class so
/// that its 0's precede its 1's; that is done directly here.
inline Partition t_core(const Partition& lambda, int t)
{
    detail::require_modulus(t);
    const auto seq = encode(lambda);
    auto z = seq.slice(seq.lo(), seq.hi());
    const auto len = static_cast<std::ptrdiff_t>(z.size());
    for (std::ptrdiff_t r = 0; r < t && r < len; ++r) {
        std::ptrdiff_t ones = 0, count = 0;
        for (std::ptrdiff_t p = r; p < len; p += t, ++count) ones += z[static_cast<std::size_t>(p)];
        std::ptrdiff_t k = 0;
        for (std::ptrdiff_t p = r; p < len; p += t, ++k)
            z[static_cast<std::size_t>(p)] = k >= count - ones ? 1 : 0;
    }
    return decode(BoundarySequence::from_window(seq.lo(), std::move(z)));
}

namespace detail {

/// The residue-r subsequence (z_{tj+r})_j as a 01-sequence indexed by j.
inline BoundarySequence residue_subsequence(const BoundarySequence& seq, int t, int r)
{
    const int jlo = static_cast<int>(div_floor(seq.lo() - r, t));
    const int jhi = static_cast<int>(div_floor(seq.hi() - r, t)) + 1;
    std::vector<std::uint8_t> w;
    for (int j = jlo; j <= jhi; ++j) w.push_back(static_cast<std::uint8_t>(seq.at(t * j + r)));
    return BoundarySequence::from_window(jlo, std::move(w));
}

} // namespace detail

/// The charges d_0..d_{t-1} of the residue subsequences; they depend only on
/// the t-core and sum to zero.
inline std::vector<int> residue_charges(const Partition& lambda, int t)
{
    detail::require_modulus(t);
    const auto seq = encode(lambda);
    std::vector<int> d;
    for (int r = 0; r < t; ++r) d.push_back(detail::residue_subsequence(seq, t, r).charge());
    return d;
}

/// Quotient r reads (z_{tj+r})_j, shifted by the subsequence's own charge so
/// that it is balanced.
inline std::vector<Partition> t_quotients(const Partition& lambda, int t)
{
    detail::require_modulus(t);
    const auto seq = encode(lambda);
    std::vector<Partition> out;
    for (int r = 0; r < t; ++r) {
        const auto sub = detail::residue_subsequence(seq, t, r);
        const int d = sub.charge();
        out.push_back(decode(BoundarySequence::from_window(
            sub.lo() - d, std::vector<std::uint8_t>(sub.bits().begin(), sub.bits().end()))));
    }
    return out;
}

struct CoreOffsets {
    int t = 1;
    std::vector<int> b;  // b_i = min{ j = i mod t : z_j = 1 }
    std::vector<int> d;  // b_i = t d_i + i
    bool operator==(const CoreOffsets&) const = default;
};

/// Offsets read straight off the definition: the first 1 in each residue class.
inline CoreOffsets core_offsets(const Partition& mu, int t)
{
    detail::require_core(mu, t);
    const auto seq = encode(mu);
    CoreOffsets off;
    off.t = t;
    for (int i = 0; i < t; ++i) {
        // first index congruent to i at or above lo
        int j = seq.lo() + static_cast<int>(mod_floor(i - seq.lo(), t));
        while (seq.at(j) != 1) j += t;
        off.b.push_back(j);
        off.d.push_back((j - i) / t);
    }
    return off;
}

struct LittlewoodDecomposition {
    int t = 1;
    Partition core;
    std::vector<Partition> quotients;
    CoreOffsets offsets;

    /// sum of |quotient_i|
    int weight() const
    {
        int n = 0;
        for (const auto& q : quotients) n += q.size();
        return n;
    }
    bool operator==(const LittlewoodDecomposition&) const = default;
};

inline LittlewoodDecomposition decompose(const Partition& lambda, int t)
{
    LittlewoodDecomposition dec;
    dec.t = t;
    dec.core = t_core(lambda, t);
    dec.quotients = t_quotients(lambda, t);
    dec.offsets = core_offsets(dec.core, t);
    return dec;
}

/// Inverse of decompose: z_{t j + b_i} is read from quotient i at index j.
inline Partition recompose(const Partition& core, const std::vector<Partition>& quotients, int t)
{
    detail::require_core(core, t);
    if (quotients.size() != static_cast<std::size_t>(t))
        throw std::invalid_argument("expected " + std::to_string(t) + " quotients, got " +
                                    std::to_string(quotients.size()));
    const auto off = core_offsets(core, t);
    std::vector<BoundarySequence> qs;
    int lo = 0, hi = 0;
    for (int i = 0; i < t; ++i) {
        qs.push_back(encode(quotients[static_cast<std::size_t>(i)]));
        const int b = off.b[static_cast<std::size_t>(i)];
        lo = std::min(lo, t * (qs.back().lo() - 1) + b);
        hi = std::max(hi, t * (qs.back().hi() + 1) + b);
    }
    std::vector<std::uint8_t> z;
    for (int p = lo; p <= hi; ++p) {
        const auto i = static_cast<std::size_t>(mod_floor(p, t));
        z.push_back(static_cast<std::uint8_t>(qs[i].at((p - off.b[i]) / t)));
    }
    return decode(BoundarySequence::from_window(lo, std::move(z)));
}

inline Partition recompose(const LittlewoodDecomposition& dec) { return recompose(dec.core, dec.quotients, dec.t); }

/// |lambda(k)| = #{h in H(lambda) : h = k mod t}.
inline int residue_hook_count(const Partition& lambda, int t, int k)
{
    detail::require_modulus(t);
    if (k < 0 || k >= t) throw std::invalid_argument("residue out of range");
    int n = 0;
    for (int h : hooks(lambda))
        if (h % t == k) ++n;
    return n;
}

/// B_k = {(i, i+k) : 0 <= i <= t-1-k} + {(i, i+t-k) : 0 <= i <= k-1} as a
/// multiset; when k = t-k both copies are kept.
inline std::vector<std::pair<int, int>> b_pairs(int t, int k)
{
    if (k < 1 || k > t - 1) throw std::invalid_argument("B_k needs 1 <= k <= t-1");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= t - 1 - k; ++i) out.emplace_back(i, i + k);
    for (int i = 0; i <= k - 1; ++i) out.emplace_back(i, i + t - k);
    return out;
}

struct IdentityCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

/// Both sides of the B_k and core-size identities for a t-core mu (t >= 2):
/// the B_k square sum, the residue-count formula through generalized C(x,2),
/// the three linear/quadratic relations among the d_i, and the three
/// expressions for |mu|.
inline std::vector<IdentityCheck> bk_identities(const Partition& mu, int t)
{
    if (t < 2) throw std::invalid_argument("B_k identities need t >= 2");
    const auto off = core_offsets(mu, t);
    const auto& d = off.d;
    const auto& b = off.b;
    auto di = [&](int i) { return static_cast<std::int64_t>(d[static_cast<std::size_t>(i)]); };
    auto bi = [&](int i) { return static_cast<std::int64_t>(b[static_cast<std::size_t>(i)]); };

    std::vector<IdentityCheck> out;
    std::int64_t dsum = 0;
    for (int i = 0; i < t; ++i) dsum += di(i);
    out.push_back({"sum d_i = 0", Rational(dsum), Rational(0)});

    for (int k = 1; k <= t - 1; ++k) {
        const auto pairs = b_pairs(t, k);
        const std::string tag = " (k=" + std::to_string(k) + ")";
        std::int64_t sq = 0, lhs2 = 0, rhs2 = 0, binom = 0;
        for (auto [i, j] : pairs) {
            sq += static_cast<std::int64_t>(j - i) * (j - i);
            lhs2 += static_cast<std::int64_t>(2 * j - 2 * i) * (di(i) - di(j));
            rhs2 += static_cast<std::int64_t>(t) * (di(i) - di(j));
            binom += choose2(di(i) - di(j));
        }
        out.push_back({"B_k square sum" + tag, Rational(sq), Rational(static_cast<std::int64_t>(t) * k * (t - k))});
        out.push_back({"B_k linear relation" + tag, Rational(lhs2), Rational(rhs2)});
        const int counted = residue_hook_count(mu, t, k) + residue_hook_count(mu, t, t - k);
        out.push_back({"residue hook count" + tag, Rational(counted), Rational(binom)});
    }

    std::int64_t tsq = 0, pair_sq = 0, lin = 0, pair_diff = 0, card = 0, bsq = 0;
    for (int i = 0; i < t; ++i) {
        tsq += t * di(i) * di(i);
        lin += i * di(i);
        for (int j = i + 1; j < t; ++j) {
            pair_sq += (di(i) - di(j)) * (di(i) - di(j));
            pair_diff += di(i) - di(j);
            card += choose2(di(i) - di(j));
            bsq += (bi(i) - bi(j)) * (bi(i) - bi(j)) - static_cast<std::int64_t>(i - j) * (i - j);
        }
    }
    out.push_back({"t sum d_i^2 = sum (d_i-d_j)^2", Rational(tsq), Rational(pair_sq)});
    out.push_back({"-2 sum i d_i = sum (d_i-d_j)", Rational(-2 * lin), Rational(pair_diff)});
    const Rational size(mu.size());
    out.push_back({"|mu| = sum C(d_i-d_j,2)", size, Rational(card)});
    out.push_back({"|mu| = t/2 sum d_i^2 + sum i d_i", size, Rational(tsq, 2) + Rational(lin)});
    out.push_back({"|mu| = sum ((b_i-b_j)^2-(i-j)^2)/(2t^2)", size,
                   Rational(bsq, 2 * static_cast<std::int64_t>(t) * t)});
    return out;
}

} // namespace hookwalk
