#pragma once

// Exact integer and rational arithmetic used throughout hookwalk.
// Everything that is a count, a weight or an average is exact; no floating
// point appears anywhere on the computational path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// num/den in lowest terms; den may be negative.
inline Rational ratio(BigInt num, BigInt den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    const BigInt den = denominator(q);
    if (den == 1) return numerator(q).str();
    return numerator(q).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

/// Parses "p", "-p" or "p/q" (q > 0).
inline Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("non-positive denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

inline BigInt factorial(std::int64_t n)
{
    if (n < 0) throw std::domain_error("factorial of a negative number");
    BigInt r = 1;
    for (std::int64_t k = 2; k <= n; ++k) r *= k;
    return r;
}

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) throw std::domain_error("binomial with negative top");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// x(x-1)/2 for any integer x, so that choose2(x) == choose2(1 - x).
constexpr std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

inline BigInt multinomial(std::span<const std::int64_t> parts)
{
    std::int64_t total = 0;
    BigInt denom = 1;
    for (auto p : parts) {
        if (p < 0) throw std::domain_error("multinomial with a negative part");
        total += p;
        denom *= factorial(p);
    }
    return factorial(total) / denom;
}

/// base^exp with 0^0 = 1.
inline BigInt ipow(const BigInt& base, unsigned exp)
{
    return boost::multiprecision::pow(base, exp);
}

inline BigInt ipow(std::int64_t base, unsigned exp) { return ipow(BigInt(base), exp); }

/// Least non-negative residue.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

constexpr std::int64_t div_floor(std::int64_t a, std::int64_t m)
{
    return (a - mod_floor(a, m)) / m;
}

} // namespace hookwalk
