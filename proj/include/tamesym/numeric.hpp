#pragma once

// Exact integer/rational scalars (GMP-backed) and the small number-theory
// helpers the rest of the library leans on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tamesym {

using Integer  = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& n) { return mpz_sgn(n.get_mpz_t()); }
inline int sign(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

inline bool is_perfect_square(const Integer& n) {
    return sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// True iff r is the square of a rational (0 counts). Works on unreduced input.
inline bool is_square_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return is_perfect_square(numerator(c)) && is_perfect_square(denominator(c));
}

// Exact square root of a rational known (or suspected) to be a square.
inline bool sqrt_rational(const Rational& r, Rational& out) {
    Rational c = r;
    c.canonicalize();
    if (!is_square_rational(c)) return false;
    out = Rational(isqrt(numerator(c)), isqrt(denominator(c)));
    out.canonicalize();
    return true;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t acc = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t seed) {
    if ((n & 1) == 0) return 2;
    std::uint64_t y = seed % n, c = (seed / 7 + 1) % n, m = 128;
    if (c == 0) c = 1;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

} // namespace detail

// Prime factorization of a positive 64-bit integer, sorted, as (prime, exponent).
inline std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor_u64: zero has no factorization");
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> stack{n};
    while (!stack.empty()) {
        std::uint64_t m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) { primes.push_back(m); continue; }
        std::uint64_t d = m;
        for (std::uint64_t s = 3; d == m; s += 11) d = detail::pollard_brent(m, s);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    return out;
}

// p-adic valuation of a nonzero rational.
inline long valuation_rational(const Rational& r, const Integer& p) {
    if (sign(r) == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    Integer n = numerator(r);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) { n /= p; ++v; }
    Integer d = denominator(r);
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) { d /= p; --v; }
    return v;
}

// Unit part of r at p: r / p^v with v = valuation_rational(r, p).
inline Rational unit_part_at(const Rational& r, const Integer& p) {
    Integer n = numerator(r), d = denominator(r);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) d /= p;
    Rational u(n, d);
    u.canonicalize();
    return u;
}

} // namespace tamesym
