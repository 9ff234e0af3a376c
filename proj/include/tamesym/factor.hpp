#pragma once

// Univariate factorization over F_p: squarefree split, distinct-degree, then
// randomized equal-degree splitting (Cantor-Zassenhaus; trace-based for p = 2).
// The RNG is explicit so runs are reproducible.

#include <random>
#include <vector>

#include "tamesym/polynomial.hpp"

namespace tamesym {

template <class K>
struct FactoredPolynomial {
    K unit;
    std::vector<std::pair<Polynomial<K>, int>> factors; // (monic irreducible, multiplicity)

    Polynomial<K> expand() const {
        Polynomial<K> r = Polynomial<K>::constant(unit);
        for (const auto& [f, m] : factors) r *= f.pow(static_cast<unsigned long>(m));
        return r;
    }
};

namespace detail {

inline Integer integer_pow(std::uint64_t base, std::size_t e) {
    Integer r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(base);
    return r;
}

// exponents of f that are multiples of p, divided by p (valid since a^p = a in F_p)
inline std::vector<Fp> pth_root(const std::vector<Fp>& f, std::uint64_t p) {
    std::vector<Fp> r((f.size() - 1) / p + 1, field_zero(f[0]));
    for (std::size_t i = 0; i < f.size(); i += p) r[i / p] = f[i];
    uni::trim(r);
    return r;
}

inline std::vector<Fp> random_poly(std::size_t below_degree, std::uint64_t p, std::mt19937_64& rng) {
    std::vector<Fp> r;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (std::size_t i = 0; i < below_degree; ++i) r.push_back(Fp::raw(dist(rng), p));
    uni::trim(r);
    return r;
}

inline void squarefree_decompose(std::vector<Fp> f, int multiplier,
                                 std::vector<std::pair<std::vector<Fp>, int>>& out) {
    std::uint64_t p = f[0].modulus();
    std::vector<Fp> d = uni::derivative(f);
    if (d.empty()) {
        // f = h(t^p)
        if (uni::degree(f) == 0) return;
        squarefree_decompose(pth_root(f, p), multiplier * static_cast<int>(p), out);
        return;
    }
    std::vector<Fp> g = uni::gcd(f, d);
    std::vector<Fp> w = uni::divmod(f, g).first;
    int i = 1;
    while (uni::degree(w) > 0) {
        std::vector<Fp> y = uni::gcd(w, g);
        std::vector<Fp> fac = uni::divmod(w, y).first;
        if (uni::degree(fac) > 0) out.emplace_back(fac, i * multiplier);
        w = std::move(y);
        g = uni::divmod(g, w).first;
        ++i;
    }
    if (uni::degree(g) > 0) squarefree_decompose(pth_root(g, p), multiplier * static_cast<int>(p), out);
}

// f monic squarefree, all irreducible factors of degree d.
inline void equal_degree_split(const std::vector<Fp>& f, std::size_t d, std::mt19937_64& rng,
                               std::vector<std::vector<Fp>>& out) {
    std::uint64_t p = f[0].modulus();
    if (static_cast<std::size_t>(uni::degree(f)) == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        std::vector<Fp> a = random_poly(static_cast<std::size_t>(uni::degree(f)), p, rng);
        if (uni::degree(a) < 1 && p > 2) continue;
        std::vector<Fp> g = uni::gcd(a, f);
        if (uni::degree(g) > 0 && uni::degree(g) < uni::degree(f)) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(uni::divmod(f, g).first, d, rng, out);
            return;
        }
        std::vector<Fp> b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            b = a;
            std::vector<Fp> t = a;
            for (std::size_t i = 1; i < d; ++i) {
                t = uni::mod(uni::mul(t, t), f);
                b = uni::add(b, t);
            }
        } else {
            Integer e = (integer_pow(p, d) - 1) / 2;
            b = uni::pow_mod(a, e, f);
            b = uni::add(b, std::vector<Fp>{-field_one(f[0])}); // b - 1
        }
        std::vector<Fp> g2 = uni::gcd(b, f);
        if (uni::degree(g2) > 0 && uni::degree(g2) < uni::degree(f)) {
            equal_degree_split(g2, d, rng, out);
            equal_degree_split(uni::divmod(f, g2).first, d, rng, out);
            return;
        }
    }
}

inline bool poly_less(const std::vector<Fp>& a, const std::vector<Fp>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i].value() != b[i].value()) return a[i].value() < b[i].value();
    return false;
}

} // namespace detail

// Rabin irreducibility test: g monic of degree d >= 1 is irreducible over F_p
// iff t^(p^d) = t mod g and gcd(t^(p^(d/r)) - t, g) = 1 for every prime r | d.
inline bool is_irreducible_fp(const Polynomial<Fp>& g) {
    if (g.is_zero() || !g.is_univariate_in(Var::y) || g.degree(Var::y) < 1) {
        if (!g.is_zero() && g.is_univariate_in(Var::x) && g.degree(Var::x) >= 1) {
            // accept x-polynomials too, by symmetry
            std::vector<Fp> c = g.univariate(Var::x);
            return is_irreducible_fp(Polynomial<Fp>::from_univariate(Var::y, c));
        }
        throw std::domain_error("is_irreducible: need a univariate polynomial of degree >= 1");
    }
    std::vector<Fp> f = uni::make_monic(g.univariate(Var::y));
    std::uint64_t p = f[0].modulus();
    std::size_t d = static_cast<std::size_t>(uni::degree(f));
    std::vector<Fp> t{field_zero(f[0]), field_one(f[0])};
    std::vector<Fp> tred = uni::mod(t, f);
    std::vector<Fp> xq = uni::pow_mod(t, detail::integer_pow(p, d), f);
    if (!uni::sub(xq, tred).empty()) return false;
    for (const auto& [r, e] : factor_u64(d)) {
        std::vector<Fp> xr = uni::pow_mod(t, detail::integer_pow(p, d / r), f);
        std::vector<Fp> gc = uni::gcd(uni::sub(xr, tred), f);
        if (uni::degree(gc) != 0) return false;
    }
    return true;
}

// Complete factorization of a nonzero univariate polynomial over F_p; factors
// come out monic, sorted, deterministic for a fixed seed.
inline FactoredPolynomial<Fp> factor_fp(const Polynomial<Fp>& g, std::uint64_t seed) {
    Var v = g.is_univariate_in(Var::y) ? Var::y : Var::x;
    if (!g.is_univariate_in(v)) throw std::domain_error("factor: multivariate input");
    std::vector<Fp> f = g.univariate(v);
    if (f.empty()) throw std::domain_error("factor: zero polynomial");
    FactoredPolynomial<Fp> result;
    result.unit = f.back();
    if (uni::degree(f) == 0) return result;
    f = uni::make_monic(f);

    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::vector<Fp>, int>> sqf;
    detail::squarefree_decompose(f, 1, sqf);

    std::vector<std::pair<std::vector<Fp>, int>> irr;
    for (const auto& [part, mult] : sqf) {
        // distinct-degree split of the squarefree part
        std::vector<Fp> h{field_zero(f[0]), field_one(f[0])};
        std::vector<Fp> rest = part;
        std::uint64_t p = f[0].modulus();
        for (std::size_t d = 1; uni::degree(rest) >= static_cast<long>(2 * d); ++d) {
            h = uni::pow_mod(h, Integer(static_cast<unsigned long>(p)), rest);
            std::vector<Fp> t{field_zero(f[0]), field_one(f[0])};
            std::vector<Fp> gd = uni::gcd(uni::sub(h, t), rest);
            if (uni::degree(gd) > 0) {
                std::vector<std::vector<Fp>> split;
                detail::equal_degree_split(gd, d, rng, split);
                for (auto& s : split) irr.emplace_back(std::move(s), mult);
                rest = uni::divmod(rest, gd).first;
                h = uni::mod(h, rest);
            }
        }
        if (uni::degree(rest) > 0) irr.emplace_back(rest, mult);
    }
    std::sort(irr.begin(), irr.end(),
              [](const auto& a, const auto& b) { return detail::poly_less(a.first, b.first); });
    for (const auto& [c, m] : irr) result.factors.emplace_back(Polynomial<Fp>::from_univariate(v, c), m);
    return result;
}

} // namespace tamesym
