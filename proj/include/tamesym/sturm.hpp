#pragma once

// Exact real-root isolation for rational-coefficient polynomials via Sturm
// chains, plus exact sign evaluation of one polynomial at an isolated root of
// another. This is the "real number" layer: no floating point anywhere.

#include <vector>

#include "tamesym/polynomial.hpp"

namespace tamesym {

struct IsolatedRealRoot {
    std::vector<Rational> defining; // squarefree, has exactly one root in [lo, hi]
    Rational lo, hi;                // endpoints are not roots of `defining`

    friend bool operator==(const IsolatedRealRoot& a, const IsolatedRealRoot& b) {
        return a.defining == b.defining && a.lo == b.lo && a.hi == b.hi;
    }
};

namespace sturm_detail {

inline std::vector<std::vector<Rational>> chain(const std::vector<Rational>& g) {
    std::vector<std::vector<Rational>> s;
    s.push_back(g);
    s.push_back(uni::derivative(g));
    while (!s.back().empty() && uni::degree(s.back()) >= 0) {
        std::vector<Rational> r = uni::mod(s[s.size() - 2], s.back());
        if (r.empty()) break;
        s.push_back(uni::negate(r));
    }
    return s;
}

inline int variations(const std::vector<std::vector<Rational>>& s, const Rational& at) {
    int count = 0, last = 0;
    for (const auto& p : s) {
        int sg = sign(uni::eval(p, at));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

// number of distinct real roots of the chain's polynomial in the open interval (a, b),
// assuming neither endpoint is a root
inline int count_open(const std::vector<std::vector<Rational>>& s, const Rational& a, const Rational& b) {
    return variations(s, a) - variations(s, b);
}

inline std::vector<Rational> squarefree_part(const std::vector<Rational>& g) {
    std::vector<Rational> d = uni::derivative(g);
    if (d.empty()) return uni::make_monic(g);
    std::vector<Rational> h = uni::gcd(g, d);
    return uni::make_monic(uni::divmod(g, h).first);
}

// Cauchy bound: all real roots lie in (-B, B).
inline Rational root_bound(const std::vector<Rational>& g) {
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        Rational a = abs(g[i]);
        if (a > m) m = a;
    }
    Rational b = Rational(1) + m / abs(g.back());
    return b;
}

inline void isolate_rec(const std::vector<Rational>& g, const std::vector<std::vector<Rational>>& s,
                        const Rational& lo, const Rational& hi, int nroots,
                        std::vector<IsolatedRealRoot>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.push_back({g, lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sign(uni::eval(g, mid)) == 0) {
        // the midpoint is itself a root; shrink a private interval around it
        Rational delta = (hi - lo) / 4;
        for (;;) {
            Rational a = mid - delta, b = mid + delta;
            if (sign(uni::eval(g, a)) != 0 && sign(uni::eval(g, b)) != 0 && count_open(s, a, b) == 1) {
                out.push_back({g, a, b});
                isolate_rec(g, s, lo, a, count_open(s, lo, a), out);
                isolate_rec(g, s, b, hi, count_open(s, b, hi), out);
                return;
            }
            delta /= 2;
        }
    }
    int left = count_open(s, lo, mid);
    isolate_rec(g, s, lo, mid, left, out);
    isolate_rec(g, s, mid, hi, nroots - left, out);
}

} // namespace sturm_detail

// One disjoint interval per distinct real root (multiplicities dropped),
// sorted by position on the real line.
inline std::vector<IsolatedRealRoot> sturm_isolate(const std::vector<Rational>& g_in) {
    if (g_in.empty()) throw std::domain_error("sturm_isolate: zero polynomial");
    std::vector<Rational> g = sturm_detail::squarefree_part(g_in);
    std::vector<IsolatedRealRoot> out;
    if (uni::degree(g) < 1) return out;
    auto s = sturm_detail::chain(g);
    Rational b = sturm_detail::root_bound(g);
    sturm_detail::isolate_rec(g, s, -b, b, sturm_detail::count_open(s, -b, b), out);
    std::sort(out.begin(), out.end(), [](const IsolatedRealRoot& u, const IsolatedRealRoot& v) {
        return u.lo < v.lo;
    });
    return out;
}

inline std::vector<IsolatedRealRoot> sturm_isolate(const PolyQ& g) {
    Var v = g.uses(Var::x) && !g.uses(Var::y) ? Var::x : Var::y;
    return sturm_isolate(g.univariate(v));
}

// Shrink the root's interval below the given width (the root stays inside).
inline void refine_root(IsolatedRealRoot& r, const Rational& width) {
    while (r.hi - r.lo > width) {
        Rational mid = (r.lo + r.hi) / 2;
        int sm = sign(uni::eval(r.defining, mid));
        if (sm == 0) {
            // nudge off the root: the interval [mid, hi] has the root at its left end,
            // use a slightly smaller split point instead
            mid = (r.lo + mid) / 2;
            sm = sign(uni::eval(r.defining, mid));
            if (sm == 0) throw std::logic_error("refine_root: two roots in interval");
        }
        if (sm == sign(uni::eval(r.defining, r.lo))) r.lo = mid;
        else r.hi = mid;
    }
}

// Exact sign of f at the unique root of r.defining inside [r.lo, r.hi].
inline int sign_at_root(const std::vector<Rational>& f, const IsolatedRealRoot& r) {
    if (f.empty()) return 0;
    // f vanishes at the root iff gcd(f, defining) does, and the only root of
    // `defining` in the interval is ours
    std::vector<Rational> h = uni::gcd(f, r.defining);
    if (uni::degree(h) >= 1) {
        auto hs = sturm_detail::chain(h);
        if (sturm_detail::count_open(hs, r.lo, r.hi) > 0) return 0;
    }
    // refine until f has no root (hence constant sign) on the closed interval
    IsolatedRealRoot w = r;
    std::vector<Rational> fs = sturm_detail::squarefree_part(f);
    auto fchain = sturm_detail::chain(fs);
    for (;;) {
        int slo = sign(uni::eval(f, w.lo));
        int shi = sign(uni::eval(f, w.hi));
        if (slo != 0 && shi != 0 && sturm_detail::count_open(fchain, w.lo, w.hi) == 0) return slo;
        refine_root(w, (w.hi - w.lo) / 2);
    }
}

inline int sign_at_root(const PolyQ& f, const IsolatedRealRoot& r) {
    if (f.is_zero()) return 0;
    Var v = f.uses(Var::x) && !f.uses(Var::y) ? Var::x : Var::y;
    return sign_at_root(f.univariate(v), r);
}

} // namespace tamesym
