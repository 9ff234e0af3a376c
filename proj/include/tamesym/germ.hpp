#pragma once

// Curve germs at the origin: parametrizations for the smooth / node / cusp
// catalogue, and the decision whether a function is a q-th power in the local
// ring of the germ, only in its normalization, or not at all.

#include <optional>
#include <string>
#include <vector>

#include "tamesym/factor.hpp"
#include "tamesym/hensel.hpp"
#include "tamesym/series.hpp"

namespace tamesym {

enum class GermKind { smooth, node_branch, cusp };

template <class K>
struct BranchParametrization {
    GermKind kind = GermKind::smooth;
    PowerSeries<K> x_of_t;
    PowerSeries<K> y_of_t;
};

namespace germ_detail {

// Newton-solve g(x(t), t) = 0 for x(t) when dg/dx is a unit at the origin
// (or with the roles of the variables swapped).
template <class K>
PowerSeries<K> solve_implicit(const Polynomial<K>& g, Var solve_for, int N) {
    const K sample = g.witness();
    Polynomial<K> dg = g.derivative(solve_for);
    PowerSeries<K> t = PowerSeries<K>::identity(N, sample);
    PowerSeries<K> sol = PowerSeries<K>::zero(N, sample);
    int iters = 1;
    while ((1 << iters) < N + 1) ++iters;
    for (int i = 0; i <= iters; ++i) {
        PowerSeries<K> gx = solve_for == Var::x ? sol : t;
        PowerSeries<K> gy = solve_for == Var::x ? t : sol;
        PowerSeries<K> val = eval_at_series(g, gx, gy);
        PowerSeries<K> der = eval_at_series(dg, gx, gy);
        sol = sol - val * der.invert();
    }
    return sol;
}

} // namespace germ_detail

// Branch parametrizations of g = 0 at the origin for the supported catalogue:
// smooth germs (lowest form of degree 1), nodes y^2 - x^2*unit, and cusps
// y^2 - x^3*unit.
template <class K>
std::vector<BranchParametrization<K>> germ_parametrize(const Polynomial<K>& g, int N) {
    if (g.is_zero()) throw std::domain_error("germ_parametrize: zero germ");
    const K sample = g.witness();
    if (!tamesym::is_zero(g.eval(field_zero(sample), field_zero(sample))))
        throw std::domain_error("germ_parametrize: germ does not vanish at the origin");
    long low = g.order_at_origin();
    if (low == 1) {
        // smooth: solve for the variable whose linear coefficient is a unit
        K cx = g.coeff(1, 0, sample);
        BranchParametrization<K> b;
        b.kind = GermKind::smooth;
        if (!tamesym::is_zero(cx)) {
            b.x_of_t = germ_detail::solve_implicit(g, Var::x, N);
            b.y_of_t = PowerSeries<K>::identity(N, sample);
        } else {
            b.x_of_t = PowerSeries<K>::identity(N, sample);
            b.y_of_t = germ_detail::solve_implicit(g, Var::y, N);
        }
        return {b};
    }
    if (low == 2) {
        // require the shape c*(y^2 - G(x)) with ord G in {2, 3}
        std::vector<Polynomial<K>> yc = g.coefficients_in(Var::y);
        if (g.degree(Var::y) == 2 && yc[2].is_constant() && yc[1].is_zero() && !yc[0].is_zero()) {
            K c = yc[2].constant_value(sample);
            Polynomial<K> G = (-yc[0]).scaled(field_inv(c)); // g/c = y^2 - G(x)
            std::vector<K> Gd = G.univariate(Var::x);
            long ord = 0;
            while (ord <= uni::degree(Gd) && tamesym::is_zero(Gd[static_cast<std::size_t>(ord)])) ++ord;
            if (ord == 2) {
                // node: y = +- x sqrt(U), U = G/x^2 a unit
                std::vector<K> U(Gd.begin() + 2, Gd.end());
                PowerSeries<K> u = PowerSeries<K>::from_polynomial(U, N, sample);
                std::optional<K> r0 = qth_root_in_field(U[0], 2);
                if (!r0)
                    throw std::domain_error("germ_parametrize: node branches not defined over the base field "
                                            "(no square root of the leading unit)");
                PowerSeries<K> h = u.qth_root(2, *r0);
                PowerSeries<K> t = PowerSeries<K>::identity(N, sample);
                BranchParametrization<K> b1{GermKind::node_branch, t, (t * h).truncated(N)};
                BranchParametrization<K> b2{GermKind::node_branch, t, (-(t * h)).truncated(N)};
                return {b1, b2};
            }
            if (ord == 3) {
                // cusp: x = t^2, y = t^3 sqrt(U)(t^2), U = G/x^3 a unit
                std::vector<K> U(Gd.begin() + 3, Gd.end());
                PowerSeries<K> u = PowerSeries<K>::from_polynomial(U, (N + 1) / 2 + 1, sample);
                std::optional<K> r0 = qth_root_in_field(U[0], 2);
                if (!r0)
                    throw std::domain_error("germ_parametrize: cusp unit has no square root over the base field");
                PowerSeries<K> v = u.qth_root(2, *r0).inflated(2).truncated(N);
                PowerSeries<K> t2 = PowerSeries<K>::identity(N, sample).pow(2).truncated(N);
                PowerSeries<K> y = v.shifted(3).truncated(N);
                BranchParametrization<K> b{GermKind::cusp, t2, y};
                return {b};
            }
        }
    }
    throw std::domain_error("unsupported singularity; Newton-Puiseux out of scope");
}

enum class PowerStatus { power_in_local_ring, power_only_in_normalization, not_power };

inline const char* power_status_name(PowerStatus s) {
    switch (s) {
        case PowerStatus::power_in_local_ring: return "power_in_local_ring";
        case PowerStatus::power_only_in_normalization: return "power_only_in_normalization";
        case PowerStatus::not_power: return "not_power";
    }
    return "?";
}

template <class K>
struct GermPowerResult {
    PowerStatus status = PowerStatus::not_power;
    std::string witness; // human-readable reason for the two negative verdicts
    std::vector<BranchParametrization<K>> branches;
    std::vector<long> branch_orders;
};

// Decide whether f is a q-th power along the germ of g at the origin, and if
// so whether the root lives in the local ring itself or only in the
// normalization (cusp: a root with a t^1 term; node: branch values must agree
// at t = 0).
template <class K>
GermPowerResult<K> qth_power_in_germ_total(const Polynomial<K>& f, const Polynomial<K>& g, unsigned q,
                                           int N) {
    GermPowerResult<K> res;
    res.branches = germ_parametrize(g, 2 * N);
    std::vector<PowerSeries<K>> roots;
    std::vector<K> branch_constants;
    std::vector<long> orders;
    for (std::size_t i = 0; i < res.branches.size(); ++i) {
        const auto& br = res.branches[i];
        PowerSeries<K> u = eval_at_series(f, br.x_of_t, br.y_of_t);
        long o = u.order();
        if (o < 0) throw std::domain_error("qth_power_in_germ: f vanishes along the germ (non-coprime pair)");
        orders.push_back(o);
        res.branch_orders.push_back(o);
        if (o % static_cast<long>(q) != 0) {
            res.status = PowerStatus::not_power;
            res.witness = "branch " + std::to_string(i + 1) + ": pullback has t-order " + std::to_string(o) +
                          ", not divisible by " + std::to_string(q);
            return res;
        }
        PowerSeries<K> unit = u.shifted(static_cast<int>(-o));
        std::optional<K> r0 = qth_root_in_field(unit.at(0), q);
        if (!r0) {
            res.status = PowerStatus::not_power;
            res.witness = "branch " + std::to_string(i + 1) +
                          ": unit constant is not a q-th power in the residue field";
            return res;
        }
        PowerSeries<K> s = unit.qth_root(q, *r0).shifted(static_cast<int>(o / q));
        roots.push_back(s);
        branch_constants.push_back(s.at(0));
    }
    GermKind kind = res.branches[0].kind;
    if (kind == GermKind::smooth) {
        res.status = PowerStatus::power_in_local_ring;
        return res;
    }
    if (kind == GermKind::cusp) {
        // the local ring k[[t^2, t^3]] contains exactly the series without a t^1 term;
        // rescaling the root by a root of unity cannot remove that term
        if (tamesym::is_zero(roots[0].at(1))) {
            res.status = PowerStatus::power_in_local_ring;
        } else {
            res.status = PowerStatus::power_only_in_normalization;
            res.witness = "root has a t^1 term, not in the cusp local ring";
        }
        return res;
    }
    // node: values on the two branches must agree at the origin for some
    // compatible choice of roots, i.e. u1(0) = u2(0) (orders 0) or both orders positive
    if (orders[0] > 0 && orders[1] > 0) {
        res.status = PowerStatus::power_in_local_ring;
        return res;
    }
    if (orders[0] == 0 && orders[1] == 0) {
        PowerSeries<K> u1 = eval_at_series(f, res.branches[0].x_of_t, res.branches[0].y_of_t);
        PowerSeries<K> u2 = eval_at_series(f, res.branches[1].x_of_t, res.branches[1].y_of_t);
        if (u1.at(0) == u2.at(0)) {
            res.status = PowerStatus::power_in_local_ring;
            return res;
        }
    }
    res.status = PowerStatus::power_only_in_normalization;
    res.witness = "root values on the two node branches cannot be chosen to agree at t = 0";
    return res;
}

// Mixed-ring version: decompose the special fiber of the modulus and test each
// component; points of the fiber with multiplicity are handled through the
// germ catalogue after translation.
inline GermPowerResult<Fp> qth_power_in_germ(const PolyFp& f, const PolyFp& g, SeriesRing ring,
                                             unsigned q, int N, std::uint64_t seed) {
    if (ring == SeriesRing::total_degree) return qth_power_in_germ_total(f, g, q, N);
    Var main = ring == SeriesRing::poly_x_adic_y ? Var::x : Var::y;
    Var ideal = other(main);
    const Fp sample = g.witness();
    // modulus equal to (a constant multiple of) the adic variable: the quotient
    // collapses onto series in the other variable
    if (g.degree(ideal) == 1 && g.degree(main) == 0 && tamesym::is_zero(g.eval(field_zero(sample), field_zero(sample)))) {
        PolyFp f0 = f.substitute(ideal, PolyFp());
        GermPowerResult<Fp> res;
        if (f0.is_zero()) throw std::domain_error("qth_power_in_germ: f vanishes along the germ (non-coprime pair)");
        PowerSeries<Fp> u = PowerSeries<Fp>::from_polynomial(
            f0.is_constant() ? std::vector<Fp>{f0.constant_value(sample)} : f0.univariate(main), N, sample);
        std::optional<PowerSeries<Fp>> root = u.qth_root_general(q);
        if (root) {
            res.status = PowerStatus::power_in_local_ring;
        } else {
            res.status = PowerStatus::not_power;
            long o = u.order();
            res.witness = o % static_cast<long>(q) != 0
                              ? "reduction has order " + std::to_string(o) + ", not divisible by " + std::to_string(q)
                              : "unit constant of the reduction is not a q-th power in F_p";
        }
        return res;
    }
    PolyFp base = g.substitute(ideal, PolyFp());
    GermPowerResult<Fp> res;
    if (base.is_constant()) {
        if (base.is_zero())
            throw std::domain_error("qth_power_in_germ: modulus divisible by the adic variable");
        // the modulus is a unit in this ring
        res.status = PowerStatus::power_in_local_ring;
        return res;
    }
    std::vector<Polynomial<Fp>> gc = g.coefficients_in(main);
    if (!gc.back().is_constant())
        throw std::domain_error("qth_power_in_germ: leading structure not monic in the lifted variable");
    for (const auto& [pi, mult] : factor_fp(base, seed).factors) {
        if (pi.degree(main) != 1)
            throw std::domain_error("qth_power_in_germ: fiber component not rational over F_p");
        // translate the component to the origin and run the germ catalogue there
        Fp root = -pi.univariate(main)[0];
        PolyFp shift = Polynomial<Fp>::variable(main, field_one(sample)) + PolyFp::constant(root);
        PolyFp gt = g.substitute(main, shift);
        PolyFp ft = f.substitute(main, shift);
        GermPowerResult<Fp> local = qth_power_in_germ_total(ft, gt, q, N);
        if (local.status != PowerStatus::power_in_local_ring) {
            local.witness = "fiber component at " + std::string(1, var_name(main)) + " = " +
                            std::to_string(root.value()) + ": " + local.witness;
            return local;
        }
    }
    res.status = PowerStatus::power_in_local_ring;
    return res;
}

} // namespace tamesym
