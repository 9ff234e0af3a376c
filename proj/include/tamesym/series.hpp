#pragma once

// Truncated power-series arithmetic: dense univariate series k[[t]] with
// precision tracking, bivariate truncated series in the three rings the
// library works in (k[[x,y]], k[x][[y]], k[y][[x]]), and Newton iterations
// for inverses and q-th roots.

#include <map>
#include <optional>
#include <vector>

#include "tamesym/polynomial.hpp"

namespace tamesym {

inline std::optional<Fp> qth_root_in_field(const Fp& a, unsigned q) {
    if (!is_qth_power_fp(a, q)) return std::nullopt;
    return qth_root_fp(a, q);
}

inline std::optional<Rational> qth_root_in_field(const Rational& a, unsigned q) {
    if (sign(a) == 0) return Rational(0);
    if (q % 2 == 0 && sign(a) < 0) return std::nullopt;
    Integer rn, rd;
    Integer an = abs(numerator(a)), ad = denominator(a);
    if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), q) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), ad.get_mpz_t(), q) == 0) return std::nullopt;
    Rational r(sign(a) < 0 ? Integer(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

// --- univariate ------------------------------------------------------------

template <class K>
class PowerSeries {
public:
    PowerSeries() : prec_(0), zero_() {}
    PowerSeries(std::vector<K> coeffs, int prec, const K& sample)
        : c_(std::move(coeffs)), prec_(prec), zero_(field_zero(sample)) {
        truncate_to(prec_);
    }
    static PowerSeries zero(int prec, const K& sample) { return PowerSeries({}, prec, sample); }
    static PowerSeries constant(const K& v, int prec) { return PowerSeries({v}, prec, v); }
    static PowerSeries identity(int prec, const K& sample) {
        return PowerSeries({field_zero(sample), field_one(sample)}, prec, sample);
    }
    static PowerSeries from_polynomial(const std::vector<K>& dense, int prec, const K& sample) {
        return PowerSeries(dense, prec, sample);
    }

    int precision() const { return prec_; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& zero_sample() const { return zero_; }

    K at(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }

    bool is_zero() const { return c_.empty(); }

    // order of vanishing; -1 when zero to the stated precision
    long order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!tamesym::is_zero(c_[i])) return static_cast<long>(i);
        return -1;
    }

    PowerSeries truncated(int n) const {
        PowerSeries r = *this;
        r.prec_ = std::min(prec_, n);
        r.truncate_to(r.prec_);
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        int p = std::min(a.prec_, b.prec_);
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = K(a.at(i) + b.at(i));
        return PowerSeries(std::move(c), p, a.zero_);
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x = K(-x);
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        int p = std::min(a.prec_, b.prec_);
        std::vector<K> c(std::min<std::size_t>(a.c_.size() + b.c_.size(), static_cast<std::size_t>(p)),
                         a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (tamesym::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size() && i + j < c.size(); ++j)
                c[i + j] = K(c[i + j] + a.c_[i] * b.c_[j]);
        }
        return PowerSeries(std::move(c), p, a.zero_);
    }
    PowerSeries scaled(const K& s) const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x = K(x * s);
        return r;
    }

    // multiply by t^k (precision window shifts with it)
    PowerSeries shifted(int k) const {
        if (k == 0) return *this;
        if (k < 0) {
            if (order() >= 0 && order() < -k) throw std::domain_error("series shift: negative order");
            std::vector<K> c(c_.begin() + std::min<std::size_t>(static_cast<std::size_t>(-k), c_.size()),
                             c_.end());
            return PowerSeries(std::move(c), prec_ + k, zero_);
        }
        std::vector<K> c(static_cast<std::size_t>(k), zero_);
        c.insert(c.end(), c_.begin(), c_.end());
        return PowerSeries(std::move(c), prec_ + k, zero_);
    }

    // substitute t -> t^k
    PowerSeries inflated(int k) const {
        std::vector<K> c;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c.resize(i * static_cast<std::size_t>(k) + 1, zero_);
            c[i * k] = c_[i];
        }
        return PowerSeries(std::move(c), prec_ * k, zero_);
    }

    PowerSeries pow(unsigned e) const {
        PowerSeries acc = constant(field_one(zero_), prec_);
        for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        if (a.prec_ != b.prec_) return false;
        for (std::size_t i = 0; i < static_cast<std::size_t>(a.prec_); ++i)
            if (!(a.at(i) == b.at(i))) return false;
        return true;
    }

    // Newton inversion; the constant term must be a unit.
    PowerSeries invert() const {
        if (c_.empty() || tamesym::is_zero(c_[0])) throw std::domain_error("series_invert: non-unit input");
        PowerSeries v = constant(field_inv(c_[0]), 1);
        int target = prec_;
        while (v.prec_ < target) {
            int np = std::min(2 * v.prec_, target);
            PowerSeries u = truncated(np);
            v.prec_ = np;
            PowerSeries two = constant(field_from_int(2, zero_), np);
            v = (v * (two - u * v)).truncated(np);
        }
        return v.truncated(target);
    }

    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.invert(); }

    // Newton/Hensel q-th root from an initial root r0 of the constant term;
    // q must be invertible in k.
    PowerSeries qth_root(unsigned q, const K& r0) const {
        if (c_.empty() || tamesym::is_zero(c_[0])) throw std::domain_error("series_qth_root: non-unit input");
        K check = r0;
        for (unsigned i = 1; i < q; ++i) check = K(check * r0);
        if (!(check == c_[0])) throw std::domain_error("series_qth_root: r0 is not a q-th root of the constant term");
        K qk = field_from_int(static_cast<long>(q), zero_);
        if (tamesym::is_zero(qk)) throw std::domain_error("series_qth_root: q not invertible in the field");
        K qinv = field_inv(qk);
        PowerSeries s = constant(r0, 1);
        int target = prec_;
        while (s.precision() < target) {
            int np = std::min(2 * s.precision(), target);
            PowerSeries u = truncated(np);
            s.prec_ = np;
            // s <- s - (s^q - u) / (q s^(q-1))
            PowerSeries sq1 = s.pow(q - 1);
            PowerSeries num = sq1 * s - u;
            s = (s - num * sq1.invert().scaled(qinv)).truncated(np);
        }
        return s.truncated(target);
    }

    // q-th root of a series of arbitrary order: ord must be divisible by q and
    // the lowest coefficient must have a q-th root in k.
    std::optional<PowerSeries> qth_root_general(unsigned q) const {
        long o = order();
        if (o < 0) return zero(prec_ / static_cast<int>(q) + 1, zero_);
        if (o % static_cast<long>(q) != 0) return std::nullopt;
        PowerSeries u = shifted(static_cast<int>(-o));
        std::optional<K> r0 = qth_root_in_field(u.c_[0], q);
        if (!r0) return std::nullopt;
        return u.qth_root(q, *r0).shifted(static_cast<int>(o / q));
    }

private:
    void truncate_to(int n) {
        if (n < 0) n = 0;
        if (c_.size() > static_cast<std::size_t>(n)) c_.resize(static_cast<std::size_t>(n), zero_);
        while (!c_.empty() && tamesym::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
    int prec_;
    K zero_;
};

// --- bivariate -------------------------------------------------------------

enum class SeriesRing {
    total_degree, // k[[x,y]]: truncate at total degree N
    poly_x_adic_y, // k[x][[y]]: truncate at y^N, x free
    poly_y_adic_x, // k[y][[x]]: truncate at x^N, y free
};

inline const char* ring_name(SeriesRing r) {
    switch (r) {
        case SeriesRing::total_degree: return "k[[x,y]]";
        case SeriesRing::poly_x_adic_y: return "k[x][[y]]";
        case SeriesRing::poly_y_adic_x: return "k[y][[x]]";
    }
    return "?";
}

template <class K>
class BiSeries {
public:
    using Key = std::pair<int, int>; // (x exponent, y exponent)

    BiSeries() : ring_(SeriesRing::total_degree), prec_(0), zero_() {}
    BiSeries(SeriesRing ring, int prec, const K& sample)
        : ring_(ring), prec_(prec), zero_(field_zero(sample)) {}

    static BiSeries from_polynomial(const Polynomial<K>& p, SeriesRing ring, int prec, const K& sample) {
        BiSeries r(ring, prec, sample);
        for (const auto& [k, c] : p.terms()) r.add(k.first, k.second, c);
        return r;
    }

    SeriesRing ring() const { return ring_; }
    int precision() const { return prec_; }
    const std::map<Key, K>& terms() const { return terms_; }
    const K& zero_sample() const { return zero_; }

    bool keeps(int i, int j) const {
        switch (ring_) {
            case SeriesRing::total_degree: return i + j < prec_;
            case SeriesRing::poly_x_adic_y: return j < prec_;
            case SeriesRing::poly_y_adic_x: return i < prec_;
        }
        return false;
    }

    void add(int i, int j, const K& c) {
        if (tamesym::is_zero(c) || !keeps(i, j)) return;
        auto it = terms_.find({i, j});
        if (it == terms_.end()) terms_.emplace(Key{i, j}, c);
        else {
            it->second = K(it->second + c);
            if (tamesym::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero_to_precision() const { return terms_.empty(); }

    K constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? zero_ : it->second;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r = a.with_precision(std::min(a.prec_, b.prec_));
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        BiSeries r = a.with_precision(std::min(a.prec_, b.prec_));
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, K(-c));
        return r;
    }
    BiSeries operator-() const {
        BiSeries r(ring_, prec_, zero_);
        for (const auto& [k, c] : terms_) r.terms_[k] = K(-c);
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries r(a.ring_, std::min(a.prec_, b.prec_), a.zero_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add(ka.first + kb.first, ka.second + kb.second, K(ca * cb));
        return r;
    }

    BiSeries pow(unsigned e) const {
        BiSeries acc(ring_, prec_, zero_);
        acc.add(0, 0, field_one(zero_));
        for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    BiSeries with_precision(int p) const {
        BiSeries r(ring_, p, zero_);
        for (const auto& [k, c] : terms_) r.add(k.first, k.second, c);
        return r;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.ring_ == b.ring_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

    // The unit group of the ring: constant term of the adic expansion must be
    // invertible (a nonzero constant; in the mixed rings a polynomial
    // coefficient that is not constant is not a unit).
    BiSeries invert() const {
        for (const auto& [k, c] : terms_) {
            bool adic_constant = ring_ == SeriesRing::total_degree ? (k.first == 0 && k.second == 0)
                                 : ring_ == SeriesRing::poly_x_adic_y ? k.second == 0
                                                                      : k.first == 0;
            if (adic_constant && !(k.first == 0 && k.second == 0))
                throw std::domain_error("series_invert: leading coefficient is not a unit in the ring");
        }
        K c0 = constant_term();
        if (tamesym::is_zero(c0)) throw std::domain_error("series_invert: non-unit input");
        BiSeries v(ring_, prec_, zero_);
        v.add(0, 0, field_inv(c0));
        BiSeries two(ring_, prec_, zero_);
        two.add(0, 0, field_from_int(2, zero_));
        // Newton: v <- v(2 - uv); iterate enough times to reach the precision
        int steps = 1;
        while ((1 << steps) < prec_ + 1) ++steps;
        for (int i = 0; i < steps; ++i) v = v * (two - (*this) * v);
        return v;
    }

    BiSeries qth_root(unsigned q, const K& r0) const {
        K check = r0;
        for (unsigned i = 1; i < q; ++i) check = K(check * r0);
        if (!(check == constant_term()))
            throw std::domain_error("series_qth_root: r0 is not a q-th root of the constant term");
        K qk = field_from_int(static_cast<long>(q), zero_);
        if (tamesym::is_zero(qk)) throw std::domain_error("series_qth_root: q not invertible");
        K qinv = field_inv(qk);
        BiSeries s(ring_, prec_, zero_);
        s.add(0, 0, r0);
        int steps = 1;
        while ((1 << steps) < prec_ + 1) ++steps;
        for (int i = 0; i < steps; ++i) {
            BiSeries sq1 = s.pow(q - 1);
            BiSeries num = sq1 * s - (*this);
            s = s - num * sq1.invert() * scalar(qinv);
        }
        return s;
    }

    BiSeries scalar(const K& v) const {
        BiSeries r(ring_, prec_, zero_);
        r.add(0, 0, v);
        return r;
    }

private:
    SeriesRing ring_;
    int prec_;
    K zero_;
    std::map<Key, K> terms_;
};

// Evaluate a polynomial at a pair of univariate series (a germ parametrization).
template <class K>
PowerSeries<K> eval_at_series(const Polynomial<K>& p, const PowerSeries<K>& sx, const PowerSeries<K>& sy) {
    int prec = std::min(sx.precision(), sy.precision());
    const K zero = sx.zero_sample();
    PowerSeries<K> acc = PowerSeries<K>::zero(prec, zero);
    // Horner in y, inner Horner in x
    long dy = std::max(0l, p.degree(Var::y));
    std::vector<Polynomial<K>> ycoeffs = p.is_zero() ? std::vector<Polynomial<K>>() : p.coefficients_in(Var::y);
    for (long j = dy; j >= 0; --j) {
        acc = acc * sy;
        if (static_cast<std::size_t>(j) < ycoeffs.size() && !ycoeffs[j].is_zero()) {
            std::vector<K> xc = ycoeffs[j].univariate(Var::x);
            PowerSeries<K> inner = PowerSeries<K>::zero(prec, zero);
            for (std::size_t i = xc.size(); i-- > 0;) {
                inner = inner * sx;
                inner = inner + PowerSeries<K>::constant(xc[i], prec);
            }
            acc = acc + inner;
        }
    }
    return acc;
}

} // namespace tamesym
