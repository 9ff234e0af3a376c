#pragma once

// Prime field F_p with a runtime modulus. Elements carry their modulus so
// mixed-field arithmetic is caught immediately.

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "tamesym/numeric.hpp"

namespace tamesym {

class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::uint64_t p) : p_(p) {
        if (p < 2) throw std::domain_error("Fp: modulus must be >= 2");
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(m);
    }
    Fp(const Integer& v, std::uint64_t p) : p_(p) {
        if (p < 2) throw std::domain_error("Fp: modulus must be >= 2");
        Integer m = v % Integer(static_cast<unsigned long>(p));
        if (sign(m) < 0) m += Integer(static_cast<unsigned long>(p));
        v_ = m.get_ui();
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp::raw(mulmod_u64(a.v_, b.v_, a.p_), a.p_);
    }
    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const { return Fp::raw(powmod_u64(v_, e, p_), p_); }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // p prime, so a^(p-2) = a^-1
        return pow(p_ - 2);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::domain_error("Fp: mixed moduli");
    }

    std::uint64_t v_, p_;
};

// Coefficient-field shims used by the generic polynomial/series code.
inline Fp field_zero(const Fp& sample) { return Fp::raw(0, sample.modulus()); }
inline Fp field_one(const Fp& sample) { return Fp::raw(1 % sample.modulus(), sample.modulus()); }
inline Fp field_inv(const Fp& a) { return a.inv(); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp field_from_int(long n, const Fp& sample) { return Fp(n, sample.modulus()); }

inline Rational field_zero(const Rational&) { return Rational(0); }
inline Rational field_one(const Rational&) { return Rational(1); }
inline Rational field_inv(const Rational& a) {
    if (sign(a) == 0) throw std::domain_error("Rational: division by zero");
    return Rational(1) / a;
}
inline bool is_zero(const Rational& a) { return sign(a) == 0; }
inline Rational field_from_int(long n, const Rational&) { return Rational(n); }

// True iff a is a q-th power in F_p (0 counts; if q does not divide p-1 the
// q-th power map is a bijection).
inline bool is_qth_power_fp(const Fp& a, std::uint64_t q) {
    if (a.is_zero()) return true;
    std::uint64_t p = a.modulus();
    if ((p - 1) % q != 0) return true;
    return a.pow((p - 1) / q).value() == 1;
}

// Smallest element of F_p^* of multiplicative order exactly q (q prime, q | p-1).
inline Fp find_qth_root_of_unity(std::uint64_t p, std::uint64_t q) {
    if (!is_prime_u64(p) || !is_prime_u64(q)) throw std::domain_error("find_qth_root_of_unity: p, q must be prime");
    if ((p - 1) % q != 0) throw std::domain_error("no primitive q-th root of unity in F_p");
    for (std::uint64_t c = 2; c < p; ++c) {
        if (powmod_u64(c, q, p) == 1) return Fp::raw(c, p);
    }
    throw std::logic_error("find_qth_root_of_unity: search failed");
}

// Witness that F_p carries symbol algebras of degree q: a primitive q-th root
// of unity, with its defining data.
struct RootOfUnityContext {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    Fp zeta;

    static RootOfUnityContext make(std::uint64_t p, std::uint64_t q) {
        return {p, q, find_qth_root_of_unity(p, q)};
    }
};

// Some q-th root of a in F_p, by exhaustive search (fields here are small).
inline Fp qth_root_fp(const Fp& a, std::uint64_t q) {
    std::uint64_t p = a.modulus();
    if (p > 2000000) throw std::domain_error("qth_root_fp: modulus too large for search");
    for (std::uint64_t c = 0; c < p; ++c) {
        if (powmod_u64(c, q, p) == a.value()) return Fp::raw(c, p);
    }
    throw std::domain_error("qth_root_fp: no q-th root exists");
}

} // namespace tamesym
