#pragma once

// F_{p^d} = F_p[t]/(g), g monic irreducible; dense representatives of degree < d.

#include <cstdint>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tamesym/fp.hpp"

namespace tamesym {

struct FqContext {
    std::uint64_t p;
    std::vector<std::uint64_t> modulus; // monic: modulus.back() == 1, size d+1

    std::size_t degree() const { return modulus.size() - 1; }
    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < degree(); ++i) {
            if (n > UINT64_MAX / p) throw std::domain_error("Fq: field order exceeds 64 bits");
            n *= p;
        }
        return n;
    }
};

class Fq {
public:
    Fq() = default;
    Fq(std::shared_ptr<const FqContext> ctx, std::vector<std::uint64_t> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        reduce_mod_modulus();
        trim();
    }

    static Fq from_scalar(std::shared_ptr<const FqContext> ctx, std::uint64_t v) {
        std::vector<std::uint64_t> c;
        if (v % ctx->p != 0) c.push_back(v % ctx->p);
        return Fq(std::move(ctx), std::move(c));
    }

    const std::shared_ptr<const FqContext>& context() const { return ctx_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    friend bool operator==(const Fq& a, const Fq& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

    friend Fq operator+(const Fq& a, const Fq& b) {
        std::uint64_t p = a.ctx_->p;
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = (r[i] + b.c_[i]) % p;
        Fq out;
        out.ctx_ = a.ctx_;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
    friend Fq operator-(const Fq& a, const Fq& b) { return a + (-b); }
    Fq operator-() const {
        Fq out = *this;
        for (auto& x : out.c_) x = x == 0 ? 0 : ctx_->p - x;
        return out;
    }
    friend Fq operator*(const Fq& a, const Fq& b) {
        if (a.is_zero() || b.is_zero()) {
            Fq out;
            out.ctx_ = a.ctx_ ? a.ctx_ : b.ctx_;
            return out;
        }
        std::uint64_t p = a.ctx_->p;
        std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = (r[i + j] + mulmod_u64(a.c_[i], b.c_[j], p)) % p;
        Fq out;
        out.ctx_ = a.ctx_;
        out.c_ = std::move(r);
        out.reduce_mod_modulus();
        out.trim();
        return out;
    }

    Fq pow(std::uint64_t e) const {
        Fq acc = from_scalar(ctx_, 1), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Fq inv() const {
        if (is_zero()) throw std::domain_error("Fq: division by zero");
        return pow(ctx_->order() - 2);
    }
    friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inv(); }

    // Norm down to F_p: product of Galois conjugates, i.e. a^((q-1)/(p-1)) for units.
    Fp norm_to_prime_field() const {
        std::uint64_t p = ctx_->p;
        if (is_zero()) return Fp::raw(0, p);
        std::uint64_t e = (ctx_->order() - 1) / (p - 1);
        Fq n = pow(e);
        if (n.c_.size() != 1) throw std::logic_error("Fq::norm: value not in prime field");
        return Fp::raw(n.c_[0], p);
    }

    friend std::ostream& operator<<(std::ostream& os, const Fq& a) {
        if (a.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || a.c_[i] != 1) os << a.c_[i];
            if (i > 0) {
                if (a.c_[i] != 1) os << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void reduce_mod_modulus() {
        if (!ctx_) return;
        std::uint64_t p = ctx_->p;
        std::size_t d = ctx_->degree();
        for (auto& x : c_) x %= p;
        while (c_.size() > d) {
            std::uint64_t lead = c_.back();
            std::size_t k = c_.size() - 1 - d;
            c_.pop_back();
            if (lead == 0) continue;
            for (std::size_t i = 0; i < d; ++i) {
                std::uint64_t sub = mulmod_u64(lead, ctx_->modulus[i], p);
                c_[k + i] = (c_[k + i] + p - sub) % p;
            }
        }
    }

    std::shared_ptr<const FqContext> ctx_;
    std::vector<std::uint64_t> c_;
};

// Euler-criterion q-th power test in F_{p^d}; a = 0 counts, and the map is a
// bijection when q does not divide p^d - 1.
inline bool is_qth_power_fq(const Fq& a, std::uint64_t q) {
    if (a.is_zero()) return true;
    std::uint64_t n = a.context()->order();
    if ((n - 1) % q != 0) return true;
    return a.pow((n - 1) / q).is_one();
}

} // namespace tamesym
