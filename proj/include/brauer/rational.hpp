// Exact rational numbers over GMP, kept canonical (gcd 1, positive denominator).
#pragma once

#include <gmp.h>
#include <cstdint>
#include <string>
#include <iosfwd>
#include <stdexcept>
#include <utility>

namespace brauer {

class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, n, d);
        mpq_canonicalize(v_);
    }
    explicit Rational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0) {
            mpq_clear(v_);
            throw std::invalid_argument("Rational: bad literal '" + s + "'");
        }
        mpq_canonicalize(v_);
    }
    Rational(const Rational& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rational(Rational&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    Rational& operator=(const Rational& o) { if (this != &o) mpq_set(v_, o.v_); return *this; }
    Rational& operator=(Rational&& o) noexcept { if (this != &o) mpq_swap(v_, o.v_); return *this; }
    ~Rational() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    int sgn() const { return mpq_sgn(v_); }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }

    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; mpq_neg(r.v_, v_); return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    Rational abs() const { Rational r; mpq_abs(r.v_, v_); return r; }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }

    std::string num_str() const { return mpz_str(mpq_numref(v_)); }
    std::string den_str() const { return mpz_str(mpq_denref(v_)); }
    std::string str() const {
        std::string s = num_str();
        if (!is_integer()) s += "/" + den_str();
        return s;
    }

    // Exact square root; returns false if this is negative or not a perfect square.
    bool sqrt_exact(Rational& out) const {
        if (sgn() < 0) return false;
        mpz_t rn, rd;
        mpz_init(rn); mpz_init(rd);
        bool ok = mpz_perfect_square_p(mpq_numref(v_)) && mpz_perfect_square_p(mpq_denref(v_));
        if (ok) {
            mpz_sqrt(rn, mpq_numref(v_));
            mpz_sqrt(rd, mpq_denref(v_));
            mpq_set_num(out.v_, rn);
            mpq_set_den(out.v_, rd);
            mpq_canonicalize(out.v_);
        }
        mpz_clear(rn); mpz_clear(rd);
        return ok;
    }

    size_t hash() const {
        // cheap deterministic hash from limb data
        auto h = [](mpz_srcptr z, size_t seed) {
            size_t acc = seed * 1099511628211ull + (size_t)mpz_sgn(z);
            for (size_t i = 0; i < mpz_size(z); ++i)
                acc = acc * 1099511628211ull + (size_t)mpz_getlimbn(z, i);
            return acc;
        };
        return h(mpq_denref(v_), h(mpq_numref(v_), 14695981039346656037ull));
    }

    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

private:
    static std::string mpz_str(mpz_srcptr z) {
        char* c = mpz_get_str(nullptr, 10, z);
        std::string s(c);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(c, s.size() + 1);
        return s;
    }
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// gcd of |a|,|b| as a nonnegative rational on integers; used for content extraction
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    // gcd(p/q, r/s) = gcd(p*s, r*q)/(q*s); for content purposes combine num-gcd/den-lcm
    mpz_t g, l;
    mpz_init(g); mpz_init(l);
    mpz_gcd(g, mpq_numref(a.raw()), mpq_numref(b.raw()));
    mpz_lcm(l, mpq_denref(a.raw()), mpq_denref(b.raw()));
    Rational r;
    mpq_set_num(r.raw(), g);
    mpq_set_den(r.raw(), l);
    mpq_canonicalize(r.raw());
    mpz_clear(g); mpz_clear(l);
    return r;
}

} // namespace brauer
