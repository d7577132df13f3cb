#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace focaljet {

using Int = mpz_class;

/// Exact rational scalar, always canonical: gcd(|num|, den) = 1, den > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    Int numerator() const { return Int(v_.get_num()); }
    Int denominator() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    /// Multiplicative inverse; throws on zero.
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    Int floor() const;
    /// Representative of this modulo 2Z, lying in [0, 2).
    Rational mod_two() const;

    std::string str() const;  // "n/d"
    static Rational parse(const std::string& s);

private:
    void canonical();
    mpq_class v_;
};

/// Gaussian rational re + im*i, componentwise canonical.
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(long n) : re(n) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational unit_i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRational conj() const { return GaussRational(re, -im); }
    /// |z|^2 as an exact rational.
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return GaussRational(-re, -im); }
    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    /// Multiplicative inverse; throws "zero divisor" on zero.
    GaussRational inverse() const;
    GaussRational pow(long e) const;

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::string str() const;  // "n/d", "n/d i", or "n/d+n/d i"
    static GaussRational parse(const std::string& s);
};

/// Polynomial in the formal symbol pi with GaussRational coefficients.
/// pi is transcendental here: nothing ever substitutes a value for it, so
/// the quotient structures modulo (2 pi X)Z downstream stay decidable.
class PiCoeff {
public:
    PiCoeff() = default;
    PiCoeff(const Rational& r) { set(0, GaussRational(r)); }
    PiCoeff(const GaussRational& g) { set(0, g); }
    PiCoeff(long n) { set(0, GaussRational(n)); }

    /// c * pi^k
    static PiCoeff pi_term(unsigned k, GaussRational c = GaussRational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    bool is_pi_free() const;

    /// Coefficient of pi^k (zero if absent).
    GaussRational part(unsigned k) const;
    void set(unsigned k, const GaussRational& c);

    const std::map<unsigned, GaussRational>& terms() const { return terms_; }

    PiCoeff operator-() const;
    PiCoeff& operator+=(const PiCoeff& o);
    PiCoeff& operator-=(const PiCoeff& o);
    PiCoeff& operator*=(const PiCoeff& o);
    PiCoeff& operator*=(const GaussRational& c);

    friend PiCoeff operator+(PiCoeff a, const PiCoeff& b) { return a += b; }
    friend PiCoeff operator-(PiCoeff a, const PiCoeff& b) { return a -= b; }
    friend PiCoeff operator*(PiCoeff a, const PiCoeff& b) { return a *= b; }
    friend PiCoeff operator*(PiCoeff a, const GaussRational& c) { return a *= c; }

    PiCoeff conj() const;
    /// Exact division by a scalar; throws "zero divisor" on zero.
    PiCoeff div(const Rational& r) const;
    PiCoeff div(const GaussRational& c) const;

    friend bool operator==(const PiCoeff& a, const PiCoeff& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiCoeff& a, const PiCoeff& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<unsigned, GaussRational> terms_;
};

}  // namespace focaljet
