#include "focaljet/coeff.hpp"

#include <sstream>

namespace focaljet {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) { canonical(); }
Rational::Rational(long num, long den) : v_(Int(num), Int(den)) { canonical(); }

void Rational::canonical() {
    if (sgn(mpq_class(v_.get_den())) == 0) throw std::domain_error("zero divisor");
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("zero divisor");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::mod_two() const {
    Rational half = *this / Rational(2);
    return *this - Rational(half.floor()) * Rational(2);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_.get_num() << "/" << v_.get_den();
    return os.str();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("bad rational literal");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("bad rational literal");
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("bad rational literal");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    return Rational(Int(num), Int(den));
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

GaussRational GaussRational::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("zero divisor");
    return GaussRational(re / n, -im / n);
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

GaussRational GaussRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussRational r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string GaussRational::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + " i";
    return re.str() + (im.sign() < 0 ? "-" : "+") + im.abs().str() + " i";
}

GaussRational GaussRational::parse(const std::string& s) {
    std::string t = s;
    while (!t.empty() && t.back() == ' ') t.pop_back();
    size_t b = 0;
    while (b < t.size() && t[b] == ' ') ++b;
    t = t.substr(b);
    if (t.empty()) throw std::invalid_argument("empty gaussian rational");
    bool has_i = t.back() == 'i';
    if (has_i) {
        t.pop_back();
        while (!t.empty() && t.back() == ' ') t.pop_back();
    }
    if (!has_i) return GaussRational(Rational::parse(t));
    // split "re+im" / "re-im"; signs inside a rational only occur at its front
    for (size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && isdigit(static_cast<unsigned char>(t[i - 1]))) {
            Rational re = Rational::parse(t.substr(0, i));
            Rational im = Rational::parse(t.substr(i + 1));
            if (t[i] == '-') im = -im;
            return GaussRational(re, im);
        }
    }
    return GaussRational(Rational(0), Rational::parse(t));
}

PiCoeff PiCoeff::pi_term(unsigned k, GaussRational c) {
    PiCoeff p;
    p.set(k, c);
    return p;
}

bool PiCoeff::is_real() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

bool PiCoeff::is_pi_free() const {
    for (const auto& [k, c] : terms_)
        if (k != 0) return false;
    return true;
}

GaussRational PiCoeff::part(unsigned k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussRational() : it->second;
}

void PiCoeff::set(unsigned k, const GaussRational& c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

PiCoeff PiCoeff::operator-() const {
    PiCoeff r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

PiCoeff& PiCoeff::operator+=(const PiCoeff& o) {
    for (const auto& [k, c] : o.terms_) set(k, part(k) + c);
    return *this;
}

PiCoeff& PiCoeff::operator-=(const PiCoeff& o) {
    for (const auto& [k, c] : o.terms_) set(k, part(k) - c);
    return *this;
}

PiCoeff& PiCoeff::operator*=(const PiCoeff& o) {
    PiCoeff r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.set(ka + kb, r.part(ka + kb) + ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

PiCoeff& PiCoeff::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

PiCoeff PiCoeff::conj() const {
    PiCoeff r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c.conj();
    return r;
}

PiCoeff PiCoeff::div(const Rational& r) const {
    if (r.is_zero()) throw std::domain_error("zero divisor");
    return *this * GaussRational(r.inverse());
}

PiCoeff PiCoeff::div(const GaussRational& c) const { return *this * c.inverse(); }

std::string PiCoeff::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (k == 1)
            s += " pi";
        else if (k > 1)
            s += " pi^" + std::to_string(k);
    }
    return s;
}

}  // namespace focaljet
