#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "focaljet/coeff.hpp"

namespace focaljet {

/// First-order invariant value: a Gaussian rational strictly inside the unit disk.
class Mu {
public:
    Mu() = default;  // mu = 0
    explicit Mu(GaussRational v);

    const GaussRational& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    /// Z_mu = alpha() Z + beta() Zbar.
    GaussRational alpha() const;
    GaussRational beta() const;

    friend bool operator==(const Mu& a, const Mu& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Mu& a, const Mu& b) { return !(a == b); }

private:
    GaussRational v_;
};

/// Monomial basis of a jet: real (X, Y), complex (Z, Zbar), or (Z_mu, Zbar_mu).
/// Zmu with mu = 0 normalizes to Z.
struct Basis {
    enum class Kind { xy, z, zmu };
    Kind kind = Kind::xy;
    GaussRational mu;

    static Basis XY() { return {Kind::xy, GaussRational()}; }
    static Basis Z() { return {Kind::z, GaussRational()}; }
    static Basis Zmu(const Mu& m) {
        return m.is_zero() ? Z() : Basis{Kind::zmu, m.value()};
    }

    bool is_complex_pair() const { return kind != Kind::xy; }

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.kind == b.kind && a.mu == b.mu;
    }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

    std::string str() const;
};

/// Formal power series in two variables truncated at a fixed total degree.
/// Coefficients live in the pi-polynomial ring; only nonzero terms are stored.
class SmoothJet {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, PiCoeff>;

    SmoothJet() : order_(1), basis_(Basis::XY()) {}
    SmoothJet(int order, Basis basis);

    static SmoothJet monomial(int order, Basis basis, int p, int q, PiCoeff c);
    /// First/second variable of the given basis as a jet.
    static SmoothJet var_first(int order, Basis basis);
    static SmoothJet var_second(int order, Basis basis);

    int order() const { return order_; }
    const Basis& basis() const { return basis_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    PiCoeff coeff(int p, int q) const;
    void set_coeff(int p, int q, const PiCoeff& c);

    PiCoeff constant_term() const { return coeff(0, 0); }
    bool has_constant_term() const { return !coeff(0, 0).is_zero(); }

    SmoothJet operator-() const;
    SmoothJet& operator+=(const SmoothJet& o);
    SmoothJet& operator-=(const SmoothJet& o);
    friend SmoothJet operator+(SmoothJet a, const SmoothJet& b) { return a += b; }
    friend SmoothJet operator-(SmoothJet a, const SmoothJet& b) { return a -= b; }

    SmoothJet scaled(const PiCoeff& c) const;
    SmoothJet scaled(const GaussRational& c) const;

    /// Product truncated at this jet's order.
    friend SmoothJet operator*(const SmoothJet& a, const SmoothJet& b);
    /// Product truncated at an explicit total degree cap.
    static SmoothJet mul_to_order(const SmoothJet& a, const SmoothJet& b, int order);
    SmoothJet pow_to_order(int e, int order) const;

    /// Same terms under a (weakly larger) truncation cap. Only sound when the
    /// caller knows the omitted degrees cannot influence its result.
    SmoothJet with_order(int order) const;
    SmoothJet truncated(int order) const;

    /// Coefficient-conjugate series: conj(f) as a function. Swaps (p,q) in
    /// complex-pair bases, conjugates coefficients everywhere.
    SmoothJet conj_series() const;
    /// Real as a series: fixed by conj_series.
    bool is_real_series() const;

    /// d/dY; XY basis only.
    SmoothJet derivative_second() const;

    /// f with first variable replaced by a and second by b (a, b share basis
    /// and order; result in their basis).
    static SmoothJet substitute(const SmoothJet& f, const SmoothJet& a, const SmoothJet& b);

    friend bool operator==(const SmoothJet& a, const SmoothJet& b) {
        return a.order_ == b.order_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SmoothJet& a, const SmoothJet& b) { return !(a == b); }

    std::string str() const;

private:
    int order_;
    Basis basis_;
    Terms terms_;
};

/// Jet of an abscissa-preserving germ G(X, Y) = (X, g(X, Y)).
/// The linear coefficients of g must be pi-free and the Y-coefficient a
/// positive real rational; higher coefficients may be complex, which lets the
/// quadratic families with complex coefficients used by the counterexample
/// machinery live in the same type.
class VPlusJet {
public:
    enum class Sign { plus, minus };

    VPlusJet() : VPlusJet(SmoothJet::var_second(1, Basis::XY())) {}
    explicit VPlusJet(SmoothJet g, Sign sign = Sign::plus);

    static VPlusJet identity(int order);
    /// Build from the complexified form F = X + i g given in the Z basis.
    static VPlusJet from_complex(const SmoothJet& f, Sign sign = Sign::plus);

    const SmoothJet& g() const { return g_; }
    int order() const { return g_.order(); }
    Sign sign() const { return sign_; }
    bool is_identity() const;

    /// Linear coefficients of g = a X + b Y + ...
    GaussRational a() const;
    Rational b() const;

    /// X + i g as a Z-basis jet.
    SmoothJet complexify() const;

    friend bool operator==(const VPlusJet& a, const VPlusJet& b) {
        return a.sign_ == b.sign_ && a.g_ == b.g_;
    }
    friend bool operator!=(const VPlusJet& a, const VPlusJet& b) { return !(a == b); }

private:
    SmoothJet g_;
    Sign sign_;
};

// ---- basis changes ----
SmoothJet xy_to_z(const SmoothJet& f);
SmoothJet z_to_xy(const SmoothJet& f);
SmoothJet z_to_zmu(const SmoothJet& f, const Mu& mu);
SmoothJet zmu_to_z(const SmoothJet& f);
/// Route between any two bases (through Z when needed).
SmoothJet to_basis(const SmoothJet& f, const Basis& target);

/// (f - conj f) / 2i.
SmoothJet im_part(const SmoothJet& f);

/// f(X, g(X, Y)) for f in the XY basis.
SmoothJet compose(const SmoothJet& f, const VPlusJet& G);

/// Group law of V+: (G o H)(X, Y) = (X, g(X, h(X, Y))).
VPlusJet group_compose(const VPlusJet& G, const VPlusJet& H);
/// Compositional inverse in V+ (Newton iteration on g(X, h) = Y).
VPlusJet revert(const VPlusJet& G);
/// X -> -X in g; toggles the sign class.
VPlusJet z2_reflect(const VPlusJet& G);

/// 1/f to the given order; the constant term must be a pi-free unit.
SmoothJet reciprocal_to_order(const SmoothJet& f, int order);

/// Compositional inverse of a plane germ jet F (Z basis, zero constant term,
/// invertible linear part): the unique Psi with F(Psi, conj Psi) = W.
SmoothJet invert_plane_germ(const SmoothJet& f);
/// f(Psi, conj Psi) for f and Psi in the Z basis.
SmoothJet substitute_plane(const SmoothJet& f, const SmoothJet& psi);

}  // namespace focaljet
