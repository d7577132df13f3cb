#include "focaljet/jet.hpp"

#include <sstream>

namespace focaljet {

Mu::Mu(GaussRational v) : v_(std::move(v)) {
    if (!(v_.norm() < Rational(1))) throw std::domain_error("mu must satisfy |mu| < 1");
}

GaussRational Mu::alpha() const { return (GaussRational(1) + v_.conj()).inverse(); }
GaussRational Mu::beta() const { return v_ / (GaussRational(1) + v_); }

std::string Basis::str() const {
    switch (kind) {
        case Kind::xy: return "XY";
        case Kind::z: return "Z";
        case Kind::zmu: return "Zmu(" + mu.str() + ")";
    }
    return "?";
}

SmoothJet::SmoothJet(int order, Basis basis) : order_(order), basis_(std::move(basis)) {
    if (order_ < 1) throw std::invalid_argument("jet order must be >= 1");
}

SmoothJet SmoothJet::monomial(int order, Basis basis, int p, int q, PiCoeff c) {
    SmoothJet f(order, std::move(basis));
    f.set_coeff(p, q, c);
    return f;
}

SmoothJet SmoothJet::var_first(int order, Basis basis) {
    return monomial(order, std::move(basis), 1, 0, PiCoeff(1));
}

SmoothJet SmoothJet::var_second(int order, Basis basis) {
    return monomial(order, std::move(basis), 0, 1, PiCoeff(1));
}

PiCoeff SmoothJet::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? PiCoeff() : it->second;
}

void SmoothJet::set_coeff(int p, int q, const PiCoeff& c) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative exponent in SmoothJet");
    if (p + q > order_) throw std::invalid_argument("monomial beyond jet order");
    if (c.is_zero())
        terms_.erase({p, q});
    else
        terms_[{p, q}] = c;
}

SmoothJet SmoothJet::operator-() const {
    SmoothJet r(order_, basis_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

SmoothJet& SmoothJet::operator+=(const SmoothJet& o) {
    if (basis_ != o.basis_ || order_ != o.order_)
        throw std::invalid_argument("jet basis/order mismatch");
    for (const auto& [k, c] : o.terms_) {
        PiCoeff s = coeff(k.first, k.second) + c;
        if (s.is_zero())
            terms_.erase(k);
        else
            terms_[k] = s;
    }
    return *this;
}

SmoothJet& SmoothJet::operator-=(const SmoothJet& o) { return *this += -o; }

SmoothJet SmoothJet::scaled(const PiCoeff& c) const {
    SmoothJet r(order_, basis_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) {
        PiCoeff s = v * c;
        if (!s.is_zero()) r.terms_[k] = s;
    }
    return r;
}

SmoothJet SmoothJet::scaled(const GaussRational& c) const { return scaled(PiCoeff(c)); }

SmoothJet SmoothJet::mul_to_order(const SmoothJet& a, const SmoothJet& b, int order) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("jet basis mismatch");
    SmoothJet r(order, a.basis_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            int p = ka.first + kb.first, q = ka.second + kb.second;
            if (p + q > order) continue;
            PiCoeff s = r.coeff(p, q) + ca * cb;
            if (s.is_zero())
                r.terms_.erase({p, q});
            else
                r.terms_[{p, q}] = s;
        }
    return r;
}

SmoothJet operator*(const SmoothJet& a, const SmoothJet& b) {
    if (a.order() != b.order()) throw std::invalid_argument("jet order mismatch");
    return SmoothJet::mul_to_order(a, b, a.order());
}

SmoothJet SmoothJet::pow_to_order(int e, int order) const {
    SmoothJet r = monomial(order, basis_, 0, 0, PiCoeff(1));
    if (e < 0) throw std::invalid_argument("negative power of a jet");
    SmoothJet base = with_order(order);
    while (e > 0) {
        if (e & 1) r = mul_to_order(r, base, order);
        base = mul_to_order(base, base, order);
        e >>= 1;
    }
    return r;
}

SmoothJet SmoothJet::with_order(int order) const {
    if (order < order_) return truncated(order);
    SmoothJet r(order, basis_);
    r.terms_ = terms_;
    return r;
}

SmoothJet SmoothJet::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot truncate to a higher order");
    SmoothJet r(order, basis_);
    for (const auto& [k, c] : terms_)
        if (k.first + k.second <= order) r.terms_[k] = c;
    return r;
}

SmoothJet SmoothJet::conj_series() const {
    SmoothJet r(order_, basis_);
    for (const auto& [k, c] : terms_) {
        Key key = basis_.is_complex_pair() ? Key{k.second, k.first} : k;
        r.terms_[key] = c.conj();
    }
    return r;
}

bool SmoothJet::is_real_series() const { return *this == conj_series(); }

SmoothJet SmoothJet::derivative_second() const {
    if (basis_.kind != Basis::Kind::xy)
        throw std::invalid_argument("derivative_second expects the XY basis");
    SmoothJet r(order_, basis_);
    for (const auto& [k, c] : terms_) {
        if (k.second == 0) continue;
        r.terms_[{k.first, k.second - 1}] = c * GaussRational(Rational(k.second));
    }
    return r;
}

SmoothJet SmoothJet::substitute(const SmoothJet& f, const SmoothJet& a, const SmoothJet& b) {
    if (a.basis_ != b.basis_ || a.order_ != b.order_)
        throw std::invalid_argument("substitution images must share basis and order");
    int order = a.order_;
    int maxp = 0, maxq = 0;
    for (const auto& [k, c] : f.terms_) {
        maxp = std::max(maxp, k.first);
        maxq = std::max(maxq, k.second);
    }
    std::vector<SmoothJet> pa, pb;
    pa.reserve(maxp + 1);
    pb.reserve(maxq + 1);
    pa.push_back(monomial(order, a.basis_, 0, 0, PiCoeff(1)));
    pb.push_back(pa[0]);
    for (int i = 1; i <= maxp; ++i) pa.push_back(mul_to_order(pa[i - 1], a, order));
    for (int i = 1; i <= maxq; ++i) pb.push_back(mul_to_order(pb[i - 1], b, order));
    SmoothJet r(order, a.basis_);
    for (const auto& [k, c] : f.terms_)
        r += mul_to_order(pa[k.first], pb[k.second], order).scaled(c);
    return r;
}

std::string SmoothJet::str() const {
    if (terms_.empty()) return "0";
    const char* names[2] = {nullptr, nullptr};
    switch (basis_.kind) {
        case Basis::Kind::xy: names[0] = "X"; names[1] = "Y"; break;
        case Basis::Kind::z: names[0] = "Z"; names[1] = "Zb"; break;
        case Basis::Kind::zmu: names[0] = "Zm"; names[1] = "Zbm"; break;
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first) os << names[0] << "^" << k.first;
        if (k.second) os << names[1] << "^" << k.second;
    }
    return os.str();
}

// ---- VPlusJet ----

VPlusJet::VPlusJet(SmoothJet g, Sign sign) : g_(std::move(g)), sign_(sign) {
    if (g_.basis() != Basis::XY()) throw std::invalid_argument("VPlusJet g must be in the XY basis");
    if (g_.has_constant_term()) throw std::invalid_argument("VPlusJet g must have zero constant term");
    PiCoeff ax = g_.coeff(1, 0), by = g_.coeff(0, 1);
    if (!ax.is_pi_free() || !by.is_pi_free())
        throw std::invalid_argument("VPlusJet linear coefficients must be pi-free");
    GaussRational b = by.part(0);
    if (!b.is_real() || !(Rational(0) < b.re))
        throw std::invalid_argument("VPlusJet Y-coefficient must be a positive real rational");
}

VPlusJet VPlusJet::identity(int order) {
    return VPlusJet(SmoothJet::var_second(order, Basis::XY()));
}

VPlusJet VPlusJet::from_complex(const SmoothJet& f, Sign sign) {
    if (f.basis() != Basis::Z()) throw std::invalid_argument("from_complex expects the Z basis");
    // g = -i (F - X)
    SmoothJet x_z = SmoothJet::monomial(f.order(), Basis::Z(), 1, 0, PiCoeff(GaussRational(Rational(1, 2))));
    x_z.set_coeff(0, 1, PiCoeff(GaussRational(Rational(1, 2))));
    SmoothJet g = z_to_xy((f - x_z).scaled(GaussRational(Rational(0), Rational(-1))));
    return VPlusJet(std::move(g), sign);
}

bool VPlusJet::is_identity() const {
    return g_ == SmoothJet::var_second(order(), Basis::XY());
}

GaussRational VPlusJet::a() const { return g_.coeff(1, 0).part(0); }

Rational VPlusJet::b() const { return g_.coeff(0, 1).part(0).re; }

SmoothJet VPlusJet::complexify() const {
    SmoothJet f = xy_to_z(g_).scaled(GaussRational::unit_i());
    f.set_coeff(1, 0, f.coeff(1, 0) + PiCoeff(GaussRational(Rational(1, 2))));
    f.set_coeff(0, 1, f.coeff(0, 1) + PiCoeff(GaussRational(Rational(1, 2))));
    return f;
}

// ---- basis changes ----

SmoothJet xy_to_z(const SmoothJet& f) {
    if (f.basis() != Basis::XY()) throw std::invalid_argument("xy_to_z expects the XY basis");
    int n = f.order();
    Rational half(1, 2);
    SmoothJet x(n, Basis::Z()), y(n, Basis::Z());
    x.set_coeff(1, 0, PiCoeff(GaussRational(half)));
    x.set_coeff(0, 1, PiCoeff(GaussRational(half)));
    y.set_coeff(1, 0, PiCoeff(GaussRational(Rational(0), -half)));
    y.set_coeff(0, 1, PiCoeff(GaussRational(Rational(0), half)));
    return SmoothJet::substitute(f, x, y);
}

SmoothJet z_to_xy(const SmoothJet& f) {
    if (f.basis() != Basis::Z()) throw std::invalid_argument("z_to_xy expects the Z basis");
    int n = f.order();
    SmoothJet z(n, Basis::XY()), zb(n, Basis::XY());
    z.set_coeff(1, 0, PiCoeff(1));
    z.set_coeff(0, 1, PiCoeff(GaussRational::unit_i()));
    zb.set_coeff(1, 0, PiCoeff(1));
    zb.set_coeff(0, 1, PiCoeff(-GaussRational::unit_i()));
    return SmoothJet::substitute(f, z, zb);
}

SmoothJet z_to_zmu(const SmoothJet& f, const Mu& mu) {
    if (f.basis() != Basis::Z()) throw std::invalid_argument("z_to_zmu expects the Z basis");
    if (mu.is_zero()) return f;
    int n = f.order();
    GaussRational al = mu.alpha(), be = mu.beta();
    GaussRational det = al * al.conj() - be * be.conj();  // real and positive since |mu| < 1
    Basis target = Basis::Zmu(mu);
    SmoothJet z(n, target), zb(n, target);
    z.set_coeff(1, 0, PiCoeff(al.conj() / det));
    z.set_coeff(0, 1, PiCoeff(-be / det));
    zb.set_coeff(1, 0, PiCoeff(-be.conj() / det));
    zb.set_coeff(0, 1, PiCoeff(al / det));
    return SmoothJet::substitute(f, z, zb);
}

SmoothJet zmu_to_z(const SmoothJet& f) {
    if (f.basis().kind == Basis::Kind::z) return f;
    if (f.basis().kind != Basis::Kind::zmu)
        throw std::invalid_argument("zmu_to_z expects a Zmu basis");
    Mu mu{f.basis().mu};
    int n = f.order();
    GaussRational al = mu.alpha(), be = mu.beta();
    SmoothJet zm(n, Basis::Z()), zbm(n, Basis::Z());
    zm.set_coeff(1, 0, PiCoeff(al));
    zm.set_coeff(0, 1, PiCoeff(be));
    zbm.set_coeff(1, 0, PiCoeff(be.conj()));
    zbm.set_coeff(0, 1, PiCoeff(al.conj()));
    return SmoothJet::substitute(f, zm, zbm);
}

SmoothJet to_basis(const SmoothJet& f, const Basis& target) {
    if (f.basis() == target) return f;
    SmoothJet z = f;
    switch (f.basis().kind) {
        case Basis::Kind::xy: z = xy_to_z(f); break;
        case Basis::Kind::z: break;
        case Basis::Kind::zmu: z = zmu_to_z(f); break;
    }
    switch (target.kind) {
        case Basis::Kind::xy: return z_to_xy(z);
        case Basis::Kind::z: return z;
        case Basis::Kind::zmu: return z_to_zmu(z, Mu(target.mu));
    }
    throw std::logic_error("unreachable basis");
}

SmoothJet im_part(const SmoothJet& f) {
    return (f - f.conj_series()).scaled(GaussRational(Rational(0), Rational(-1, 2)));
}

SmoothJet compose(const SmoothJet& f, const VPlusJet& G) {
    if (f.basis() != Basis::XY()) throw std::invalid_argument("compose expects f in the XY basis");
    if (f.order() != G.order()) throw std::invalid_argument("compose order mismatch");
    return SmoothJet::substitute(f, SmoothJet::var_first(f.order(), Basis::XY()), G.g());
}

VPlusJet group_compose(const VPlusJet& G, const VPlusJet& H) {
    if (G.order() != H.order()) throw std::invalid_argument("group_compose order mismatch");
    SmoothJet g = SmoothJet::substitute(G.g(), SmoothJet::var_first(G.order(), Basis::XY()), H.g());
    auto sign = (G.sign() == H.sign()) ? VPlusJet::Sign::plus : VPlusJet::Sign::minus;
    return VPlusJet(std::move(g), sign);
}

SmoothJet reciprocal_to_order(const SmoothJet& f, int order) {
    PiCoeff c0 = f.constant_term();
    if (!c0.is_pi_free()) throw std::domain_error("not invertible: constant term contains pi");
    GaussRational u = c0.part(0);
    if (u.is_zero()) throw std::domain_error("not invertible");
    SmoothJet fe = f.with_order(order);
    SmoothJet r = SmoothJet::monomial(order, f.basis(), 0, 0, PiCoeff(u.inverse()));
    SmoothJet two = SmoothJet::monomial(order, f.basis(), 0, 0, PiCoeff(2));
    for (int k = 1; k < 2 * order + 2; k *= 2)
        r = SmoothJet::mul_to_order(r, two - SmoothJet::mul_to_order(fe, r, order), order);
    return r;
}

VPlusJet revert(const VPlusJet& G) {
    int n = G.order();
    const SmoothJet& g = G.g();
    Rational b = G.b();
    if (b.is_zero()) throw std::domain_error("not invertible");
    SmoothJet x = SmoothJet::var_first(n, Basis::XY());
    SmoothJet y = SmoothJet::var_second(n, Basis::XY());
    // h0 inverts the linear part: h = (Y - aX)/b
    SmoothJet h = (y - x.scaled(G.a())).scaled(GaussRational(b.inverse()));
    SmoothJet dg = g.derivative_second();
    for (int pass = 0; pass < n + 1; ++pass) {
        SmoothJet err = SmoothJet::substitute(g, x, h) - y;
        if (err.is_zero()) break;
        SmoothJet dinv = reciprocal_to_order(SmoothJet::substitute(dg, x, h), n);
        h -= err * dinv;
    }
    if (SmoothJet::substitute(g, x, h) != y) throw std::logic_error("revert did not converge");
    return VPlusJet(std::move(h), G.sign());
}

VPlusJet z2_reflect(const VPlusJet& G) {
    int n = G.order();
    SmoothJet mx = SmoothJet::monomial(n, Basis::XY(), 1, 0, PiCoeff(-1));
    SmoothJet g = SmoothJet::substitute(G.g(), mx, SmoothJet::var_second(n, Basis::XY()));
    auto sign = G.sign() == VPlusJet::Sign::plus ? VPlusJet::Sign::minus : VPlusJet::Sign::plus;
    return VPlusJet(std::move(g), sign);
}

SmoothJet substitute_plane(const SmoothJet& f, const SmoothJet& psi) {
    if (f.basis() != Basis::Z() || psi.basis() != Basis::Z())
        throw std::invalid_argument("substitute_plane expects the Z basis");
    return SmoothJet::substitute(f, psi, psi.conj_series());
}

SmoothJet invert_plane_germ(const SmoothJet& f) {
    if (f.basis() != Basis::Z()) throw std::invalid_argument("invert_plane_germ expects the Z basis");
    if (f.has_constant_term()) throw std::invalid_argument("plane germ must fix the origin");
    int n = f.order();
    PiCoeff ac = f.coeff(1, 0), bc = f.coeff(0, 1);
    if (!ac.is_pi_free() || !bc.is_pi_free())
        throw std::domain_error("not invertible: linear part contains pi");
    GaussRational al = ac.part(0), be = bc.part(0);
    Rational det = (al * al.conj() - be * be.conj()).re;
    if (det.is_zero()) throw std::domain_error("not invertible");
    // Linv(w) = (conj(al) w - be conj(w)) / det
    auto linv = [&](const SmoothJet& w) {
        return (w.scaled(al.conj()) - w.conj_series().scaled(be)).scaled(GaussRational(det.inverse()));
    };
    SmoothJet w = SmoothJet::var_first(n, Basis::Z());
    SmoothJet quad = f;
    quad.set_coeff(1, 0, PiCoeff());
    quad.set_coeff(0, 1, PiCoeff());
    SmoothJet psi = linv(w);
    for (int pass = 0; pass < n + 1; ++pass) {
        psi = linv(w - substitute_plane(quad, psi));
    }
    if (substitute_plane(f, psi) != w) throw std::logic_error("plane inversion did not converge");
    return psi;
}

}  // namespace focaljet
