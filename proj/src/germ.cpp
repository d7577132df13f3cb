#include "focaljet/germ.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>

namespace focaljet {

LogLaurentGerm::LogLaurentGerm(int order, Mu mu)
    : order_(order),
      depth_(std::max(0, order - 2)),
      mu_(std::move(mu)),
      basis_(Basis::Zmu(mu_)),
      lnz_(order, basis_),
      lnzbar_(order, basis_) {
    if (order_ < 1) throw std::invalid_argument("germ order must be >= 1");
}

PiCoeff LogLaurentGerm::laurent_coeff(int p, int q) const {
    auto it = laurent_.find({p, q});
    return it == laurent_.end() ? PiCoeff() : it->second;
}

void LogLaurentGerm::set_laurent(int p, int q, const PiCoeff& c) {
    if (p < -depth_ || q < -depth_) throw std::logic_error("Laurent depth bound exceeded");
    if (p + q > order_) throw std::logic_error("Laurent total degree beyond germ order");
    if (c.is_zero())
        laurent_.erase({p, q});
    else
        laurent_[{p, q}] = c;
}

void LogLaurentGerm::set_lnz(SmoothJet f) {
    if (f.basis() != basis_ || f.order() != order_)
        throw std::invalid_argument("lnz coefficient must match the germ lattice");
    lnz_ = std::move(f);
}

void LogLaurentGerm::set_lnzbar(SmoothJet f) {
    if (f.basis() != basis_ || f.order() != order_)
        throw std::invalid_argument("lnzbar coefficient must match the germ lattice");
    lnzbar_ = std::move(f);
}

bool LogLaurentGerm::is_zero() const {
    return laurent_.empty() && lnz_.is_zero() && lnzbar_.is_zero();
}

LogLaurentGerm LogLaurentGerm::operator-() const {
    LogLaurentGerm r(order_, mu_);
    for (const auto& [k, c] : laurent_) r.laurent_[k] = -c;
    r.lnz_ = -lnz_;
    r.lnzbar_ = -lnzbar_;
    return r;
}

LogLaurentGerm& LogLaurentGerm::operator+=(const LogLaurentGerm& o) {
    if (order_ != o.order_ || mu_ != o.mu_)
        throw std::invalid_argument("germ lattice mismatch");
    for (const auto& [k, c] : o.laurent_) {
        PiCoeff s = laurent_coeff(k.first, k.second) + c;
        if (s.is_zero())
            laurent_.erase(k);
        else
            laurent_[k] = s;
    }
    lnz_ += o.lnz_;
    lnzbar_ += o.lnzbar_;
    return *this;
}

LogLaurentGerm& LogLaurentGerm::operator-=(const LogLaurentGerm& o) { return *this += -o; }

LogLaurentGerm LogLaurentGerm::scaled(const GaussRational& c) const {
    LogLaurentGerm r(order_, mu_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : laurent_) {
        PiCoeff s = v * c;
        if (!s.is_zero()) r.laurent_[k] = s;
    }
    r.lnz_ = lnz_.scaled(c);
    r.lnzbar_ = lnzbar_.scaled(c);
    return r;
}

LogLaurentGerm LogLaurentGerm::conj() const {
    LogLaurentGerm r(order_, mu_);
    for (const auto& [k, c] : laurent_) r.laurent_[{k.second, k.first}] = c.conj();
    r.lnz_ = lnzbar_.conj_series();
    r.lnzbar_ = lnz_.conj_series();
    return r;
}

LogLaurentGerm LogLaurentGerm::im() const {
    return (*this - conj()).scaled(GaussRational(Rational(0), Rational(-1, 2)));
}

bool LogLaurentGerm::is_real_germ() const { return *this == conj(); }

LogLaurentGerm LogLaurentGerm::from_smooth(const SmoothJet& f, const Mu& mu) {
    LogLaurentGerm r(f.order(), mu);
    if (f.basis() != r.basis_) throw std::invalid_argument("smooth part must be in the germ lattice basis");
    for (const auto& [k, c] : f.terms()) r.laurent_[k] = c;
    return r;
}

void LogLaurentGerm::subtract_smooth(const SmoothJet& f) {
    if (f.basis() != basis_ || f.order() != order_)
        throw std::invalid_argument("smooth part must match the germ lattice");
    for (const auto& [k, c] : f.terms()) {
        PiCoeff s = laurent_coeff(k.first, k.second) - c;
        if (s.is_zero())
            laurent_.erase(k);
        else
            laurent_[k] = s;
    }
}

SingularPart LogLaurentGerm::singular_part() const {
    SingularPart s;
    s.lnz = lnz_;
    s.lnzbar = lnzbar_;
    for (const auto& [k, c] : laurent_)
        if (k.first < 0 || k.second < 0) s.neg_terms[k] = c;
    return s;
}

SmoothJet LogLaurentGerm::smooth_lattice_jet() const {
    SmoothJet f(order_, basis_);
    for (const auto& [k, c] : laurent_)
        if (k.first >= 0 && k.second >= 0) f.set_coeff(k.first, k.second, c);
    return f;
}

namespace {

// The complexification of G at the requested order, in the Z basis.
SmoothJet complexified_at(const VPlusJet& G, int order) {
    if (G.order() < order) throw std::invalid_argument("germ order exceeds jet order");
    VPlusJet t = G.order() == order ? G : VPlusJet(G.g().truncated(order), G.sign());
    return t.complexify();
}

}  // namespace

LogLaurentGerm expand_g_ln_g(const VPlusJet& G, const Mu& mu, int order) {
    SmoothJet fmu = z_to_zmu(complexified_at(G, order), mu);
    LogLaurentGerm germ(order, mu);
    // With matching first-order invariant the linear part in the Z_mu basis is
    // exactly Z_mu; anything else means mu was wrong.
    if (fmu.coeff(1, 0) != PiCoeff(1) || !fmu.coeff(0, 1).is_zero() || fmu.has_constant_term())
        throw std::domain_error("mu mismatch: germ linear part is not Z_mu");
    germ.set_lnz(fmu);
    SmoothJet v = fmu;
    v.set_coeff(1, 0, PiCoeff());
    for (int l = 1; l <= order - 2; ++l) {
        if (v.is_zero()) break;
        SmoothJet w = v.pow_to_order(l + 1, order + l);
        GaussRational factor(Rational(l % 2 == 1 ? 1 : -1, l));
        for (const auto& [k, c] : w.terms())
            germ.set_laurent(k.first - l, k.second,
                             germ.laurent_coeff(k.first - l, k.second) + c * factor);
    }
    return germ;
}

LogLaurentGerm im_g_ln_g_minus_g(const VPlusJet& G, const Mu& mu, int order) {
    LogLaurentGerm germ = expand_g_ln_g(G, mu, order);
    germ.subtract_smooth(germ.lnz());  // lnz holds G_C in the Z_mu basis
    return germ.im();
}

LogLaurentGerm tuple_difference(std::span<const VPlusJet> tuple,
                                std::span<const VPlusJet> tuple_prime, const Mu& mu, int order) {
    if (tuple.size() != tuple_prime.size())
        throw std::invalid_argument("tuple length mismatch");
    LogLaurentGerm diff(order, mu);
    for (const VPlusJet& G : tuple_prime) diff += im_g_ln_g_minus_g(G, mu, order);
    for (const VPlusJet& G : tuple) diff -= im_g_ln_g_minus_g(G, mu, order);
    return diff;
}

SingularPart admissibility_difference(std::span<const VPlusJet> tuple,
                                      std::span<const VPlusJet> tuple_prime, const Mu& mu,
                                      int order) {
    return tuple_difference(tuple, tuple_prime, mu, order).singular_part();
}

bool power_sums_vanish(const std::vector<GaussRational>& c, int m) {
    for (int l = 1; l <= m; ++l) {
        GaussRational s;
        for (const GaussRational& cj : c) s += cj.pow(l + 1);
        if (!s.is_zero()) return false;
    }
    return true;
}

namespace {

// Generalized binomial coefficient binom(p, j) for integer p (possibly
// negative) and j >= 0.
Rational gen_binom(int p, int j) {
    Rational r(1);
    for (int t = 0; t < j; ++t) r *= Rational(Int(p - t), Int(t + 1));
    return r;
}

// Laurent polynomial in the ratio rho = Zbar/Z, as shift -> coefficient.
using RatioSeries = std::map<int, GaussRational>;

RatioSeries binom_series(const GaussRational& x, int p, int direction, int depth) {
    // (1 + x rho^direction)^p truncated at |shift| <= depth
    RatioSeries s;
    for (int j = 0; j <= depth; ++j) {
        GaussRational c = GaussRational(gen_binom(p, j)) * x.pow(j);
        if (!c.is_zero()) s[j * direction] += c;
    }
    return s;
}

RatioSeries log_series(const GaussRational& x, int direction, int depth) {
    // ln(1 + x rho^direction) truncated, modulo the constant
    RatioSeries s;
    for (int k = 1; k <= depth; ++k) {
        GaussRational c = GaussRational(Rational(k % 2 == 1 ? 1 : -1, k)) * x.pow(k);
        if (!c.is_zero()) s[k * direction] += c;
    }
    return s;
}

RatioSeries ratio_mul(const RatioSeries& a, const RatioSeries& b, int depth) {
    RatioSeries r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            int k = ka + kb;
            if (std::abs(k) > depth) continue;
            r[k] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

}  // namespace

LogLaurentGerm relattice_mod_smooth(const LogLaurentGerm& g, const Mu& target, int ratio_depth) {
    if (g.mu() == target) return g;
    int order = g.order();
    LogLaurentGerm out(order, target);
    // Z_src = al Z_tgt + be Zbar_tgt, exactly.
    SmoothJet zsrc_z = zmu_to_z(SmoothJet::var_first(order, g.basis()));
    SmoothJet zsrc_t = z_to_zmu(zsrc_z, target);
    GaussRational al = zsrc_t.coeff(1, 0).part(0);
    GaussRational be = zsrc_t.coeff(0, 1).part(0);
    if (al.is_zero()) throw std::domain_error("degenerate lattice change");
    GaussRational x = be / al, xc = x.conj();

    auto convert_jet = [&](const SmoothJet& f) { return z_to_zmu(zmu_to_z(f), target); };
    auto add_clipped = [&](int p, int q, const PiCoeff& c) {
        if (p < -out.depth() || q < -out.depth() || p + q > order) return;  // ratio truncation
        out.set_laurent(p, q, out.laurent_coeff(p, q) + c);
    };

    // Laurent table: Z_src^p Zbar_src^q = al^p alc^q Z^p Zbar^q (1+x rho)^p (1+xc rho^-1)^q.
    for (const auto& [k, c] : g.laurent()) {
        int p = k.first, q = k.second;
        if (p >= 0 && q >= 0) {
            SmoothJet mono(order, g.basis());
            mono.set_coeff(p, q, c);
            SmoothJet conv = convert_jet(mono);
            for (const auto& [kk, cc] : conv.terms()) add_clipped(kk.first, kk.second, cc);
            continue;
        }
        RatioSeries series = ratio_mul(binom_series(x, p, +1, ratio_depth),
                                       binom_series(xc, q, -1, ratio_depth), ratio_depth);
        GaussRational scale = al.pow(p) * al.conj().pow(q);
        for (const auto& [shift, coeff] : series)
            add_clipped(p - shift, q + shift, c * (scale * coeff));
    }

    // f ln Z_src = f ln Z_tgt + f ln(al) [smooth, dropped] + f ln(1 + x rho).
    if (!g.lnz().is_zero()) {
        SmoothJet f = convert_jet(g.lnz());
        SmoothJet cur = out.lnz();
        cur += f;
        out.set_lnz(cur);
        for (const auto& [shift, coeff] : log_series(x, +1, ratio_depth))
            for (const auto& [kk, cc] : f.terms())
                add_clipped(kk.first - shift, kk.second + shift, cc * coeff);
    }
    if (!g.lnzbar().is_zero()) {
        SmoothJet f = convert_jet(g.lnzbar());
        SmoothJet cur = out.lnzbar();
        cur += f;
        out.set_lnzbar(cur);
        for (const auto& [shift, coeff] : log_series(xc, -1, ratio_depth))
            for (const auto& [kk, cc] : f.terms())
                add_clipped(kk.first - shift, kk.second + shift, cc * coeff);
    }
    return out;
}

SingularPart admissibility_difference_heterogeneous(std::span<const VPlusJet> tuple,
                                                    std::span<const VPlusJet> tuple_prime,
                                                    const std::vector<Mu>& mus, int order) {
    if (tuple.size() != tuple_prime.size() || mus.size() != tuple.size())
        throw std::invalid_argument("tuple length mismatch");
    if (tuple.empty()) throw std::invalid_argument("empty tuple");
    const Mu& ref = mus[0];
    LogLaurentGerm diff(order, ref);
    int depth = std::max(0, order - 2);
    for (size_t j = 0; j < tuple.size(); ++j) {
        LogLaurentGerm pair_diff = im_g_ln_g_minus_g(tuple_prime[j], mus[j], order);
        pair_diff -= im_g_ln_g_minus_g(tuple[j], mus[j], order);
        diff += relattice_mod_smooth(pair_diff, ref, depth);
    }
    return diff.singular_part();
}

}  // namespace focaljet
