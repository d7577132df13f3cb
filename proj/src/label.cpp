#include "focaljet/label.hpp"

#include <algorithm>

namespace focaljet {

namespace {

SmoothJet compose_second(const SmoothJet& f, const SmoothJet& g) {
    // f(X, g(X,Y)), both XY basis
    return SmoothJet::substitute(f, SmoothJet::var_first(f.order(), Basis::XY()), g);
}

void check_perm(const std::vector<int>& sigma, int m) {
    if (static_cast<int>(sigma.size()) != m) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(m, false);
    for (int v : sigma) {
        if (v < 0 || v >= m || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

}  // namespace

SmoothJet normalize_mod_2pix(const SmoothJet& s) {
    SmoothJet r = s;
    PiCoeff cx = r.coeff(1, 0);
    GaussRational c1 = cx.part(1);
    Rational shift = c1.re - c1.re.mod_two();
    if (!shift.is_zero()) {
        cx.set(1, GaussRational(c1.re - shift, c1.im));
        r.set_coeff(1, 0, cx);
    }
    return r;
}

CompleteFFLabel generate_complete(int m, const std::vector<SmoothJet>& chain,
                                  const SmoothJet& seed, int order) {
    if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (static_cast<int>(chain.size()) != m - 1)
        throw std::invalid_argument("chain must have m-1 entries");
    if (seed.basis() != Basis::XY() || seed.order() != order)
        throw std::invalid_argument("seed must be an XY jet of the label order");

    // Transition germs T_j with g_{j,l} = proj2(T_l o T_j^-1); T_0 = id.
    std::vector<VPlusJet> T;
    T.push_back(VPlusJet::identity(order));
    for (int j = 0; j + 1 < m; ++j) {
        const SmoothJet& c = chain[j];
        if (c.basis() != Basis::XY() || c.order() != order)
            throw std::invalid_argument("chain entries must be XY jets of the label order");
        T.push_back(group_compose(VPlusJet(c), T.back()));
    }
    std::vector<VPlusJet> Tinv;
    Tinv.reserve(m);
    for (const VPlusJet& t : T) Tinv.push_back(revert(t));

    CompleteFFLabel l;
    l.m = m;
    l.order = order;
    l.g.assign(m, std::vector<SmoothJet>());
    for (int j = 0; j < m; ++j) {
        l.g[j].reserve(m);
        for (int p = 0; p < m; ++p) l.g[j].push_back(group_compose(T[p], Tinv[j]).g());
    }
    l.ts.reserve(m);
    for (int j = 0; j < m; ++j) l.ts.push_back(compose(seed, Tinv[j]));
    return l;
}

FFLabel generate_ff(int m, const std::vector<SmoothJet>& chain, const SmoothJet& seed, int order) {
    if (seed.has_constant_term()) throw std::invalid_argument("FFLabel seed must have no constant term");
    return complete_to_ff(generate_complete(m, chain, seed, order));
}

std::pair<std::vector<SmoothJet>, SmoothJet> extract_generators(const CompleteFFLabel& l) {
    std::vector<SmoothJet> chain;
    for (int j = 0; j + 1 < l.m; ++j) chain.push_back(l.g[j][j + 1]);
    return {chain, l.ts[0]};
}

namespace {

template <typename Label>
std::vector<std::string> validate_impl(const Label& l, const std::vector<SmoothJet>& s,
                                       bool mod_2pix) {
    std::vector<std::string> out;
    int m = l.m;
    if (m < 1) return {"multiplicity must be >= 1"};
    if (static_cast<int>(s.size()) != m || static_cast<int>(l.g.size()) != m) {
        out.push_back("shape: expected m series and an m x m matrix");
        return out;
    }
    for (int j = 0; j < m; ++j)
        if (static_cast<int>(l.g[j].size()) != m) {
            out.push_back("shape: expected m x m matrix");
            return out;
        }
    auto tag = [](int j, int k) { return "(" + std::to_string(j) + "," + std::to_string(k) + ")"; };
    for (int j = 0; j < m; ++j) {
        if (s[j].basis() != Basis::XY() || s[j].order() != l.order)
            out.push_back("s[" + std::to_string(j) + "]: wrong basis or order");
        if (mod_2pix && s[j].has_constant_term())
            out.push_back("s[" + std::to_string(j) + "]: constant term not allowed");
        for (int k = 0; k < m; ++k) {
            const SmoothJet& g = l.g[j][k];
            if (g.basis() != Basis::XY() || g.order() != l.order) {
                out.push_back("g" + tag(j, k) + ": wrong basis or order");
                continue;
            }
            if (g.has_constant_term()) out.push_back("g" + tag(j, k) + ": constant term");
            PiCoeff by = g.coeff(0, 1);
            if (!by.is_pi_free() || !by.part(0).is_real() || !(Rational(0) < by.part(0).re))
                out.push_back("g" + tag(j, k) + ": Y-coefficient not a positive pi-free real");
        }
    }
    if (!out.empty()) return out;

    for (int j = 0; j < m; ++j)
        if (l.g[j][j] != SmoothJet::var_second(l.order, Basis::XY()))
            out.push_back("relation 2: g" + tag(j, j) + " != Y");
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            SmoothJet rhs = compose_second(s[k], l.g[j][k]);
            SmoothJet lhs = s[j];
            if (mod_2pix) {
                rhs = normalize_mod_2pix(rhs);
                lhs = normalize_mod_2pix(lhs);
            }
            if (lhs != rhs)
                out.push_back("relation 1: s[" + std::to_string(j) + "] != s[" + std::to_string(k) +
                              "] o (X, g" + tag(j, k) + ")");
        }
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            for (int p = 0; p < m; ++p)
                if (l.g[j][p] != compose_second(l.g[k][p], l.g[j][k]))
                    out.push_back("relation 3: g" + tag(j, p) + " != g" + tag(k, p) + " o (X, g" +
                                  tag(j, k) + ")");
    return out;
}

}  // namespace

std::vector<std::string> validate(const CompleteFFLabel& l) { return validate_impl(l, l.ts, false); }

std::vector<std::string> validate(const FFLabel& l) { return validate_impl(l, l.s, true); }

FFLabel z2_action(const FFLabel& l, long k) {
    FFLabel r;
    r.m = l.m;
    r.order = l.order;
    SmoothJet mx = SmoothJet::monomial(l.order, Basis::XY(), 1, 0, PiCoeff(-1));
    SmoothJet y = SmoothJet::var_second(l.order, Basis::XY());
    SmoothJet kpix =
        SmoothJet::monomial(l.order, Basis::XY(), 1, 0, PiCoeff::pi_term(1, GaussRational(Rational(Int(k)))));
    for (const SmoothJet& s : l.s)
        r.s.push_back(normalize_mod_2pix(SmoothJet::substitute(s, mx, y) + kpix));
    r.g.assign(l.m, std::vector<SmoothJet>());
    for (int j = 0; j < l.m; ++j)
        for (int p = 0; p < l.m; ++p) r.g[j].push_back(SmoothJet::substitute(l.g[j][p], mx, y));
    return r;
}

template <typename Label>
static Label reindex_impl(const Label& l, const std::vector<int>& sigma,
                          const std::vector<SmoothJet>& series) {
    check_perm(sigma, l.m);
    Label r;
    r.m = l.m;
    r.order = l.order;
    std::vector<SmoothJet> s;
    for (int j = 0; j < l.m; ++j) s.push_back(series[sigma[j]]);
    r.g.assign(l.m, std::vector<SmoothJet>());
    for (int j = 0; j < l.m; ++j)
        for (int p = 0; p < l.m; ++p) r.g[j].push_back(l.g[sigma[j]][sigma[p]]);
    if constexpr (std::is_same_v<Label, CompleteFFLabel>)
        r.ts = std::move(s);
    else
        r.s = std::move(s);
    return r;
}

CompleteFFLabel zm_reindex(const CompleteFFLabel& l, const std::vector<int>& sigma) {
    return reindex_impl(l, sigma, l.ts);
}

FFLabel zm_reindex(const FFLabel& l, const std::vector<int>& sigma) {
    return reindex_impl(l, sigma, l.s);
}

CompleteFFLabel zr_shift(const CompleteFFLabel& l, long k, const Rational& b) {
    CompleteFFLabel r = l;
    SmoothJet shift(l.order, Basis::XY());
    shift.set_coeff(1, 0, PiCoeff::pi_term(1, GaussRational(Rational(Int(2) * Int(k)))));
    shift.set_coeff(0, 0, PiCoeff::pi_term(1, GaussRational(Rational(2) * b)));
    for (SmoothJet& t : r.ts) t += shift;
    return r;
}

FFLabel complete_to_ff(const CompleteFFLabel& l) {
    FFLabel r;
    r.m = l.m;
    r.order = l.order;
    r.g = l.g;
    for (const SmoothJet& t : l.ts) {
        SmoothJet s = t;
        s.set_coeff(0, 0, PiCoeff());
        r.s.push_back(normalize_mod_2pix(s));
    }
    return r;
}

bool is_cyclic_permutation(const std::vector<int>& sigma) {
    int m = static_cast<int>(sigma.size());
    check_perm(sigma, m);
    for (int j = 0; j < m; ++j)
        if (sigma[j] != (sigma[0] + j) % m) return false;
    return true;
}

std::vector<int> rotation_perm(int m, int c) {
    std::vector<int> sigma(m);
    for (int j = 0; j < m; ++j) sigma[j] = ((j + c) % m + m) % m;
    return sigma;
}

bool equal_up_to_cyclic(const CompleteFFLabel& a, const CompleteFFLabel& b) {
    if (a.m != b.m || a.order != b.order) return false;
    for (int c = 0; c < a.m; ++c)
        if (zm_reindex(a, rotation_perm(a.m, c)) == b) return true;
    return false;
}

}  // namespace focaljet
