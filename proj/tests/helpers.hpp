#pragma once

#include <random>
#include <vector>

#include "focaljet/affine.hpp"

namespace testutil {

using namespace focaljet;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline int rand_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Rational rand_rational(int num_range = 6, int den_range = 4) {
    int d = rand_int(1, den_range);
    return Rational(rand_int(-num_range, num_range), d);
}

inline Rational rand_nonzero_rational() {
    for (;;) {
        Rational r = rand_rational();
        if (!r.is_zero()) return r;
    }
}

inline GaussRational rand_gauss() { return GaussRational(rand_rational(), rand_rational()); }

inline GaussRational rand_nonzero_gauss() {
    for (;;) {
        GaussRational g = rand_gauss();
        if (!g.is_zero()) return g;
    }
}

inline PiCoeff rand_picoeff(int max_pi = 2) {
    PiCoeff c;
    int k = rand_int(0, 2);
    for (int i = 0; i < k; ++i) c.set(rand_int(0, max_pi), rand_gauss());
    return c;
}

/// Sparse random jet: `count` coefficients at random slots.
inline SmoothJet rand_jet(int order, Basis basis, int count, bool allow_constant = true,
                          bool real = false, bool pi_free = true) {
    SmoothJet f(order, basis);
    for (int i = 0; i < count; ++i) {
        int p = rand_int(0, order), q = rand_int(0, order - p);
        if (!allow_constant && p == 0 && q == 0) continue;
        GaussRational c = real && basis == Basis::XY() ? GaussRational(rand_rational()) : rand_gauss();
        PiCoeff pc = pi_free ? PiCoeff(c) : PiCoeff::pi_term(rand_int(0, 1), c);
        f.set_coeff(p, q, f.coeff(p, q) + pc);
    }
    return f;
}

/// Random V+ jet: real or complex higher part, linear part a X + b Y with
/// rational a and positive rational b.
inline VPlusJet rand_vplus(int order, int extra_terms = 3, bool real = true) {
    SmoothJet g(order, Basis::XY());
    g.set_coeff(1, 0, PiCoeff(GaussRational(rand_rational(3, 3))));
    g.set_coeff(0, 1, PiCoeff(GaussRational(Rational(rand_int(1, 4), rand_int(1, 3)))));
    for (int i = 0; i < extra_terms; ++i) {
        int p = rand_int(0, order), q = rand_int(0, order - p);
        if (p + q < 2) continue;
        GaussRational c = real ? GaussRational(rand_rational()) : rand_gauss();
        g.set_coeff(p, q, g.coeff(p, q) + PiCoeff(c));
    }
    return VPlusJet(std::move(g));
}

/// Random mu-liftable element: Z_mu plus terms with p >= 1 in the Z_mu basis.
inline VPlusJet rand_liftable(const Mu& mu, int order, int extra_terms = 2) {
    SmoothJet fmu(order, Basis::Zmu(mu));
    fmu.set_coeff(1, 0, PiCoeff(1));
    for (int i = 0; i < extra_terms; ++i) {
        int p = rand_int(1, order), q = rand_int(0, order - p);
        if (p + q < 2) continue;
        fmu.set_coeff(p, q, fmu.coeff(p, q) + PiCoeff(rand_gauss()));
    }
    return VPlusJet::from_complex(zmu_to_z(fmu));
}

/// Independent dense-array oracle for truncated products and substitution;
/// shares only the coefficient ring with the implementation.
namespace naive {

using Table = std::vector<std::vector<PiCoeff>>;  // [p][q]

inline Table from_jet(const SmoothJet& f) {
    Table t(f.order() + 1, std::vector<PiCoeff>(f.order() + 1));
    for (const auto& [k, c] : f.terms()) t[k.first][k.second] = c;
    return t;
}

inline SmoothJet to_jet(const Table& t, int order, const Basis& basis) {
    SmoothJet f(order, basis);
    for (int p = 0; p <= order; ++p)
        for (int q = 0; q + p <= order; ++q)
            if (!t[p][q].is_zero()) f.set_coeff(p, q, t[p][q]);
    return f;
}

inline Table mul(const Table& a, const Table& b, int order) {
    Table r(order + 1, std::vector<PiCoeff>(order + 1));
    for (int p1 = 0; p1 < static_cast<int>(a.size()); ++p1)
        for (int q1 = 0; q1 < static_cast<int>(a.size()); ++q1) {
            if (a[p1][q1].is_zero()) continue;
            for (int p2 = 0; p2 < static_cast<int>(b.size()); ++p2)
                for (int q2 = 0; q2 < static_cast<int>(b.size()); ++q2) {
                    if (b[p2][q2].is_zero()) continue;
                    int p = p1 + p2, q = q1 + q2;
                    if (p + q > order) continue;
                    r[p][q] += a[p1][q1] * b[p2][q2];
                }
        }
    return r;
}

/// f(A, B) by plain repeated multiplication.
inline SmoothJet substitute(const SmoothJet& f, const SmoothJet& A, const SmoothJet& B) {
    int order = A.order();
    Table one(order + 1, std::vector<PiCoeff>(order + 1));
    one[0][0] = PiCoeff(1);
    Table ta = from_jet(A), tb = from_jet(B);
    Table acc(order + 1, std::vector<PiCoeff>(order + 1));
    for (const auto& [k, c] : f.terms()) {
        Table term = one;
        for (int i = 0; i < k.first; ++i) term = mul(term, ta, order);
        for (int i = 0; i < k.second; ++i) term = mul(term, tb, order);
        for (int p = 0; p <= order; ++p)
            for (int q = 0; q + p <= order; ++q) acc[p][q] += term[p][q] * c;
    }
    return to_jet(acc, order, A.basis());
}

}  // namespace naive

}  // namespace testutil
