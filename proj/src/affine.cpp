#include "focaljet/affine.hpp"

#include <algorithm>

namespace focaljet {

Mu first_order_invariant(const VPlusJet& G) {
    // mu = G_C^{(0,1)} / conj(G_C^{(1,0)}) with G_C^{(1,0)} = (1 + b + ia)/2,
    // G_C^{(0,1)} = (1 - b + ia)/2 for g = aX + bY + ...
    GaussRational ia = GaussRational::unit_i() * G.a();
    GaussRational b(G.b());
    GaussRational num = (GaussRational(1) - b + ia) * GaussRational(Rational(1, 2));
    GaussRational den = ((GaussRational(1) + b + ia) * GaussRational(Rational(1, 2))).conj();
    return Mu(num / den);
}

LiftReport lift_report(const VPlusJet& G, const Mu& mu, int order) {
    if (first_order_invariant(G) != mu)
        throw std::domain_error("mu mismatch: not the first-order invariant of G");
    if (G.order() < order) throw std::invalid_argument("report order exceeds jet order");
    VPlusJet t = G.order() == order ? G : VPlusJet(G.g().truncated(order), G.sign());
    SmoothJet fmu = z_to_zmu(t.complexify(), mu);
    LiftReport r;
    r.mu = mu;
    r.liftable = true;
    r.holomorphic = true;
    for (const auto& [k, c] : fmu.terms()) {
        if (k.first + k.second < 2) continue;
        if (k.first == 0) {
            r.liftable = false;
            r.failing_coeffs.push_back(k);
        }
        if (k.second >= 1) r.holomorphic = false;
    }
    if (!r.liftable) r.holomorphic = false;
    return r;
}

namespace {

SmoothJet complex_sum_mismatch(std::span<const VPlusJet> tuple,
                               std::span<const VPlusJet> tuple_prime, int order) {
    SmoothJet s(order, Basis::XY());
    for (const VPlusJet& G : tuple_prime) s += G.g().truncated(order);
    for (const VPlusJet& G : tuple) s -= G.g().truncated(order);
    return s;
}

bool tuple_liftable(std::span<const VPlusJet> tuple, const Mu& mu, int order) {
    for (const VPlusJet& G : tuple)
        if (!lift_report(G, mu, order).liftable) return false;
    return true;
}

}  // namespace

AdmissibilityReport affine_admissible(std::span<const VPlusJet> tuple,
                                      std::span<const VPlusJet> tuple_prime, const Mu& mu,
                                      int order) {
    if (tuple.size() != tuple_prime.size())
        throw std::invalid_argument("tuple length mismatch");
    AdmissibilityReport r;
    r.witness = admissibility_difference(tuple, tuple_prime, mu, order);
    r.admissible = r.witness.empty();
    r.sum_mismatch = complex_sum_mismatch(tuple, tuple_prime, order);
    r.sums_equal = r.sum_mismatch.is_zero();
    r.all_liftable = tuple_liftable(tuple, mu, order) && tuple_liftable(tuple_prime, mu, order);
    if (r.all_liftable && r.admissible != r.sums_equal)
        throw std::logic_error("admissibility criterion mismatch on liftable tuples");
    return r;
}

namespace {

// Plane-level composition of an XY jet with the inverse of a V+ element:
// (s o G^-1) computed through the complexified germ.
SmoothJet compose_with_plane_inverse(const SmoothJet& s_xy, const VPlusJet& G) {
    SmoothJet psi = invert_plane_germ(G.complexify());
    return z_to_xy(substitute_plane(xy_to_z(s_xy), psi));
}

}  // namespace

SmoothJet correction_series(std::span<const VPlusJet> tuple, std::span<const VPlusJet> tuple_prime,
                            const SmoothJet& s0, const Mu& mu, int order) {
    if (s0.basis() != Basis::XY()) throw std::invalid_argument("S_0 must be an XY jet");
    LogLaurentGerm diff = tuple_difference(tuple, tuple_prime, mu, order);
    if (!diff.singular_part().empty())
        throw std::domain_error("tuples are not affine admissible");
    SmoothJet delta = z_to_xy(zmu_to_z(diff.smooth_lattice_jet()));
    return compose_with_plane_inverse(s0.truncated(order) + delta, tuple_prime[0]);
}

namespace {

struct TuplePair {
    std::vector<VPlusJet> plain, primed;
};

TuplePair build_tuples(const CompleteFFLabel& l, const CompleteFFLabel& lp, const VPlusJet& G,
                       int order) {
    TuplePair t;
    for (int j = 0; j < l.m; ++j) t.plain.emplace_back(l.g[0][j].truncated(order));
    VPlusJet Gt(G.g().truncated(order), G.sign());
    for (int j = 0; j < lp.m; ++j)
        t.primed.emplace_back(compose(lp.g[0][j].truncated(order), Gt));
    return t;
}

EquivalenceCertificate attempt_equivalence(const CompleteFFLabel& l, const CompleteFFLabel& lp,
                                           const VPlusJet& G, int order) {
    EquivalenceCertificate cert;
    cert.order = order;
    cert.mediator = G;
    TuplePair t = build_tuples(l, lp, G, order);

    // Identical tuples are admissible with zero correction whatever the
    // invariants are: the germ difference vanishes before any lattice choice.
    if (t.plain == t.primed) {
        SmoothJet expected0 =
            compose_with_plane_inverse(l.ts[0].truncated(order), t.primed[0]);
        for (int j = 0; j < lp.m; ++j)
            cert.corrections.push_back(SmoothJet::substitute(
                expected0, SmoothJet::var_first(order, Basis::XY()), lp.g[j][0].truncated(order)));
        cert.ts_mismatch = lp.ts[0].truncated(order) - expected0;
        if (cert.ts_mismatch.is_zero()) cert.verdict = Verdict::equivalent;
        return cert;
    }

    // Group the complexified entries by first-order invariant: each group sum
    // is the coefficient of one ln Z_mu germ, so the group sums must match.
    std::vector<Mu> mus;
    bool common = true;
    Mu mu0 = first_order_invariant(t.plain[0]);
    auto group_sum_mismatch = [order](std::span<const VPlusJet> a, std::span<const VPlusJet> b,
                                      const Mu& mu) {
        SmoothJet s(order, Basis::XY());
        for (const VPlusJet& G_ : b)
            if (first_order_invariant(G_) == mu) s += G_.g();
        for (const VPlusJet& G_ : a)
            if (first_order_invariant(G_) == mu) s -= G_.g();
        return s;
    };
    for (const VPlusJet& e : t.plain) {
        Mu m = first_order_invariant(e);
        if (m != mu0) common = false;
        if (std::find(mus.begin(), mus.end(), m) == mus.end()) mus.push_back(m);
    }
    for (const VPlusJet& e : t.primed) {
        Mu m = first_order_invariant(e);
        if (m != mu0) common = false;
        if (std::find(mus.begin(), mus.end(), m) == mus.end()) mus.push_back(m);
    }
    if (!common) {
        for (const Mu& m : mus) {
            SmoothJet mism = group_sum_mismatch(t.plain, t.primed, m);
            if (!mism.is_zero()) {
                // A ln Z_mu coefficient survives on one side only: first-order
                // invariant obstruction, decidedly not equivalent.
                cert.residual.lnz = xy_to_z(mism);
                cert.note = "first-order invariant obstruction at mu = " + m.value().str();
                return cert;
            }
        }
        cert.verdict = Verdict::undecided;
        cert.note = "heterogeneous first-order invariants: equivalence undecided "
                    "(experimental admissibility only)";
        return cert;
    }

    LogLaurentGerm diff = tuple_difference(t.plain, t.primed, mu0, order);
    cert.residual = diff.singular_part();
    if (!cert.residual.empty()) return cert;

    // Admissible: the unique expected seed and its transports.
    SmoothJet delta = z_to_xy(zmu_to_z(diff.smooth_lattice_jet()));
    SmoothJet expected0 =
        compose_with_plane_inverse(l.ts[0].truncated(order) + delta, t.primed[0]);
    cert.corrections.clear();
    for (int j = 0; j < lp.m; ++j) {
        // ts'_j = ts'_0 (X, g'_{j,0}(X, Y))
        SmoothJet gj0 = lp.g[j][0].truncated(order);
        cert.corrections.push_back(
            SmoothJet::substitute(expected0, SmoothJet::var_first(order, Basis::XY()), gj0));
    }
    cert.ts_mismatch = lp.ts[0].truncated(order) - expected0;
    if (cert.ts_mismatch.is_zero()) cert.verdict = Verdict::equivalent;
    return cert;
}

}  // namespace

EquivalenceCertificate label_equivalent(const CompleteFFLabel& l, const CompleteFFLabel& lp,
                                        const VPlusJet& G, int order) {
    EquivalenceCertificate cert;
    cert.order = order;
    cert.mediator = G;
    if (l.m != lp.m) {
        cert.note = "multiplicity mismatch";
        return cert;
    }
    if (l.order < order || lp.order < order || G.order() < order)
        throw std::invalid_argument("comparison order exceeds the data order");
    if (!validate(l).empty() || !validate(lp).empty()) {
        cert.note = "invalid label";
        return cert;
    }
    EquivalenceCertificate first;
    for (int c = 0; c < lp.m; ++c) {
        CompleteFFLabel rotated = c == 0 ? lp : zm_reindex(lp, rotation_perm(lp.m, c));
        EquivalenceCertificate attempt = attempt_equivalence(l, rotated, G, order);
        attempt.rotation = c;
        if (attempt.equivalent()) return attempt;
        if (c == 0) first = attempt;
    }
    return first;
}

CompleteFFLabel synthesize_equivalent(const CompleteFFLabel& l,
                                      const std::vector<VPlusJet>& targets, const VPlusJet& G,
                                      int order) {
    if (!validate(l).empty()) throw std::invalid_argument("invalid label");
    if (static_cast<int>(targets.size()) != l.m)
        throw std::invalid_argument("targets must have m entries");
    if (l.order < order || G.order() < order)
        throw std::invalid_argument("synthesis order exceeds the data order");
    for (const VPlusJet& t : targets)
        if (t.order() < order) throw std::invalid_argument("synthesis order exceeds the data order");
    VPlusJet Gt(G.g().truncated(order), G.sign());
    VPlusJet t0(targets[0].g().truncated(order), targets[0].sign());
    if (t0 != Gt)
        throw std::invalid_argument("mediator must equal targets[0]");

    std::vector<VPlusJet> plain, primed;
    for (int j = 0; j < l.m; ++j) plain.emplace_back(l.g[0][j].truncated(order));
    for (const VPlusJet& t : targets) primed.emplace_back(t.g().truncated(order), t.sign());

    // Hypothesis (1): one first-order invariant across both tuples.
    Mu mu = first_order_invariant(plain[0]);
    for (int j = 0; j < l.m; ++j) {
        if (first_order_invariant(primed[j]) != first_order_invariant(plain[j]))
            throw HypothesisError(1, "first-order invariants differ at index " + std::to_string(j));
        if (first_order_invariant(plain[j]) != mu)
            throw HypothesisError(1, "heterogeneous invariants are not supported; index " +
                                         std::to_string(j));
    }
    // Hypothesis (2): every entry mu-liftable.
    for (int j = 0; j < l.m; ++j) {
        if (!lift_report(plain[j], mu, order).liftable)
            throw HypothesisError(2, "G_" + std::to_string(j) + " is not mu-liftable");
        if (!lift_report(primed[j], mu, order).liftable)
            throw HypothesisError(2, "G'_" + std::to_string(j) + " is not mu-liftable");
    }
    // Hypothesis (3): equal sums.
    if (!complex_sum_mismatch(plain, primed, order).is_zero())
        throw HypothesisError(3, "tuple sums differ");

    // Primed label matrix from the targets: g'_{j,l} = proj2(T'_l o T'_j^-1)
    // with T'_j = targets[j] o G^-1.
    std::vector<VPlusJet> T, Tinv;
    VPlusJet Ginv = revert(Gt);
    for (const VPlusJet& t : primed) T.push_back(group_compose(t, Ginv));
    for (const VPlusJet& t : T) Tinv.push_back(revert(t));

    CompleteFFLabel out;
    out.m = l.m;
    out.order = order;
    out.g.assign(l.m, std::vector<SmoothJet>());
    for (int j = 0; j < l.m; ++j)
        for (int p = 0; p < l.m; ++p) out.g[j].push_back(group_compose(T[p], Tinv[j]).g());

    SmoothJet ts0 = correction_series(plain, primed, l.ts[0].truncated(order), mu, order);
    for (int j = 0; j < l.m; ++j)
        out.ts.push_back(
            SmoothJet::substitute(ts0, SmoothJet::var_first(order, Basis::XY()), out.g[j][0]));
    return out;
}

ExamplePair permutation_example(int m, const std::vector<int>& sigma, int order) {
    if (m < 3) throw std::invalid_argument("permutation example needs m >= 3");
    if (is_cyclic_permutation(sigma))
        throw std::invalid_argument("sigma must break the cyclic order");
    std::vector<SmoothJet> chain;
    for (int j = 0; j + 1 < m; ++j) {
        SmoothJet c = SmoothJet::var_second(order, Basis::XY());
        c.set_coeff(j + 1, 1, PiCoeff(1));  // Y + X^(j+1) Y, pairwise distinct
        chain.push_back(c);
    }
    SmoothJet seed(order, Basis::XY());
    seed.set_coeff(1, 0, PiCoeff(1));
    seed.set_coeff(0, 1, PiCoeff(1));
    if (order >= 2) seed.set_coeff(2, 0, PiCoeff(1));
    ExamplePair ex{generate_complete(m, chain, seed, order), CompleteFFLabel{},
                   VPlusJet::identity(order)};
    ex.lp = zm_reindex(ex.l, sigma);
    if (!label_equivalent(ex.l, ex.lp, ex.mediator, order).equivalent())
        throw std::logic_error("permutation example failed certification");
    if (equal_up_to_cyclic(ex.l, ex.lp))
        throw std::logic_error("permutation example produced equal labels");
    return ex;
}

ExamplePair liftable_pair_example(const VPlusJet& g0p, const VPlusJet& g1p, const SmoothJet& ts0,
                                  int order) {
    Mu mu = first_order_invariant(g0p);
    if (!lift_report(g0p, mu, order).liftable || first_order_invariant(g1p) != mu ||
        !lift_report(g1p, mu, order).liftable)
        throw std::invalid_argument("inputs must be liftable with a common invariant");
    // G_1 = G'_0 + G'_1 - id
    SmoothJet g1 = g0p.g().truncated(order) + g1p.g().truncated(order) -
                   SmoothJet::var_second(order, Basis::XY());
    CompleteFFLabel l = generate_complete(2, {g1}, ts0.truncated(order), order);
    std::vector<VPlusJet> targets{VPlusJet(g0p.g().truncated(order), g0p.sign()),
                                  VPlusJet(g1p.g().truncated(order), g1p.sign())};
    CompleteFFLabel lp = synthesize_equivalent(l, targets, targets[0], order);
    ExamplePair ex{std::move(l), std::move(lp), targets[0]};
    if (!label_equivalent(ex.l, ex.lp, ex.mediator, order).equivalent())
        throw std::logic_error("liftable pair example failed certification");
    if (ex.l == ex.lp) throw std::logic_error("liftable pair example produced equal labels");
    return ex;
}

VPlusJet quadratic_family_jet(const GaussRational& c, int order) {
    SmoothJet f(order, Basis::Z());
    f.set_coeff(1, 0, PiCoeff(1));
    if (order >= 2) f.set_coeff(1, 1, PiCoeff(c));
    return VPlusJet::from_complex(f);
}

ExamplePair concrete_example(const GaussRational& a, const GaussRational& b, int order) {
    if ((a * b * (a + b)).is_zero())
        throw std::invalid_argument("concrete example requires a b (a + b) != 0");
    SmoothJet ts0(order, Basis::XY());
    return liftable_pair_example(quadratic_family_jet(a, order), quadratic_family_jet(b, order),
                                 ts0, order);
}

}  // namespace focaljet
