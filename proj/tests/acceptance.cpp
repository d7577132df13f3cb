// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Runs standalone; exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "focaljet/polygon.hpp"

using namespace focaljet;

namespace {

std::mt19937_64 gen(0xACCE97ULL);

int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

Rational rand_rational() { return Rational(rand_int(-5, 5), rand_int(1, 4)); }

GaussRational rand_gauss() { return GaussRational(rand_rational(), rand_rational()); }

SmoothJet Y(int n) { return SmoothJet::var_second(n, Basis::XY()); }
SmoothJet W(int n) { return SmoothJet::var_first(n, Basis::Z()); }

VPlusJet rand_vplus(int order, bool real) {
    SmoothJet g(order, Basis::XY());
    g.set_coeff(1, 0, PiCoeff(GaussRational(rand_rational())));
    g.set_coeff(0, 1, PiCoeff(GaussRational(Rational(rand_int(1, 4), rand_int(1, 3)))));
    for (int i = 0; i < 3; ++i) {
        int p = rand_int(0, order), q = rand_int(0, order - p);
        if (p + q < 2) continue;
        GaussRational c = real ? GaussRational(rand_rational()) : rand_gauss();
        g.set_coeff(p, q, g.coeff(p, q) + PiCoeff(c));
    }
    return VPlusJet(std::move(g));
}

VPlusJet rand_liftable(const Mu& mu, int order) {
    SmoothJet fmu(order, Basis::Zmu(mu));
    fmu.set_coeff(1, 0, PiCoeff(1));
    for (int i = 0; i < 2; ++i) {
        int p = rand_int(1, order), q = rand_int(0, order - p);
        if (p + q < 2) continue;
        fmu.set_coeff(p, q, fmu.coeff(p, q) + PiCoeff(rand_gauss()));
    }
    return VPlusJet::from_complex(zmu_to_z(fmu));
}

// The Example-3 closed form for the inverse of Z + a Z Zbar:
//   sum_{l>=1} (-2a)^(l-1) (2l-3)!!/l! (Re W - a (Im W)^2)^l + i Im W,
// with (-1)!! = 1, truncated at total degree n.
SmoothJet lagrange_display(const GaussRational& a, int n) {
    SmoothJet re_w = (W(n) + W(n).conj_series()).scaled(GaussRational(Rational(1, 2)));
    SmoothJet im_w = im_part(W(n));
    SmoothJet base = re_w - (im_w * im_w).scaled(a);
    SmoothJet out = im_w.scaled(GaussRational::unit_i());
    Int dfact = 1;  // (2l-3)!!, starting at l = 1
    Int lfact = 1;
    GaussRational pow_m2a(1);
    for (int l = 1; l <= n; ++l) {
        lfact *= l;
        if (l >= 3) dfact *= 2 * l - 3;
        GaussRational c = pow_m2a * GaussRational(Rational(dfact, lfact));
        out += base.pow_to_order(l, n).scaled(c);
        pow_m2a = pow_m2a * (GaussRational(-2) * a);
    }
    return out;
}

// The displayed ts'_0 of Example 3 for ts_0 = 0: direct expansion, sharing
// only the plane inverter with the synthesis path.
SmoothJet example3_display(const GaussRational& a, const GaussRational& b, int n) {
    SmoothJet fa = W(n);
    fa.set_coeff(1, 1, PiCoeff(a));
    SmoothJet psi = invert_plane_germ(fa);
    SmoothJet psibar = psi.conj_series();
    SmoothJet acc(n, Basis::Z());
    for (int l = 1; l <= n - 2; ++l) {
        GaussRational cl = a.pow(l + 1) + b.pow(l + 1) - (a + b).pow(l + 1);
        SmoothJet term = psi * psibar.pow_to_order(l + 1, n);
        acc += im_part(term.scaled(cl)).scaled(GaussRational(Rational(l % 2 ? 1 : -1, l)));
    }
    return z_to_xy(acc);
}

CompleteFFLabel rigidity_base_label(int n) {
    SmoothJet ts(n, Basis::XY());
    ts.set_coeff(1, 0, PiCoeff(1));
    ts.set_coeff(0, 2, PiCoeff(Rational(1, 2)));
    return generate_complete(1, {}, ts, n);
}

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& why, const std::string& msg) {
    if (!ok && why.empty()) why = msg;
    return ok;
}

// ---- criterion 1 ----
bool criterion1(std::string& why) {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        VPlusJet G = rand_vplus(6, i % 2 == 0);
        ok = check(group_compose(G, revert(G)) == VPlusJet::identity(6), why,
                   "reversion failed on a randomized jet");
    }
    for (const GaussRational& a :
         {GaussRational(1), GaussRational(Rational(1), Rational(1))}) {
        SmoothJet f = W(4);
        f.set_coeff(1, 1, PiCoeff(a));
        SmoothJet inv = invert_plane_germ(f);
        ok &= check(inv == lagrange_display(a, 4), why,
                    "inverse of Z + (" + a.str() +
                        ") Z Zbar does not match the closed form at N=4 (the closed form solves "
                        "the scalar inversion x + a(x^2+y^2) = X and is an identity for real a "
                        "only; the true inverse differs at degree 3 by (a^2-|a|^2) W^2 Wbar)");
    }
    return ok;
}

// ---- criterion 2 ----
bool criterion2(std::string& why) {
    ExamplePair small = concrete_example(GaussRational(1), GaussRational(1), 3);
    SmoothJet lead(3, Basis::XY());
    lead.set_coeff(2, 1, PiCoeff(2));
    lead.set_coeff(0, 3, PiCoeff(2));
    bool ok = check(small.lp.ts[0] == lead, why, "leading part at N=3 is not 2Y(X^2+Y^2)");

    ExamplePair full = concrete_example(GaussRational(1), GaussRational(1), 6);
    ok &= check(full.lp.ts[0] == example3_display(GaussRational(1), GaussRational(1), 6), why,
                "synthesized ts''_0 differs from the displayed series at N=6");
    ok &= check(label_equivalent(full.l, full.lp, full.mediator, 6).equivalent(), why,
                "concrete pair failed certification at N=6");
    return ok;
}

// ---- criterion 3 ----
bool criterion3(std::string& why) {
    const std::vector<GaussRational> mus{GaussRational(), GaussRational(Rational(1, 2)),
                                         GaussRational(Rational(1, 3), Rational(1, 3))};
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        Mu mu{mus[i % mus.size()]};
        int m = 1 + i % 3;
        std::vector<VPlusJet> left, right;
        for (int j = 0; j < m; ++j) left.push_back(rand_liftable(mu, 6));
        for (int j = 0; j < m; ++j) right.push_back(left[(j + 1) % m]);
        if (i % 2) {
            VPlusJet d = rand_liftable(mu, 6);
            SmoothJet dlin(6, Basis::XY());
            dlin.set_coeff(1, 0, PiCoeff(d.a()));
            dlin.set_coeff(0, 1, PiCoeff(GaussRational(d.b())));
            right[0] = VPlusJet(right[0].g() + d.g() - dlin);
        }
        SmoothJet sum(6, Basis::XY());
        for (int j = 0; j < m; ++j) sum += right[j].g() - left[j].g();
        AdmissibilityReport r = affine_admissible(left, right, mu, 6);
        ok = check(r.all_liftable, why, "generator produced a non-liftable tuple");
        ok &= check(r.admissible == sum.is_zero(), why,
                    "germ verdict disagrees with the liftable-and-equal-sums criterion");
    }
    if (!ok) return false;

    // inject a (0,2) coefficient c into one entry
    Mu mu{mus[1]};
    GaussRational c(Rational(1, 2), Rational(1, 3));
    std::vector<VPlusJet> left{rand_liftable(mu, 6), rand_liftable(mu, 6)};
    std::vector<VPlusJet> right = left;
    SmoothJet fmu = z_to_zmu(right[0].complexify(), mu);
    fmu.set_coeff(0, 2, fmu.coeff(0, 2) + PiCoeff(c));
    right[0] = VPlusJet::from_complex(zmu_to_z(fmu));
    AdmissibilityReport r = affine_admissible(left, right, mu, 6);
    GaussRational inv2i(Rational(0), Rational(-1, 2));
    ok = check(!r.admissible, why, "injected coefficient did not flip the verdict");
    ok &= check(!r.witness.neg_terms.count({-1, 4})
                    ? false
                    : r.witness.neg_terms.at({-1, 4}) == PiCoeff(c * c * inv2i),
                why, "(-1,4) coefficient is not c^2/(2i)");
    return ok;
}

// ---- criterion 4 ----
//
// Exhausts every pair (l', G) obtained from the trivial m = 1 data by at most
// three nonzero perturbation coefficients in total, drawn from {1, -1, 1/2,
// -1/2} over the degree <= 4 slots of ts'_0 and of g. A perturbation of ts'_0
// only enters label_equivalent through the final seed comparison, so for each
// G one certificate decides the entire ts'-family: the family contains an
// equivalent member iff the required seed correction is itself a ts'-family
// perturbation, and that member is run through the full operation. Randomly
// chosen family members are also run in full as spot checks.
bool criterion4(std::string& why) {
    const int n = 4;
    const std::vector<GaussRational> values{
        GaussRational(1), GaussRational(Rational(-1)), GaussRational(Rational(1, 2)),
        GaussRational(Rational(-1, 2))};
    CompleteFFLabel base = rigidity_base_label(n);
    VPlusJet id = VPlusJet::identity(n);

    std::vector<std::pair<int, int>> g_slots;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q + p <= n; ++q)
            if (p + q >= 1) g_slots.push_back({p, q});

    using Delta = std::vector<std::pair<std::pair<int, int>, GaussRational>>;
    std::vector<Delta> g_deltas;
    {
        std::vector<Delta> out{{}};
        std::function<void(size_t, Delta&)> rec = [&](size_t start, Delta& cur) {
            if (!cur.empty()) out.push_back(cur);
            if (cur.size() == 3) return;
            for (size_t i = start; i < g_slots.size(); ++i)
                for (const GaussRational& v : values) {
                    cur.push_back({g_slots[i], v});
                    rec(i + 1, cur);
                    cur.pop_back();
                }
        };
        Delta cur;
        rec(0, cur);
        g_deltas = std::move(out);
    }

    auto in_ts_family = [&](const SmoothJet& delta, size_t budget) {
        if (delta.terms().size() > budget) return false;
        for (const auto& [k, c] : delta.terms()) {
            bool listed = false;
            for (const GaussRational& v : values) listed = listed || c == PiCoeff(v);
            if (!listed) return false;
        }
        return true;
    };

    auto perturbed_label = [&](const SmoothJet& delta) {
        CompleteFFLabel lp = base;
        lp.ts[0] += delta;
        return lp;
    };

    long families = 0, spot_checks = 0;
    for (const Delta& dg : g_deltas) {
        SmoothJet g = Y(n);
        for (const auto& [slot, v] : dg)
            g.set_coeff(slot.first, slot.second, g.coeff(slot.first, slot.second) + PiCoeff(v));
        PiCoeff by = g.coeff(0, 1);
        if (!by.is_pi_free() || !by.part(0).is_real() || !(Rational(0) < by.part(0).re))
            continue;  // not a V+ element; outside the statement
        VPlusJet G(g);
        ++families;
        size_t ts_budget = 3 - dg.size();

        EquivalenceCertificate cert = label_equivalent(base, base, G, n);
        if (cert.equivalent() != (G == id)) {
            why = "unperturbed seed: unexpected verdict with " + std::to_string(dg.size()) +
                  " g perturbations";
            return false;
        }
        if (cert.residual.empty() && cert.note.empty()) {
            // admissible: within this family only the exact seed correction
            // can be equivalent
            SmoothJet needed = cert.corrections[0] - base.ts[0];
            if (in_ts_family(needed, ts_budget)) {
                bool equivalent = label_equivalent(base, perturbed_label(needed), G, n).equivalent();
                if (equivalent && !(G == id && needed.is_zero())) {
                    why = "nontrivial equivalent pair found";
                    return false;
                }
                if (!equivalent) {
                    why = "certificate correction did not certify";
                    return false;
                }
            }
        }
        // spot check: a random nonzero member of the ts'-family must fail
        if (ts_budget > 0 && families % 59 == 0) {
            SmoothJet delta(n, Basis::XY());
            int p = rand_int(0, n), q = rand_int(0, n - p);
            delta.set_coeff(p, q, PiCoeff(values[rand_int(0, 3)]));
            CompleteFFLabel lp = perturbed_label(delta);
            bool trivial = G == id && delta.is_zero();
            ++spot_checks;
            if (label_equivalent(base, lp, G, n).equivalent() != trivial) {
                why = "spot check disagreed with the family decision";
                return false;
            }
        }
    }
    std::fprintf(stderr, "    [criterion 4: %ld families, %ld spot checks]\n", families,
                 spot_checks);
    return true;
}

// ---- criterion 5 ----
bool criterion5(std::string& why) {
    ExamplePair perm = permutation_example(3, {1, 0, 2}, 6);
    bool ok = check(!equal_up_to_cyclic(perm.l, perm.lp), why, "permuted labels equal");
    ok &= check(perm.mediator == VPlusJet::identity(6), why, "example 1 mediator is not id");
    ok &= check(label_equivalent(perm.l, perm.lp, perm.mediator, 6).equivalent(), why,
                "example 1 pair not certified");

    // two distinct liftable choices of (G'_0, G'_1)
    SmoothJet f0 = W(6), f1 = W(6);
    f0.set_coeff(2, 0, PiCoeff(1));
    f1.set_coeff(3, 0, PiCoeff(1));
    SmoothJet g0 = Y(6), g1 = Y(6);
    g0.set_coeff(2, 0, PiCoeff(1));
    g0.set_coeff(0, 2, PiCoeff(1));
    g1.set_coeff(2, 1, PiCoeff(2));
    g1.set_coeff(0, 3, PiCoeff(2));
    std::vector<std::pair<VPlusJet, VPlusJet>> pairs{
        {VPlusJet::from_complex(f0), VPlusJet::from_complex(f1)},
        {VPlusJet(g0), VPlusJet(g1)}};
    for (const auto& [a, b] : pairs) {
        ExamplePair ex = liftable_pair_example(a, b, SmoothJet(6, Basis::XY()), 6);
        ok &= check(!(ex.l == ex.lp), why, "example 2 produced equal labels");
        ok &= check(!equal_up_to_cyclic(ex.l, ex.lp), why, "example 2 labels equal up to cyclic");
        ok &= check(ex.mediator == a, why, "example 2 mediator is not G'_0");
        ok &= check(label_equivalent(ex.l, ex.lp, ex.mediator, 6).equivalent(), why,
                    "example 2 pair not certified");
    }
    return ok;
}

// ---- criterion 6 ----
bool criterion6(std::string& why) {
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        int m = 1 + i % 3, n = 3 + i % 4;
        std::vector<SmoothJet> chain;
        for (int j = 0; j + 1 < m; ++j) {
            SmoothJet c = Y(n);
            c.set_coeff(1, 0, PiCoeff(rand_rational()));
            c.set_coeff(0, 1, PiCoeff(Rational(rand_int(1, 3))));
            int p = rand_int(0, n), q = rand_int(0, n - p);
            if (p + q >= 2) c.set_coeff(p, q, c.coeff(p, q) + PiCoeff(rand_rational()));
            chain.push_back(c);
        }
        SmoothJet seed(n, Basis::XY());
        for (int t = 0; t < 3; ++t) {
            int p = rand_int(0, n), q = rand_int(0, n - p);
            seed.set_coeff(p, q, seed.coeff(p, q) + PiCoeff(rand_rational()));
        }
        CompleteFFLabel l = generate_complete(m, chain, seed, n);
        ok = check(validate(l).empty(), why, "generated label failed validate");

        // Z x R action: validity and additivity
        long k1 = rand_int(-2, 2), k2 = rand_int(-2, 2);
        Rational b1 = rand_rational(), b2 = rand_rational();
        ok &= check(validate(zr_shift(l, k1, b1)).empty(), why, "zr_shift broke validity");
        ok &= check(zr_shift(zr_shift(l, k1, b1), k2, b2) == zr_shift(l, k1 + k2, b1 + b2), why,
                    "zr_shift group law failed");

        // Z_m reindex: validity and composition law
        std::vector<int> sigma = rotation_perm(m, rand_int(0, m - 1));
        std::vector<int> tau = rotation_perm(m, rand_int(0, m - 1));
        ok &= check(validate(zm_reindex(l, sigma)).empty(), why, "zm_reindex broke validity");
        std::vector<int> comp(m);
        for (int j = 0; j < m; ++j) comp[j] = sigma[tau[j]];
        ok &= check(zm_reindex(zm_reindex(l, sigma), tau) == zm_reindex(l, comp), why,
                    "zm_reindex composition law failed");

        // Z_2 action on the (2 pi X)Z quotient
        FFLabel f = complete_to_ff(l);
        ok &= check(validate(f).empty(), why, "quotient label failed validate");
        for (long k : {0L, 1L, 2L}) {
            FFLabel a = z2_action(f, k);
            ok &= check(validate(a).empty(), why, "z2_action broke validity");
            ok &= check(z2_action(a, k) == f, why, "z2 involution failed");
            ok &= check(z2_action(a, k + 2) == f, why, "z2 even shift is not the identity");
        }
    }
    return ok;
}

// ---- criterion 7 ----
bool criterion7(std::string& why) {
    // unit square ingredient
    IngredientRep rep;
    rep.polygon = {{Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(0)},
                    Point{Rational(1), Rational(1)}, Point{Rational(0), Rational(1)}}};
    SmoothJet seed(4, Basis::XY());
    seed.set_coeff(0, 0, PiCoeff::pi_term(1));
    seed.set_coeff(0, 2, PiCoeff(1));
    rep.points = {{Point{Rational(1, 2), Rational(1, 2)}, 1}};
    rep.labels = {generate_complete(1, {}, seed, 4)};
    bool ok = check(validate_ingredient(rep).empty(), why, "unit square rep failed validate");

    // exhaustive corner grid against brute-force determinants
    for (int x1 = -3; x1 <= 3 && ok; ++x1)
        for (int y1 = -3; y1 <= 3 && ok; ++y1)
            for (int x2 = -3; x2 <= 3 && ok; ++x2)
                for (int y2 = -3; y2 <= 3 && ok; ++y2) {
                    LatticeVec a{Int(x1), Int(y1)}, b{Int(x2), Int(y2)};
                    if (!a.is_primitive() || !b.is_primitive()) continue;
                    for (long s = 0; s <= 2; ++s) {
                        long d1 = x1 * y2 - y1 * x2;
                        long d2 = x1 * (s * x2 + y2) - y1 * x2;
                        CornerClass got = classify_corner(a, b, s);
                        bool match = got.delzant == (d1 == 1 || d1 == -1) &&
                                     got.fake == (d2 == 0) && got.hidden == (d2 == 1 || d2 == -1);
                        ok = check(match, why, "corner classification mismatch on the grid");
                    }
                }

    // planted witnesses
    for (int i = 0; i < 50 && ok; ++i) {
        long k = rand_int(-5, 5);
        Rational b = rand_rational();
        auto got = rep_orbit_equal(rep, zr_action_rep(rep, k, b));
        ok = check(got.has_value() && got->k == k && got->b == b, why,
                   "planted (k, b) witness not recovered");
    }
    return ok;
}

// ---- criterion 8 ----
bool criterion8(std::string& why) {
    const int n = 6;
    auto square_rep = [&](const CompleteFFLabel& label) {
        IngredientRep rep;
        rep.polygon = {{Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(0)},
                        Point{Rational(1), Rational(1)}, Point{Rational(0), Rational(1)}}};
        rep.points = {{Point{Rational(1, 2), Rational(1, 2)}, label.m}};
        rep.labels = {label};
        return rep;
    };

    // same polygon, one m=1 label differs: false
    SmoothJet seed(n, Basis::XY());
    seed.set_coeff(0, 0, PiCoeff::pi_term(1));
    seed.set_coeff(2, 0, PiCoeff(1));
    CompleteFFLabel l1 = generate_complete(1, {}, seed, n);
    SmoothJet seed2 = seed;
    seed2.set_coeff(0, 2, PiCoeff(Rational(1, 2)));
    CompleteFFLabel l2 = generate_complete(1, {}, seed2, n);
    RepEquivalence neg =
        rep_affine_equivalent(square_rep(l1), square_rep(l2), VPlusJet::identity(n), n);
    bool ok = check(!neg.equivalent, why, "distinct m=1 labels compared equivalent");

    // replace an m=2 label by its Example-2 partner: true via G'_0
    SmoothJet g0 = Y(n), g1 = Y(n);
    g0.set_coeff(2, 0, PiCoeff(1));
    g0.set_coeff(0, 2, PiCoeff(1));
    g1.set_coeff(2, 1, PiCoeff(2));
    g1.set_coeff(0, 3, PiCoeff(2));
    SmoothJet ts0(n, Basis::XY());
    ts0.set_coeff(0, 0, PiCoeff::pi_term(1));
    ExamplePair ex = liftable_pair_example(VPlusJet(g0), VPlusJet(g1), ts0, n);
    RepEquivalence pos = rep_affine_equivalent(square_rep(ex.l), square_rep(ex.lp), ex.mediator, n);
    ok &= check(pos.equivalent, why, "example-2 substitution compared inequivalent");
    ok &= check(!rep_affine_equivalent(square_rep(ex.l), square_rep(ex.lp),
                                       VPlusJet::identity(n), n)
                     .equivalent,
                why, "example-2 substitution equivalent via the wrong mediator");
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1 reversion oracle and Lagrange closed form", criterion1},
        {"2 concrete family reproduction", criterion2},
        {"3 proposition criterion on liftable tuples", criterion3},
        {"4 single-pinch rigidity (exhaustive)", criterion4},
        {"5 reindexing and liftable-pair counterexamples", criterion5},
        {"6 label axioms and group actions", criterion6},
        {"7 polygon suite", criterion7},
        {"8 global comparison of representatives", criterion8},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[%s] criterion %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.name,
                    static_cast<long long>(ms), why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failed;
    }
    return failed;
}
