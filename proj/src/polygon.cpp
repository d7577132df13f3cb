#include "focaljet/polygon.hpp"

#include <algorithm>

namespace focaljet {

bool LatticeVec::is_primitive() const {
    if (sgn(x) == 0 && sgn(y) == 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g == 1;
}

Int det2(const LatticeVec& a, const LatticeVec& b) { return a.x * b.y - a.y * b.x; }

LatticeVec shear_pow(const LatticeVec& v, long s) { return {v.x, Int(s) * v.x + v.y}; }

LatticeVec primitive_direction(const Point& a, const Point& b) {
    Rational dx = b.x - a.x, dy = b.y - a.y;
    // clear denominators, then divide by the gcd
    Int nx = dx.numerator() * dy.denominator();
    Int ny = dy.numerator() * dx.denominator();
    if (sgn(nx) == 0 && sgn(ny) == 0) throw std::invalid_argument("zero direction");
    Int g;
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
    return {nx / g, ny / g};
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<std::string> validate_polygon(const Polygon& p) {
    std::vector<std::string> out;
    size_t n = p.vertices.size();
    if (n < 3) return {"polygon needs at least 3 vertices"};
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = p.vertices[(i + n - 1) % n];
        const Point& cur = p.vertices[i];
        const Point& next = p.vertices[(i + 1) % n];
        if (cur == next) {
            out.push_back("duplicate vertex " + std::to_string(i));
            continue;
        }
        if (!(Rational(0) < cross(cur, next, prev)))
            out.push_back("vertex " + std::to_string(i) + ": not strictly convex counterclockwise");
    }
    return out;
}

bool point_strictly_inside(const Polygon& p, const Point& c) {
    size_t n = p.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = p.vertices[i];
        const Point& b = p.vertices[(i + 1) % n];
        if (!(Rational(0) < cross(a, b, c))) return false;
    }
    return true;
}

Polygon canonical_cycle(const Polygon& p) {
    size_t n = p.vertices.size();
    size_t best = 0;
    for (size_t i = 1; i < n; ++i)
        if (p.vertices[i] < p.vertices[best]) best = i;
    Polygon r;
    r.vertices.reserve(n);
    for (size_t i = 0; i < n; ++i) r.vertices.push_back(p.vertices[(best + i) % n]);
    return r;
}

CornerClass classify_corner(const LatticeVec& xi1, const LatticeVec& xi2, long s) {
    if (!xi1.is_primitive() || !xi2.is_primitive())
        throw std::invalid_argument("corner vectors must be primitive");
    CornerClass c;
    Int d1 = det2(xi1, xi2);
    Int d2 = det2(xi1, shear_pow(xi2, s));
    c.delzant = (d1 == 1 || d1 == -1);
    c.fake = (sgn(d2) == 0);
    c.hidden = (d2 == 1 || d2 == -1);
    return c;
}

namespace {

PiCoeff two_pi(const Rational& c) { return PiCoeff::pi_term(1, GaussRational(Rational(2) * c)); }

}  // namespace

std::vector<std::string> validate_ingredient(const IngredientRep& rep) {
    std::vector<std::string> out = validate_polygon(rep.polygon);
    if (!out.empty()) return out;
    size_t nf = rep.points.size();
    if (rep.labels.size() != nf) return {"one label per marked point required"};
    for (size_t i = 0; i < nf; ++i) {
        const MarkedPoint& mp = rep.points[i];
        if (mp.multiplicity < 1)
            out.push_back("point " + std::to_string(i) + ": multiplicity must be >= 1");
        if (i + 1 < nf && !(mp.c < rep.points[i + 1].c))
            out.push_back("points not in strict lexicographic order at " + std::to_string(i));
        if (!point_strictly_inside(rep.polygon, mp.c))
            out.push_back("point " + std::to_string(i) + ": not interior to the polygon");
        const CompleteFFLabel& l = rep.labels[i];
        if (l.m != mp.multiplicity) {
            out.push_back("label " + std::to_string(i) + ": multiplicity mismatch");
            continue;
        }
        for (const std::string& v : validate(l))
            out.push_back("label " + std::to_string(i) + ": " + v);
        for (int j = 0; j < l.m; ++j)
            if (l.ts[j].coeff(0, 0) != two_pi(mp.c.y))
                out.push_back("label " + std::to_string(i) + ": constant term of ts[" +
                              std::to_string(j) + "] != 2 pi c^2");
    }
    if (!out.empty()) return out;

    // s_i counts all pinches over the abscissa of c_i.
    auto s_of = [&](const Rational& x) {
        long s = 0;
        for (const MarkedPoint& mp : rep.points)
            if (mp.c.x == x) s += mp.multiplicity;
        return s;
    };
    size_t n = rep.polygon.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& v = rep.polygon.vertices[i];
        const Point& prev = rep.polygon.vertices[(i + n - 1) % n];
        const Point& next = rep.polygon.vertices[(i + 1) % n];
        // Edge vectors emanating from v, read counterclockwise across the
        // interior cone: first toward the next vertex, then toward the
        // previous one. The reverse order flips the determinant sign and
        // makes the s-fake/s-hidden conditions unsatisfiable at a convex
        // vertex on an upward ray.
        LatticeVec xi1 = primitive_direction(v, next);
        LatticeVec xi2 = primitive_direction(v, prev);
        std::optional<long> s;
        for (const MarkedPoint& mp : rep.points)
            if (v.x == mp.c.x && mp.c.y <= v.y) {
                s = s_of(mp.c.x);
                break;
            }
        if (s) {
            CornerClass c = classify_corner(xi1, xi2, *s);
            if (!c.fake && !c.hidden)
                out.push_back("vertex " + std::to_string(i) + ": on a cut ray but neither " +
                              std::to_string(*s) + "-fake nor " + std::to_string(*s) + "-hidden");
        } else {
            CornerClass c = classify_corner(xi1, xi2, 0);
            if (!c.delzant) out.push_back("vertex " + std::to_string(i) + ": not a Delzant corner");
        }
    }
    return out;
}

IngredientRep zr_action_rep(const IngredientRep& rep, long k, const Rational& b) {
    IngredientRep r = rep;
    auto move = [&](Point& p) { p.y = Rational(Int(k)) * p.x + p.y + b; };
    for (Point& v : r.polygon.vertices) move(v);
    for (MarkedPoint& mp : r.points) move(mp.c);
    // The label variable X is the abscissa relative to its node, so the shear
    // contributes 2 pi k c^1 to the constant term at the node over c^1: the
    // per-node shift is (k, k c^1 + b), which keeps ts^(0,0) = 2 pi c^2.
    for (size_t i = 0; i < r.labels.size(); ++i)
        r.labels[i] = zr_shift(r.labels[i], k, Rational(Int(k)) * rep.points[i].c.x + b);
    return r;
}

std::optional<OrbitWitness> rep_orbit_equal(const IngredientRep& rep,
                                            const IngredientRep& rep_prime) {
    const size_t n = rep.polygon.vertices.size();
    if (n != rep_prime.polygon.vertices.size()) return std::nullopt;
    if (rep.points.size() != rep_prime.points.size()) return std::nullopt;

    // The shear preserves abscissae, lexicographic order, and the cycle
    // orientation, so corresponding vertices line up after canonicalizing the
    // cycle start; (k, b) then solves two linear equations.
    Polygon a = canonical_cycle(rep.polygon);
    Polygon bp = canonical_cycle(rep_prime.polygon);
    for (size_t i = 0; i < n; ++i)
        if (a.vertices[i].x != bp.vertices[i].x) return std::nullopt;
    size_t other = n;
    for (size_t i = 1; i < n; ++i)
        if (a.vertices[i].x != a.vertices[0].x) {
            other = i;
            break;
        }
    if (other == n) return std::nullopt;  // degenerate, cannot happen for a valid polygon
    Rational d0 = bp.vertices[0].y - a.vertices[0].y;
    Rational d1 = bp.vertices[other].y - a.vertices[other].y;
    Rational kq = (d1 - d0) / (a.vertices[other].x - a.vertices[0].x);
    if (!kq.is_integer()) return std::nullopt;
    Int ki = kq.numerator();
    if (!ki.fits_slong_p()) return std::nullopt;
    long k = ki.get_si();
    Rational b = d0 - kq * a.vertices[0].x;
    if (zr_action_rep(rep, k, b) == rep_prime) return OrbitWitness{k, b};
    return std::nullopt;
}

RepEquivalence rep_affine_equivalent(const IngredientRep& rep, const IngredientRep& rep_prime,
                                     const VPlusJet& G, int order) {
    RepEquivalence out;
    if (!validate_ingredient(rep).empty() || !validate_ingredient(rep_prime).empty()) {
        out.note = "invalid ingredient representative";
        return out;
    }
    // Solve the orbit freedom from the geometry alone (labels excluded).
    IngredientRep bare = rep, bare_prime = rep_prime;
    bare.labels.clear();
    bare_prime.labels.clear();
    bare.labels.resize(rep.points.size());
    bare_prime.labels.resize(rep_prime.points.size());
    auto orbit = rep_orbit_equal(bare, bare_prime);
    if (!orbit) {
        out.note = "polygons or marked points differ on the whole Z x R orbit";
        return out;
    }
    out.orbit = orbit;
    IngredientRep moved = zr_action_rep(rep, orbit->k, orbit->b);
    out.equivalent = true;
    for (size_t i = 0; i < moved.labels.size(); ++i) {
        EquivalenceCertificate cert = label_equivalent(moved.labels[i], rep_prime.labels[i], G, order);
        if (!cert.equivalent()) out.equivalent = false;
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

}  // namespace focaljet
