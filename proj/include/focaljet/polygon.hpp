#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focaljet/affine.hpp"

namespace focaljet {

struct Point {
    Rational x, y;
    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic (x, then y).
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

/// Primitive integer vector: gcd(|x|, |y|) = 1.
struct LatticeVec {
    Int x, y;
    bool is_primitive() const;
    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

Int det2(const LatticeVec& a, const LatticeVec& b);
/// T^s v for the shear T = [[1,0],[1,1]].
LatticeVec shear_pow(const LatticeVec& v, long s);
/// Primitive vector directing the segment from a to b.
LatticeVec primitive_direction(const Point& a, const Point& b);

/// Compact convex polygon, vertices counterclockwise, strictly convex.
struct Polygon {
    std::vector<Point> vertices;
    friend bool operator==(const Polygon&, const Polygon&) = default;
};

std::vector<std::string> validate_polygon(const Polygon& p);
bool point_strictly_inside(const Polygon& p, const Point& c);
/// Rotate the vertex cycle so the lexicographically least vertex comes first.
Polygon canonical_cycle(const Polygon& p);

/// All corner categories satisfied by a vertex with incoming primitive edge
/// vectors xi1 (toward the previous vertex) and xi2 (toward the next).
/// Categories can overlap; every satisfied one is reported.
struct CornerClass {
    bool delzant = false;
    bool fake = false;    // s-fake
    bool hidden = false;  // s-hidden
    bool none() const { return !delzant && !fake && !hidden; }
    friend bool operator==(const CornerClass&, const CornerClass&) = default;
};

CornerClass classify_corner(const LatticeVec& xi1, const LatticeVec& xi2, long s);

struct MarkedPoint {
    Point c;
    int multiplicity = 1;
    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Complete semitoric ingredient representative: polygon, marked points in
/// lexicographic order, and one complete focus-focus label per point.
struct IngredientRep {
    Polygon polygon;
    std::vector<MarkedPoint> points;
    std::vector<CompleteFFLabel> labels;
    friend bool operator==(const IngredientRep&, const IngredientRep&) = default;
};

std::vector<std::string> validate_ingredient(const IngredientRep& rep);

/// The (k, b) action: (x, y) -> (x, k x + y + b) on the polygon and points,
/// ts_j -> ts_j + 2 pi (k X + b) on every label.
IngredientRep zr_action_rep(const IngredientRep& rep, long k, const Rational& b);

struct OrbitWitness {
    long k = 0;
    Rational b;
    friend bool operator==(const OrbitWitness&, const OrbitWitness&) = default;
};

/// Witness with zr_action_rep(rep, k, b) == rep_prime, if one exists. The
/// witness is unique: a compact polygon admits no nontrivial shear self-map.
std::optional<OrbitWitness> rep_orbit_equal(const IngredientRep& rep,
                                            const IngredientRep& rep_prime);

struct RepEquivalence {
    bool equivalent = false;
    std::optional<OrbitWitness> orbit;
    std::vector<EquivalenceCertificate> certificates;  // one per node
    std::string note;
};

/// Global affine comparison: after the Z x R orbit freedom the polygons and
/// marked points must agree exactly and the labels must be affine equivalent
/// nodewise via G.
RepEquivalence rep_affine_equivalent(const IngredientRep& rep, const IngredientRep& rep_prime,
                                     const VPlusJet& G, int order);

}  // namespace focaljet
