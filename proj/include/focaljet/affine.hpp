#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "focaljet/germ.hpp"
#include "focaljet/label.hpp"

namespace focaljet {

/// The first-order invariant mu of G, read off the linear part of g.
Mu first_order_invariant(const VPlusJet& G);

/// Vanishing report for the Z_mu coefficient table of G.
struct LiftReport {
    Mu mu;
    bool liftable = false;
    bool holomorphic = false;
    std::vector<std::pair<int, int>> failing_coeffs;  // (0, q) entries that break liftability
};

/// Checks G_{C,mu}^{(0,q)} = 0 (liftable) and G_{C,mu}^{(p,q)} = 0 for q >= 1
/// (holomorphic) up to the given order. mu must equal first_order_invariant(G).
LiftReport lift_report(const VPlusJet& G, const Mu& mu, int order);

struct AdmissibilityReport {
    bool admissible = false;
    SingularPart witness;
    /// sum G'_j - sum G_j on the complexified second components (zero iff the
    /// ln Z_mu obstruction vanishes).
    SmoothJet sum_mismatch;
    bool all_liftable = false;   // every entry of both tuples
    bool sums_equal = false;
};

/// Decide affine admissibility of two tuples with common invariant mu via the
/// germ-lattice difference. When every entry is mu-liftable the verdict is
/// cross-checked against the liftable-and-equal-sums criterion.
AdmissibilityReport affine_admissible(std::span<const VPlusJet> tuple,
                                      std::span<const VPlusJet> tuple_prime, const Mu& mu,
                                      int order);

/// The unique S'_0 with S'_0 o G'_0 = S_0 + (smooth part of the germ
/// difference), for admissible tuples. S_0 is an XY jet; compositions with
/// germs happen at the plane level.
SmoothJet correction_series(std::span<const VPlusJet> tuple, std::span<const VPlusJet> tuple_prime,
                            const SmoothJet& s0, const Mu& mu, int order);

enum class Verdict { equivalent, not_equivalent, undecided };

struct EquivalenceCertificate {
    int order = 0;
    Verdict verdict = Verdict::not_equivalent;
    VPlusJet mediator;
    /// Expected ts'_j on the primed side (what the labels must carry to be
    /// equivalent); empty when the tuples are not admissible.
    std::vector<SmoothJet> corrections;
    /// Singular obstruction from the germ difference.
    SingularPart residual;
    /// Smooth obstruction: actual ts'_0 minus expected (zero when aligned).
    SmoothJet ts_mismatch;
    /// Cyclic rotation of the primed label under which the verdict holds.
    int rotation = 0;
    std::string note;

    bool equivalent() const { return verdict == Verdict::equivalent; }
};

/// Decide affine equivalence of two complete labels via G (labels compared up
/// to the cyclic reindexing built into their definition).
EquivalenceCertificate label_equivalent(const CompleteFFLabel& l, const CompleteFFLabel& lp,
                                        const VPlusJet& G, int order);

/// Thrown when a synthesize hypothesis fails; item names the violated
/// hypothesis (1) first-order invariants, (2) liftability, (3) equal sums.
struct HypothesisError : std::domain_error {
    int item;
    HypothesisError(int item_, const std::string& what)
        : std::domain_error("hypothesis (" + std::to_string(item_) + "): " + what), item(item_) {}
};

/// Build the unique complete label [ts''_j, g'_{j,l}] affine equivalent to l
/// via G, where the primed tuple entries are the given targets (targets[0]
/// must equal G).
CompleteFFLabel synthesize_equivalent(const CompleteFFLabel& l,
                                      const std::vector<VPlusJet>& targets, const VPlusJet& G,
                                      int order);

struct ExamplePair {
    CompleteFFLabel l, lp;
    VPlusJet mediator;
};

/// Reindexing counterexample: a generated label of multiplicity m >= 3 and
/// its image under a non-cyclic permutation; equivalent via the identity.
ExamplePair permutation_example(int m, const std::vector<int>& sigma, int order);

/// Liftable-pair counterexample (m = 2): from liftable G'_0, G'_1 build the
/// label generated by proj2(G'_0 + G'_1 - id) and its partner, equivalent via
/// G'_0.
ExamplePair liftable_pair_example(const VPlusJet& g0p, const VPlusJet& g1p, const SmoothJet& ts0,
                                  int order);

/// The concrete quadratic family G'_{0C} = Z + a Z Zbar, G'_{1C} = Z + b Z Zbar
/// with a b (a + b) != 0.
ExamplePair concrete_example(const GaussRational& a, const GaussRational& b, int order);

/// The complexified quadratic germ Z + c Z Zbar as a V+ jet.
VPlusJet quadratic_family_jet(const GaussRational& c, int order);

}  // namespace focaljet
