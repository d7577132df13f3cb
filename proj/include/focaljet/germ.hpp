#pragma once

#include <span>
#include <vector>

#include "focaljet/jet.hpp"

namespace focaljet {

/// The part of a germ that obstructs smoothness at the origin: Laurent terms
/// with a negative exponent plus the coefficients of ln Z_mu and ln Zbar_mu.
/// Two germs agree modulo smooth functions iff their singular parts agree.
struct SingularPart {
    std::map<std::pair<int, int>, PiCoeff> neg_terms;
    SmoothJet lnz, lnzbar;

    bool empty() const { return neg_terms.empty() && lnz.is_zero() && lnzbar.is_zero(); }

    friend bool operator==(const SingularPart& a, const SingularPart& b) {
        return a.neg_terms == b.neg_terms && a.lnz == b.lnz && a.lnzbar == b.lnzbar;
    }
    friend bool operator!=(const SingularPart& a, const SingularPart& b) { return !(a == b); }
};

/// Jet of a multi-valued germ in the Z_mu lattice: a finite Laurent table
/// (p, q) with p + q <= order and p, q >= -depth, plus ln Z_mu and ln Zbar_mu
/// parts whose coefficients are ordinary jets.
class LogLaurentGerm {
public:
    using Key = std::pair<int, int>;

    LogLaurentGerm(int order, Mu mu);

    int order() const { return order_; }
    int depth() const { return depth_; }
    const Mu& mu() const { return mu_; }
    const Basis& basis() const { return basis_; }

    const std::map<Key, PiCoeff>& laurent() const { return laurent_; }
    PiCoeff laurent_coeff(int p, int q) const;
    void set_laurent(int p, int q, const PiCoeff& c);

    const SmoothJet& lnz() const { return lnz_; }
    const SmoothJet& lnzbar() const { return lnzbar_; }
    void set_lnz(SmoothJet f);
    void set_lnzbar(SmoothJet f);

    bool is_zero() const;

    LogLaurentGerm operator-() const;
    LogLaurentGerm& operator+=(const LogLaurentGerm& o);
    LogLaurentGerm& operator-=(const LogLaurentGerm& o);
    friend LogLaurentGerm operator+(LogLaurentGerm a, const LogLaurentGerm& b) { return a += b; }
    friend LogLaurentGerm operator-(LogLaurentGerm a, const LogLaurentGerm& b) { return a -= b; }
    LogLaurentGerm scaled(const GaussRational& c) const;

    LogLaurentGerm conj() const;
    /// (f - conj f) / 2i; the result is fixed by conj.
    LogLaurentGerm im() const;
    bool is_real_germ() const;

    /// Embed a power-series jet (Zmu basis matching mu) as a germ.
    static LogLaurentGerm from_smooth(const SmoothJet& f, const Mu& mu);
    /// Subtract a power-series jet from the p,q >= 0 region.
    void subtract_smooth(const SmoothJet& f);

    SingularPart singular_part() const;
    bool is_smooth() const { return singular_part().empty(); }
    /// The p,q >= 0 entries as a jet (canonical smooth representative).
    SmoothJet smooth_lattice_jet() const;

    friend bool operator==(const LogLaurentGerm& a, const LogLaurentGerm& b) {
        return a.order_ == b.order_ && a.mu_ == b.mu_ && a.laurent_ == b.laurent_ &&
               a.lnz_ == b.lnz_ && a.lnzbar_ == b.lnzbar_;
    }
    friend bool operator!=(const LogLaurentGerm& a, const LogLaurentGerm& b) { return !(a == b); }

private:
    int order_, depth_;
    Mu mu_;
    Basis basis_;
    std::map<Key, PiCoeff> laurent_;
    SmoothJet lnz_, lnzbar_;
};

/// The germ jet of G ln G for G with first-order invariant mu, written in the
/// Z_mu lattice: sum over l >= 1 of ((-1)^(l-1)/l) v^(l+1) Z_mu^(-l) plus
/// G_C ln Z_mu, where v is the part of G_C of total degree >= 2 in the Z_mu
/// basis. Terms are produced exactly as this formula generates them; only the
/// singular part is meaningful modulo smooth functions.
LogLaurentGerm expand_g_ln_g(const VPlusJet& G, const Mu& mu, int order);

/// Im(G ln G - G) as a germ.
LogLaurentGerm im_g_ln_g_minus_g(const VPlusJet& G, const Mu& mu, int order);

/// sum_j Im(G'_j ln G'_j - G'_j) - sum_j Im(G_j ln G_j - G_j).
LogLaurentGerm tuple_difference(std::span<const VPlusJet> tuple,
                                std::span<const VPlusJet> tuple_prime, const Mu& mu, int order);

/// Singular part of the tuple difference; the tuples are affine admissible at
/// this order iff it is empty.
SingularPart admissibility_difference(std::span<const VPlusJet> tuple,
                                      std::span<const VPlusJet> tuple_prime, const Mu& mu,
                                      int order);

/// True iff sum_j c_j^(l+1) = 0 for every l in 1..m. By the Vandermonde
/// argument this forces every c_j to vanish.
bool power_sums_vanish(const std::vector<GaussRational>& c, int m);

/// Experimental: admissibility across tuples whose entries carry per-index
/// first-order invariants mus[j] (equal within each index pair but possibly
/// varying across j). Foreign lattices are re-expanded in the lattice of
/// mus[0] with antidiagonal ratio terms (Zbar_mu/Z_mu)^k truncated at
/// |k| <= order - 2, so verdicts are at that ratio depth.
SingularPart admissibility_difference_heterogeneous(std::span<const VPlusJet> tuple,
                                                    std::span<const VPlusJet> tuple_prime,
                                                    const std::vector<Mu>& mus, int order);

/// Experimental support: re-express a germ modulo smooth functions in the
/// lattice of another invariant, truncating ratio terms at the given depth.
LogLaurentGerm relattice_mod_smooth(const LogLaurentGerm& g, const Mu& target, int ratio_depth);

}  // namespace focaljet
