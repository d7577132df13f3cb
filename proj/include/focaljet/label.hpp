#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focaljet/jet.hpp"

namespace focaljet {

/// Complete focus-focus label of multiplicity m: transition matrix g[j][l]
/// (second components, XY basis, positive Y-coefficients) and per-index
/// series ts[j] with constant terms allowed. Plain data; validate() reports
/// the violated relations instead of enforcing them.
struct CompleteFFLabel {
    int m = 1;
    int order = 1;
    std::vector<SmoothJet> ts;
    std::vector<std::vector<SmoothJet>> g;

    friend bool operator==(const CompleteFFLabel&, const CompleteFFLabel&) = default;
};

/// Focus-focus label: like a complete label but the s[j] have no constant
/// term and are representatives modulo (2 pi X)Z, normalized so the pi-part
/// of the X-coefficient has real part in [0, 2).
struct FFLabel {
    int m = 1;
    int order = 1;
    std::vector<SmoothJet> s;
    std::vector<std::vector<SmoothJet>> g;

    friend bool operator==(const FFLabel&, const FFLabel&) = default;
};

/// Normalize a series representative modulo (2 pi X)Z.
SmoothJet normalize_mod_2pix(const SmoothJet& s);

/// Build the full label from the chain g[j][j+1], j = 0..m-2, and ts[0].
/// The remaining matrix entries come from the groupoid closure and the ts[j]
/// from transporting the seed along the chain.
CompleteFFLabel generate_complete(int m, const std::vector<SmoothJet>& chain,
                                  const SmoothJet& seed, int order);
FFLabel generate_ff(int m, const std::vector<SmoothJet>& chain, const SmoothJet& seed, int order);

/// Chain and seed recovering a validated label through generate.
std::pair<std::vector<SmoothJet>, SmoothJet> extract_generators(const CompleteFFLabel& l);

/// Violated relations, one human-readable line each; empty iff the label is
/// valid at its order.
std::vector<std::string> validate(const CompleteFFLabel& l);
std::vector<std::string> validate(const FFLabel& l);

/// s'_j(X,Y) = s_j(-X,Y) + k pi X, g'_{j,l}(X,Y) = g_{j,l}(-X,Y).
FFLabel z2_action(const FFLabel& l, long k);

/// ts'_j = ts_{sigma(j)}, g'_{j,l} = g_{sigma(j), sigma(l)}.
CompleteFFLabel zm_reindex(const CompleteFFLabel& l, const std::vector<int>& sigma);
FFLabel zm_reindex(const FFLabel& l, const std::vector<int>& sigma);

/// ts_j += 2 pi (k X + b).
CompleteFFLabel zr_shift(const CompleteFFLabel& l, long k, const Rational& b);

/// Drop constant terms and pass to the (2 pi X)Z quotient.
FFLabel complete_to_ff(const CompleteFFLabel& l);

bool is_cyclic_permutation(const std::vector<int>& sigma);
/// Equality after some cyclic rotation of the indices.
bool equal_up_to_cyclic(const CompleteFFLabel& a, const CompleteFFLabel& b);

/// The rotation sigma(j) = j + c mod m.
std::vector<int> rotation_perm(int m, int c);

}  // namespace focaljet
