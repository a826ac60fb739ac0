#pragma once

#include <string>
#include <vector>

#include "bbwlab/bundle_expr.hpp"
#include "bbwlab/certificate.hpp"
#include "bbwlab/odd_vanish.hpp"

namespace bbwlab {

// An ordered candidate basis E_0, ..., E_m (bottom to top) for a rectangular
// Lefschetz decomposition with r blocks.
struct CollectionSpec {
    GrassmannianSpec space;
    int r = 0;
    std::vector<BundleExpr> basis;
    std::vector<std::string> labels() const;
};

// Certificate for Ext^*(E_j(t), E_i) = H^*(X, E_i (x) E_j^dual (x) O(-t)),
// computed through the Koszul engine.  0 <= i <= j, 0 <= t < r.
Certificate ext_certificate(const CollectionSpec& c, int j, int i, int t);

// Aggregate over the full (i <= j, t) grid with the expected table: the base
// field exactly on the diagonal cells (i = j, t = 0), zero elsewhere.
struct GridCheck {
    Certificate cert;  // children = cells, in (j, i, t) order
    bool pass = false;
    int cells = 0;
    int identity_cells = 0;
    int acyclic_cells = 0;
    int inconclusive_cells = 0;
    std::vector<std::string> failures;
};

GridCheck check_lefschetz_basis(const CollectionSpec& c);

// Certifies Lambda^2 Q in the left orthogonal of <U, O>: Ext^*(L2Q, O) and
// Ext^*(L2Q, U) vanish via the ambient Koszul route.  Records the four-term
// presentation 0 -> S^2 U -> V (x) U -> Lambda^2 V (x) O -> Lambda^2 Q -> 0
// identifying the right mutation of S^2 U, and exercises the near-miss
// comparison (1,1,0) vs (2,0,0) from the pairing lemma.
struct MutationCheck {
    Certificate cert;
    bool pass = false;
};

MutationCheck s2_mutation_orthogonality(const GrassmannianSpec& space);

}  // namespace bbwlab
