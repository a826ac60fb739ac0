#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bbwlab/bundle_expr.hpp"
#include "bbwlab/lefschetz.hpp"

namespace bbwlab {

// Euler characteristic of a bundle on an odd isotropic Grassmannian: the
// alternating sum over the Koszul terms, each evaluated exactly through
// bbw_gr.  Exact even when the graded cohomology is undetermined.
std::int64_t euler_char(const GrassmannianSpec& odd_igr, const PairDecomposition& dec);
std::int64_t euler_char(const GrassmannianSpec& odd_igr, const BundleExpr& expr);

// Integer matrix of Euler pairings chi(E_a, E_b) over the twisted collection
// (E_i(t), ordered bottom to top, left to right).
struct GramMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::int64_t>> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool unitriangular() const;            // 1 on the diagonal, 0 strictly below
    std::int64_t determinant() const;      // exact (fraction-free elimination)
    std::string table() const;             // aligned plain text
};

GramMatrix gram_matrix(const CollectionSpec& c);

// Number of torus fixed points, by enumeration of coordinate subspaces
// (isotropic ones for the symplectic families; the odd case may use the
// kernel vector).  Equals the rank of K_0 for these cellular varieties.
std::int64_t fixed_point_count(const GrassmannianSpec& spec);

// Rank bookkeeping for IGr(3,7) through the projective-bundle and blow-up
// decompositions: 4 * rk K0(LGr(3,6)) - (c-1) * rk K0(IGr(2,6)) with c = 2
// must give rk K0(IGr(3,7)) = 20 = the collection length.  Includes a
// negative control with the wrong codimension.
struct RankReport {
    std::int64_t lgr36 = 0, igr26 = 0, igr37 = 0;
    int blocks = 4;
    int codim = 2;
    std::int64_t predicted = 0;
    std::int64_t collection_length = 20;
    bool identity_pass = false;
    bool length_pass = false;
    std::int64_t perturbed_predicted = 0;  // codim 3 instead of 2
    bool negative_control_pass = false;    // the perturbed identity must fail
    bool pass = false;
    std::string summary() const;
};

RankReport rank_consistency_igr37();

}  // namespace bbwlab
