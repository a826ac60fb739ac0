#pragma once

#include <vector>

#include "bbwlab/bbw.hpp"
#include "bbwlab/bundle_expr.hpp"
#include "bbwlab/certificate.hpp"

namespace bbwlab {

// Koszul resolution of the structure sheaf of IGr(k, 2n+1) inside
// Gr(k, 2n+1): the skew form is a regular section of Lambda^2 U*, so term s
// is Lambda^s(Lambda^2 U), s = 0 .. k(k-1)/2, each a multiset of U-side
// Schur weights of rank k.
std::vector<WeightMultiset> koszul_terms_gr(const GrassmannianSpec& odd_igr);

// Koszul resolution of the submaximal odd Grassmannian IGr(n, 2n+1) inside
// the even IGr(n, 2n+2) (zero locus of a regular section of U*): term p is
// the single column diagram (1^p), p = 0 .. n.
std::vector<WeightMultiset> koszul_terms_even(const GrassmannianSpec& odd_igr);

// H^*(X, expr) for X an odd isotropic Grassmannian, computed on the ambient
// type-A Grassmannian through the Koszul resolution.  Every summand of every
// Koszul term goes through bbw_gr; a term at Koszul index s with BBW degree d
// contributes in total degree d - s.  The verdict is Determined only when all
// nonzero leaves share one s (spectral sequence collapse); the Euler
// characteristic is exact regardless.
Certificate cohomology_on_X(const GrassmannianSpec& odd_igr, const PairDecomposition& dec,
                            std::string claim);
Certificate cohomology_on_X(const GrassmannianSpec& odd_igr, const BundleExpr& expr);

// Direct type-A evaluation (no Koszul column): the sum of BBW outcomes over
// the irreducible pairs.  Always conclusive.
Certificate cohomology_on_gr(const GrassmannianSpec& gr, const PairDecomposition& dec,
                             std::string claim);

// One-sided evaluation on an even isotropic Grassmannian: runs the type-C
// criterion on every summand.  Only U-side bundles are supported.
Certificate cohomology_on_igr_even(const GrassmannianSpec& even_igr,
                                   const PairDecomposition& dec, std::string claim);

enum class LemmaVariant { Even, Odd };

// The gap conditions of the vanishing lemmas: lambda_n < 0,
// lambda_1 >= -(n+2) and gaps <= 3 (even), lambda_1 >= -(n+1) and gaps <= 2
// (odd).
bool check_main_conditions(int n, const Weight& lambda, LemmaVariant variant);

// Certifies H^*(IGr(n, 2n+1), Sigma^lambda U*) = 0 through the even embedding:
// decomposes Sigma^lambda U* (x) Lambda^p U for p = 0..n by pieri_col and runs
// the type-C criterion on every summand over IGr(n, 2n+2).  One-sided: Unknown
// leaves yield Inconclusive, never a nonvanishing claim.
Certificate certify_acyclic_submaximal(int n, const Weight& lambda);

}  // namespace bbwlab
