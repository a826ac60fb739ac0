#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbwlab/schur.hpp"
#include "bbwlab/weights.hpp"

namespace bbwlab {

enum class Family { GrA, IGrEven, IGrOdd };

// Gr(k, n), IGr(k, 2n) or IGr(k, 2n+1), identified by subspace dimension k
// and ambient dimension.
struct GrassmannianSpec {
    Family family = Family::GrA;
    int k = 1;
    int ambient = 2;

    static GrassmannianSpec gr(int k, int n);
    static GrassmannianSpec igr(int k, int ambient);  // even or odd by parity

    int quotient_rank() const { return ambient - k; }
    // n in IGr(k, 2n) / IGr(k, 2n+1); equals ambient for Gr.
    int half() const { return family == Family::GrA ? ambient : ambient / 2; }
    int dim() const;
    // Fano index r:  K = -rH.
    int index() const;
    std::string str() const;

    friend bool operator==(const GrassmannianSpec&, const GrassmannianSpec&) = default;
};

// One irreducible piece Sigma^gamma V* of a cohomology group.
struct GradedPiece {
    Weight gamma;
    std::int64_t dim = 0;

    friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

// Result of a Borel-Bott-Weil or type-C computation.  Type-A outcomes are
// exact (Acyclic / Determined); the type-C criterion is one-sided and only
// ever reports CertifiedAcyclic or Unknown.  The rho-shifted sequence alpha
// (and the inversion count, when defined) is kept so certificates can be
// re-checked without the library.
struct CohomologyOutcome {
    enum class Kind { Acyclic, Determined, CertifiedAcyclic, Unknown };

    Kind kind = Kind::Acyclic;
    std::map<int, std::vector<GradedPiece>> graded;  // Determined only
    std::vector<int> alpha;
    std::optional<int> inversions;
    std::string criterion;  // type-C: "zero-or-collision"

    bool nonzero() const { return kind == Kind::Determined; }
    // Single degree of a Determined outcome (BBW yields exactly one).
    int sole_degree() const;
    std::int64_t dim_at(int degree) const;
    std::int64_t euler() const;  // 0 unless Determined
    std::string str() const;
};

// H^*(Gr(k, n), Sigma^lambda U* (x) Sigma^mu Q*): builds the rho-shifted
// sequence alpha; a repeated entry kills cohomology, otherwise the unique
// descending sort sigma places Sigma^gamma V* in degree l(sigma).
CohomologyOutcome bbw_gr(const GrassmannianSpec& X, const Weight& lambda_u_dual,
                         const Weight& mu_q_dual);

// H^*(Gr(k, n), Sigma^lambda U (x) Sigma^mu Q*) for diagrams inside the
// k x (n-k) box: the base field in degree |lambda| when lambda = mu^T,
// zero otherwise.  Rejects out-of-bounds diagrams.
CohomologyOutcome kapranov_pairing(const GrassmannianSpec& X, const Weight& lambda_u,
                                   const Weight& mu_q_dual);

enum class VanishVerdict { Vanishes, NoConclusion };

// Sufficient vanishing test for H^*(Sigma^lambda U (x) Sigma^mu Q*) reading
// only the first p entries of lambda and q of mu: if the leading blocks are
// within the q x p / p x q boxes and are not transposes of each other, the
// bundle is acyclic.  Precondition violations throw (distinct from
// NoConclusion).
VanishVerdict kap_gen_vanishes(const GrassmannianSpec& X, const Weight& lambda_u,
                               const Weight& mu_q_dual, int p, int q);

// Type-C criterion on IGr(k, 2n) for Sigma^lambda U*: with
// alpha = (n+lambda_1, ..., n-k+1+lambda_k, n-k, ..., 1), a zero entry or two
// entries of equal absolute value certify acyclicity; otherwise Unknown.
// The zero-entry clause follows the proof ("strictly positive and distinct"),
// which is stronger than the statement; certificates carry the criterion id.
CohomologyOutcome sp_acyclic(const GrassmannianSpec& X, const Weight& lambda_u_dual);

}  // namespace bbwlab
