#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bbwlab/weights.hpp"

namespace bbwlab {

// Multiset of dominant weights of a fixed ambient rank, with positive integer
// multiplicities.  The value type of every decomposition in this module.
class WeightMultiset {
public:
    explicit WeightMultiset(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    void add(const Weight& w, std::int64_t mult = 1);
    std::int64_t count(const Weight& w) const;
    // lvalue-only: iterating items() of a temporary would dangle
    const std::map<Weight, std::int64_t>& items() const& { return items_; }
    const std::map<Weight, std::int64_t>& items() const&& = delete;
    bool empty() const { return items_.empty(); }
    std::size_t distinct() const { return items_.size(); }
    std::string str() const;

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    int rank_;
    std::map<Weight, std::int64_t> items_;
};

// Horizontal strips: Sigma^lambda (x) S^k = (+)_{mu in HS} Sigma^mu, where
// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... >= mu_n >= lambda_n and
// |mu/lambda| = k.  k = 0 returns {lambda}.
WeightMultiset pieri_row(const Weight& lambda, int k);

// Vertical strips: Sigma^lambda (x) Lambda^k = (+)_{mu in VS} Sigma^mu, where
// lambda_i <= mu_i <= lambda_i + 1 and |mu/lambda| = k.  Empty for k > n
// (rank truncation); k = 0 returns {lambda}.
WeightMultiset pieri_col(const Weight& lambda, int k);

// Entrywise shift by t: tensoring with (det)^t.
Weight det_shift(const Weight& w, int t);

// Littlewood-Richardson decomposition of Sigma^lambda (x) Sigma^mu on a rank-n
// bundle.  mu must be a Young diagram; lambda may have negative entries (it is
// reduced by a determinant shift internally).  Keys with more than n rows are
// discarded (Schur functor rank truncation).
WeightMultiset lr_tensor(const Weight& lambda, const Weight& mu);

// Sigma^a (x) Sigma^b for two arbitrary dominant weights: both sides are
// shifted to diagrams, fed through lr_tensor, and shifted back.
WeightMultiset tensor_product(const Weight& a, const Weight& b);

// Lambda^k(Lambda^2 U) for U of rank n: the almost symmetric diagrams with 2k
// boxes and at most n rows, multiplicity one each.
WeightMultiset wedge_of_wedge_square(int k, int n);

// Dimension of the irreducible GL_N representation with highest weight gamma,
// by the Weyl product formula.  Exact integer arithmetic.
std::int64_t weyl_dimension(const Weight& gamma, int N);

}  // namespace bbwlab
