#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bbwlab {

// Weakly decreasing integer sequence of fixed length n, indexing the Schur
// functor Sigma^lambda of a rank-n bundle.  Entries may be negative; a weight
// with all entries >= 0 is a Young diagram with at most n rows.
//
// Lengths are never padded or truncated implicitly: (1,1) and (1,1,0) are
// distinct weights.  Conversions happen explicitly at call sites.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> entries);

    static Weight zero(int n);

    int length() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool is_diagram() const;      // last entry >= 0 (or empty)
    bool is_zero() const;
    long long box_count() const;  // sum of entries

    std::string str() const;      // "(2,1,0)"

    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<int> entries_;
};

// A dominant weight with all entries >= 0: a Young diagram with at most n
// rows.  The diagram-only operations (transpose and friends) are exposed on
// this type alone, so applying them to a general weight is a compile error.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(Weight w);  // throws on negative entries
    explicit YoungDiagram(std::vector<int> entries) : YoungDiagram(Weight(std::move(entries))) {}

    const Weight& weight() const { return weight_; }
    operator const Weight&() const { return weight_; }  // read-only view

    int length() const { return weight_.length(); }
    int operator[](int i) const { return weight_[i]; }
    long long box_count() const { return weight_.box_count(); }

    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    Weight weight_;
};

// (-lambda_n, ..., -lambda_1).  Sigma^lambda U == Sigma^{dual_negate(lambda)} U*.
// Involutive.
Weight dual_negate(const Weight& w);

// Transposed diagram, of length lambda_1 (length 0 for the zero diagram):
// (lambda^T)_j = #{ i : lambda_i >= j }.
YoungDiagram transpose(const YoungDiagram& diagram);

// d(lambda) = max{ i : lambda_i >= i }, 0 for the zero diagram.
int diagonal_length(const YoungDiagram& diagram);

// Subtract 1 from the first d(lambda) entries of the transpose; true iff the
// result is still a diagram and equals its own transpose.  Diagrams of this
// kind index the irreducible summands of Lambda^k(Lambda^2 U).
bool is_almost_symmetric(const YoungDiagram& diagram);

// Explicit zero-padding on the right to length n (requires n >= length and a
// diagram, so the result is still weakly decreasing).
Weight padded(const Weight& w, int n);

// inner_i <= outer_i for all i (same length required).
bool contains(const Weight& outer, const Weight& inner);

}  // namespace bbwlab
