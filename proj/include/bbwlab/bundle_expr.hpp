#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbwlab/bbw.hpp"
#include "bbwlab/schur.hpp"
#include "bbwlab/weights.hpp"

namespace bbwlab {

// Parse failure with position and expectation, for CLI diagnostics.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
    std::size_t position;
};

// Symbolic equivariant bundle over a Grassmannian: generators U, U*, Q, Q*,
// O(t); operators Schur^lambda, Lambda^k, S^k, tensor, sum, dual.
//
// Grammar:   expr   := term ('+' term)*
//            term   := factor ('*' factor)*
//            factor := 'dual' '(' expr ')'
//                    | 'wedge' '^' INT '(' expr ')'
//                    | 'sym'   '^' INT '(' expr ')'
//                    | 'schur' '[' INT (',' INT)* ']' '(' expr ')'
//                    | 'U' | 'Ud' | 'Q' | 'Qd' | 'O' ('(' INT ')')?
//                    | '(' expr ')'
struct BundleExpr {
    enum class Op { U, Ud, Q, Qd, Line, Schur, Wedge, Sym, Dual, Tensor, Sum };

    Op op = Op::Line;
    int arg = 0;              // Line: twist; Wedge/Sym: exponent
    std::vector<int> weight;  // Schur
    std::vector<BundleExpr> kids;

    static BundleExpr parse(const std::string& text);

    static BundleExpr line(int t);
    static BundleExpr gen(Op which);
    static BundleExpr wedge(int k, BundleExpr inner);
    static BundleExpr sym(int k, BundleExpr inner);
    static BundleExpr dual(BundleExpr inner);
    static BundleExpr tensor(BundleExpr a, BundleExpr b);

    std::string str() const;
};

// Normal form of a bundle expression on Gr/IGr(k, ambient): a multiset of
// irreducible pairs Sigma^u U (x) Sigma^q Q* (u on the U side of length k,
// q on the Q* side of length ambient-k).
class PairDecomposition {
public:
    using Key = std::pair<Weight, Weight>;

    PairDecomposition(int sub_rank, int quot_rank)
        : sub_rank_(sub_rank), quot_rank_(quot_rank) {}

    static PairDecomposition unit(int sub_rank, int quot_rank);  // the structure sheaf

    int sub_rank() const { return sub_rank_; }
    int quot_rank() const { return quot_rank_; }
    // lvalue-only: iterating terms() of a temporary would dangle
    const std::map<Key, std::int64_t>& terms() const& { return terms_; }
    const std::map<Key, std::int64_t>& terms() const&& = delete;
    bool empty() const { return terms_.empty(); }

    void add(const Weight& u, const Weight& q, std::int64_t mult = 1);

    PairDecomposition dualized() const;
    PairDecomposition twisted(int t) const;  // (x) O(t)
    PairDecomposition tensor(const PairDecomposition& other) const;
    PairDecomposition plus(const PairDecomposition& other) const;

    std::string str() const;

private:
    int sub_rank_, quot_rank_;
    std::map<Key, std::int64_t> terms_;
};

// Expands an expression into its pair decomposition over the ambient
// Grassmannian of the spec.  Throws std::invalid_argument on rank mismatches
// and on plethysms outside the supported fragment (Lambda^k / S^k of a
// generator, Lambda^k(Lambda^2 of a generator), powers of line bundles).
PairDecomposition normalize(const BundleExpr& e, const GrassmannianSpec& spec);

}  // namespace bbwlab
