#include "bbwlab/lefschetz.hpp"

#include <stdexcept>

namespace bbwlab {

std::vector<std::string> CollectionSpec::labels() const {
    std::vector<std::string> out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(e.str());
    return out;
}

Certificate ext_certificate(const CollectionSpec& c, int j, int i, int t) {
    const int m = static_cast<int>(c.basis.size());
    if (i < 0 || j < i || j >= m) throw std::invalid_argument("ext_certificate: need 0 <= i <= j");
    if (t < 0 || t >= c.r) throw std::invalid_argument("ext_certificate: need 0 <= t < r");

    const PairDecomposition dec = normalize(c.basis[static_cast<std::size_t>(i)], c.space)
                                      .tensor(normalize(c.basis[static_cast<std::size_t>(j)], c.space)
                                                  .dualized())
                                      .twisted(-t);
    std::string claim = "Ext*(" + c.basis[static_cast<std::size_t>(j)].str() + "(" +
                        std::to_string(t) + "), " + c.basis[static_cast<std::size_t>(i)].str() +
                        ") on " + c.space.str();
    return cohomology_on_X(c.space, dec, std::move(claim));
}

GridCheck check_lefschetz_basis(const CollectionSpec& c) {
    GridCheck check;
    check.cert.claim = "Lefschetz basis grid for <" + [&] {
        std::string s;
        for (std::size_t i = 0; i < c.basis.size(); ++i) {
            if (i) s += ", ";
            s += c.basis[i].str();
        }
        return s;
    }() + ">, r = " + std::to_string(c.r) + " on " + c.space.str();

    const int m = static_cast<int>(c.basis.size());
    bool pass = true;
    bool any_inconclusive = false;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i <= j; ++i) {
            for (int t = 0; t < c.r; ++t) {
                Certificate cell = ext_certificate(c, j, i, t);
                ++check.cells;
                const bool identity = i == j && t == 0;
                bool ok;
                if (cell.verdict == Verdict::Inconclusive) {
                    ++check.inconclusive_cells;
                    any_inconclusive = true;
                    ok = false;  // never pass vacuously
                } else if (identity) {
                    ok = cell.single_unit_in_degree_zero();
                    if (ok) ++check.identity_cells;
                } else {
                    ok = cell.verdict == Verdict::Acyclic;
                    if (ok) ++check.acyclic_cells;
                }
                if (!ok) {
                    pass = false;
                    check.failures.push_back(cell.claim + " -> " + verdict_name(cell.verdict));
                }
                check.cert.children.push_back(std::move(cell));
            }
        }
    }
    check.pass = pass;
    check.cert.verdict = pass ? Verdict::Determined : Verdict::Inconclusive;
    if (any_inconclusive) check.cert.notes.push_back("inconclusive cells present: FAIL, not vacuous PASS");
    return check;
}

MutationCheck s2_mutation_orthogonality(const GrassmannianSpec& space) {
    MutationCheck out;
    out.cert.claim = "right mutation of S^2 U through <U, O> lands in the left orthogonal: "
                     "Ext*(L2Q, O) = Ext*(L2Q, U) = 0 on " + space.str();
    out.cert.notes.push_back(
        "mutation target identified by 0 -> S^2 U -> V (x) U -> Lambda^2 V (x) O -> Lambda^2 Q -> 0");

    const BundleExpr l2q = BundleExpr::wedge(2, BundleExpr::gen(BundleExpr::Op::Q));

    // Ext*(L2Q, O) = H*(X, L2Q^dual)
    Certificate ext_o = cohomology_on_X(
        space, normalize(l2q, space).dualized(), "Ext*(wedge^2(Q), O) on " + space.str());
    // Ext*(L2Q, U) = H*(X, U (x) L2Q^dual)
    Certificate ext_u = cohomology_on_X(
        space,
        normalize(BundleExpr::gen(BundleExpr::Op::U), space).tensor(normalize(l2q, space).dualized()),
        "Ext*(wedge^2(Q), U) on " + space.str());

    // The near-miss of the pairing dichotomy: lambda = (1,1,0,...) against
    // mu^T = (2,0,...) — transposes differ, so the pairing vanishes.
    const int k = space.k;
    const int q = space.quotient_rank();
    std::vector<int> lam(static_cast<std::size_t>(k), 0);
    if (k >= 2) lam[0] = lam[1] = 1;
    std::vector<int> mu(static_cast<std::size_t>(q), 0);
    if (q >= 2) mu[0] = mu[1] = 1;
    Certificate near_miss;
    near_miss.claim = "pairing near-miss: lambda = " + Weight(lam).str() + " vs mu^T = " +
                      padded(transpose(YoungDiagram(mu)), k).str();
    const GrassmannianSpec gr = GrassmannianSpec::gr(k, space.ambient);
    CohomologyOutcome pairing = kapranov_pairing(gr, Weight(lam), Weight(mu));
    Certificate::Leaf leaf;
    leaf.koszul_index = 1;
    leaf.u_weight = Weight(lam);
    leaf.q_weight = Weight(mu);
    leaf.outcome = pairing;
    near_miss.leaves.push_back(leaf);
    near_miss.verdict =
        pairing.kind == CohomologyOutcome::Kind::Acyclic ? Verdict::Acyclic : Verdict::Inconclusive;

    out.pass = ext_o.verdict == Verdict::Acyclic && ext_u.verdict == Verdict::Acyclic &&
               near_miss.verdict == Verdict::Acyclic;
    out.cert.verdict = out.pass ? Verdict::Acyclic : Verdict::Inconclusive;
    out.cert.children.push_back(std::move(ext_o));
    out.cert.children.push_back(std::move(ext_u));
    out.cert.children.push_back(std::move(near_miss));
    return out;
}

}  // namespace bbwlab
