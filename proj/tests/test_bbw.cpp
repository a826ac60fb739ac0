#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "bbwlab/bbw.hpp"

using namespace bbwlab;

namespace {

Weight w(std::vector<int> e) { return Weight(std::move(e)); }

void for_each_diagram_in_box(int rows, int maxpart, const std::function<void(const Weight&)>& f) {
    std::vector<int> e(static_cast<std::size_t>(rows), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == rows) {
            f(Weight(e));
            return;
        }
        const int hi = i == 0 ? maxpart : e[static_cast<std::size_t>(i - 1)];
        for (int v = 0; v <= hi; ++v) {
            e[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

// Exact cohomology of the hyperplane section IGr(2,4) in Gr(2,4) through the
// two-term Koszul complex O(-1) -> O; decides acyclicity whenever the Euler
// characteristic or a one-sided collapse settles it.
std::optional<bool> igr24_restriction_oracle(const Weight& lam) {
    const GrassmannianSpec gr = GrassmannianSpec::gr(2, 4);
    const CohomologyOutcome a = bbw_gr(gr, lam, Weight::zero(2));
    const CohomologyOutcome b = bbw_gr(gr, det_shift(lam, -1), Weight::zero(2));
    if (!a.nonzero() && !b.nonzero()) return true;   // restriction vanishes
    if (a.nonzero() != b.nonzero()) return false;    // single column survives
    if (a.euler() != b.euler()) return false;        // chi(X) != 0
    return std::nullopt;                             // cancellation undecidable here
}

}  // namespace

TEST_CASE("bbw on the projective line") {
    const GrassmannianSpec p1 = GrassmannianSpec::gr(1, 2);
    // O(-2): H^1 = k.  Line-bundle oracle: h^0(O(d)) = d+1 for d >= 0 plus
    // Serre duality downstairs.
    CohomologyOutcome o = bbw_gr(p1, w({-2}), w({0}));
    REQUIRE(o.kind == CohomologyOutcome::Kind::Determined);
    CHECK(o.sole_degree() == 1);
    CHECK(o.dim_at(1) == 1);
    CHECK(o.graded[1][0].gamma == w({-1, -1}));

    CHECK(bbw_gr(p1, w({-1}), w({0})).kind == CohomologyOutcome::Kind::Acyclic);

    for (int d = 0; d <= 5; ++d) {
        CohomologyOutcome od = bbw_gr(p1, w({d}), w({0}));
        REQUIRE(od.kind == CohomologyOutcome::Kind::Determined);
        CHECK(od.sole_degree() == 0);
        CHECK(od.dim_at(0) == d + 1);
    }
}

TEST_CASE("bbw structure sheaf on any Gr") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            CohomologyOutcome o =
                bbw_gr(GrassmannianSpec::gr(k, n), Weight::zero(k), Weight::zero(n - k));
            REQUIRE(o.kind == CohomologyOutcome::Kind::Determined);
            CHECK(o.sole_degree() == 0);
            CHECK(o.dim_at(0) == 1);
        }
}

TEST_CASE("borel-weil: degree zero for dominant diagram pairs") {
    // For lambda a diagram, H^*(Gr, Sigma^lambda U*) is Sigma^lambda' V* in
    // degree 0, where lambda' is lambda padded with zeros.
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 7}}) {
        const GrassmannianSpec x = GrassmannianSpec::gr(k, n);
        for_each_diagram_in_box(k, 3, [&](const Weight& lam) {
            const CohomologyOutcome o = bbw_gr(x, lam, Weight::zero(n - k));
            REQUIRE(o.kind == CohomologyOutcome::Kind::Determined);
            CHECK(o.sole_degree() == 0);
            REQUIRE(o.graded.at(0).size() == 1);
            CHECK(o.graded.at(0)[0].gamma == padded(lam, n));
        });
    }
}

TEST_CASE("bbw outcome carries alpha and the inversion count") {
    const GrassmannianSpec x = GrassmannianSpec::gr(2, 4);
    CohomologyOutcome o = bbw_gr(x, w({-1, -1}), w({2, 0}));
    REQUIRE(o.kind == CohomologyOutcome::Kind::Determined);
    CHECK(o.alpha == std::vector<int>{3, 2, 4, 1});
    CHECK(o.inversions == 2);
    CHECK(o.sole_degree() == 2);
}

TEST_CASE("kapranov pairing examples") {
    const GrassmannianSpec gr24 = GrassmannianSpec::gr(2, 4);
    CohomologyOutcome a = kapranov_pairing(gr24, w({1, 1}), w({2, 0}));
    REQUIRE(a.kind == CohomologyOutcome::Kind::Determined);
    CHECK(a.sole_degree() == 2);
    CHECK(a.dim_at(2) == 1);

    CHECK(kapranov_pairing(gr24, w({1, 0}), w({2, 0})).kind ==
          CohomologyOutcome::Kind::Acyclic);

    const GrassmannianSpec gr37 = GrassmannianSpec::gr(3, 7);
    CohomologyOutcome c = kapranov_pairing(gr37, Weight::zero(3), Weight::zero(4));
    REQUIRE(c.kind == CohomologyOutcome::Kind::Determined);
    CHECK(c.sole_degree() == 0);
    CHECK(c.dim_at(0) == 1);

    CHECK_THROWS_AS(kapranov_pairing(gr24, w({3, 0}), w({1, 0})), std::invalid_argument);
}

TEST_CASE("kapranov dichotomy sweep on Gr(2,5) and Gr(3,6)") {
    for (auto [k, n] : {std::pair{2, 5}, std::pair{3, 6}}) {
        const GrassmannianSpec x = GrassmannianSpec::gr(k, n);
        for_each_diagram_in_box(k, n - k, [&](const Weight& lam) {
            for_each_diagram_in_box(n - k, k, [&](const Weight& mu) {
                const CohomologyOutcome o = kapranov_pairing(x, lam, mu);
                const bool dual_pair = padded(transpose(YoungDiagram(mu)), k) == lam;
                if (dual_pair) {
                    REQUIRE(o.kind == CohomologyOutcome::Kind::Determined);
                    CHECK(o.sole_degree() == lam.box_count());
                    CHECK(o.dim_at(o.sole_degree()) == 1);
                } else {
                    CHECK(o.kind == CohomologyOutcome::Kind::Acyclic);
                }
            });
        });
    }
}

TEST_CASE("generalized vanishing criterion") {
    const GrassmannianSpec gr37 = GrassmannianSpec::gr(3, 7);
    // transpose equality: no conclusion
    CHECK(kap_gen_vanishes(gr37, w({1, 1, 0}), w({2, 0, 0, 0}), 2, 2) ==
          VanishVerdict::NoConclusion);
    // transposes differ: vanishing, confirmed by the full engine
    CHECK(kap_gen_vanishes(gr37, w({2, 0, 0}), w({2, 0, 0, 0}), 2, 2) ==
          VanishVerdict::Vanishes);
    CHECK(bbw_gr(gr37, dual_negate(w({2, 0, 0})), w({2, 0, 0, 0})).kind ==
          CohomologyOutcome::Kind::Acyclic);
    // precondition violation is an error, distinct from NoConclusion
    CHECK_THROWS_AS(kap_gen_vanishes(gr37, w({3, 0, 0}), w({1, 0, 0, 0}), 2, 2),
                    std::invalid_argument);
}

TEST_CASE("generalized vanishing is sound against bbw_gr") {
    const GrassmannianSpec x = GrassmannianSpec::gr(3, 7);
    const int p = 2, q = 2;
    for_each_diagram_in_box(p, q, [&](const Weight& head) {
        // extend the head arbitrarily below (here: by zeros) and pad mu
        const Weight lam = padded(head, 3);
        for_each_diagram_in_box(q, p, [&](const Weight& mu_head) {
            const Weight mu = padded(mu_head, 4);
            if (kap_gen_vanishes(x, lam, mu, p, q) == VanishVerdict::Vanishes)
                CHECK(bbw_gr(x, dual_negate(lam), mu).kind ==
                      CohomologyOutcome::Kind::Acyclic);
        });
    });
}

TEST_CASE("type-C criterion examples") {
    CohomologyOutcome a = sp_acyclic(GrassmannianSpec::igr(2, 4), w({0, -1}));
    CHECK(a.kind == CohomologyOutcome::Kind::CertifiedAcyclic);
    CHECK(a.alpha == std::vector<int>{2, 0});
    CHECK(a.criterion == "zero-or-collision");

    CohomologyOutcome b = sp_acyclic(GrassmannianSpec::igr(3, 8), w({-1, -2, -3}));
    CHECK(b.kind == CohomologyOutcome::Kind::CertifiedAcyclic);
    CHECK(b.alpha == std::vector<int>{3, 1, -1, 1});

    CohomologyOutcome c = sp_acyclic(GrassmannianSpec::igr(3, 8), Weight::zero(3));
    CHECK(c.kind == CohomologyOutcome::Kind::Unknown);
    CHECK(c.alpha == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("type-C criterion is sound on IGr(2,4)") {
    const GrassmannianSpec igr = GrassmannianSpec::igr(2, 4);
    int confirmed = 0;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= a; ++b) {
            const Weight lam = w({a, b});
            if (sp_acyclic(igr, lam).kind != CohomologyOutcome::Kind::CertifiedAcyclic)
                continue;
            auto oracle = igr24_restriction_oracle(lam);
            if (oracle.has_value()) {
                CHECK(*oracle);  // certified vanishing must agree with the restriction
                ++confirmed;
            }
        }
    CHECK(confirmed >= 5);  // the sweep is not vacuous
}

TEST_CASE("at most one nonzero degree in any determined outcome") {
    std::mt19937 rng(20240711);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        auto sorted_weight = [&](int len) {
            std::vector<int> e(static_cast<std::size_t>(len));
            for (int& x : e) x = entry(rng);
            std::sort(e.begin(), e.end(), std::greater<int>());
            return Weight(e);
        };
        const CohomologyOutcome o = bbw_gr(GrassmannianSpec::gr(k, n), sorted_weight(k),
                                           sorted_weight(n - k));
        if (o.nonzero()) CHECK(o.graded.size() == 1);
    }
}

TEST_CASE("serre duality sweep") {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> entry(-5, 5);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);  // n <= 7
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        auto sorted_weight = [&](int len) {
            std::vector<int> e(static_cast<std::size_t>(len));
            for (int& x : e) x = entry(rng);
            std::sort(e.begin(), e.end(), std::greater<int>());
            return Weight(e);
        };
        const GrassmannianSpec x = GrassmannianSpec::gr(k, n);
        const Weight lam = sorted_weight(k);
        const Weight mu = sorted_weight(n - k);
        const CohomologyOutcome o = bbw_gr(x, lam, mu);
        // dual bundle twisted by the canonical O(-n), encoded on the U side
        const CohomologyOutcome od =
            bbw_gr(x, det_shift(dual_negate(lam), -n), dual_negate(mu));
        CHECK(o.nonzero() == od.nonzero());
        if (o.nonzero()) {
            CHECK(od.sole_degree() == x.dim() - o.sole_degree());
            CHECK(od.dim_at(od.sole_degree()) == o.dim_at(o.sole_degree()));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("equivariant encodings of O(t) agree up to the det character") {
    // Sigma^lambda U* (x) O(t) can be pushed to the U side or the Q side; the
    // degree and dimension must match (the weights differ by a det twist).
    const GrassmannianSpec x = GrassmannianSpec::gr(2, 5);
    for (int t = -4; t <= 4; ++t) {
        const CohomologyOutcome u_side = bbw_gr(x, det_shift(w({1, 0}), t), Weight::zero(3));
        const CohomologyOutcome q_side = bbw_gr(x, w({1, 0}), det_shift(Weight::zero(3), -t));
        CHECK(u_side.nonzero() == q_side.nonzero());
        if (u_side.nonzero()) {
            CHECK(u_side.sole_degree() == q_side.sole_degree());
            CHECK(u_side.dim_at(u_side.sole_degree()) == q_side.dim_at(q_side.sole_degree()));
        }
    }
}
