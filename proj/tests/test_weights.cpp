#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "bbwlab/weights.hpp"

using namespace bbwlab;

namespace {

Weight w(std::vector<int> e) { return Weight(std::move(e)); }
YoungDiagram yd(std::vector<int> e) { return YoungDiagram(std::move(e)); }

// All diagrams with at most `rows` rows and at most `boxes` boxes.
void for_each_diagram(int rows, int boxes, const std::function<void(const Weight&)>& f) {
    std::vector<int> part;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        std::vector<int> e = part;
        e.resize(static_cast<std::size_t>(rows), 0);
        f(Weight(e));
        if (static_cast<int>(part.size()) == rows) return;
        for (int p = std::min(left, maxp); p >= 1; --p) {
            part.push_back(p);
            rec(left - p, p);
            part.pop_back();
        }
    };
    rec(boxes, boxes);
}

}  // namespace

TEST_CASE("weight invariants") {
    CHECK_THROWS_AS(w({1, 2}), std::invalid_argument);
    CHECK(w({3, 1, -2}).length() == 3);
    CHECK(w({0, 0}).is_diagram());
    CHECK_FALSE(w({0, -1}).is_diagram());
    CHECK(Weight::zero(4).is_zero());
    CHECK(w({2, 1}).box_count() == 3);
}

TEST_CASE("transpose on stated shapes") {
    CHECK(transpose(yd({2, 1})) == yd({2, 1}));        // hook, self-transpose
    CHECK(transpose(yd({3, 1})) == yd({2, 1, 1}));
    CHECK(transpose(yd({0, 0, 0})) == YoungDiagram(Weight::zero(0)));
    // negative entries cannot even be wrapped: the domain error is type-level
    CHECK_THROWS_AS(YoungDiagram(w({1, -1})), std::invalid_argument);
}

TEST_CASE("transpose involution and box count") {
    for_each_diagram(5, 8, [](const Weight& dw) {
        const YoungDiagram d{dw};
        const YoungDiagram t = transpose(d);
        CHECK(t.box_count() == d.box_count());
        // Involution after padding back to the original length, when the
        // diagram fits (at most d.length() rows after transposing twice).
        const YoungDiagram tt = transpose(t);
        CHECK(padded(tt, d.length()) == dw);
    });
}

TEST_CASE("diagonal length") {
    CHECK(diagonal_length(yd({2, 1, 1})) == 1);
    CHECK(diagonal_length(yd({2, 2})) == 2);
    CHECK(diagonal_length(YoungDiagram(Weight::zero(0))) == 0);
    CHECK(diagonal_length(YoungDiagram(Weight::zero(3))) == 0);
    CHECK(diagonal_length(yd({4, 3, 3, 1})) == 3);
}

TEST_CASE("almost symmetric") {
    CHECK(is_almost_symmetric(yd({1, 1})));
    CHECK(is_almost_symmetric(yd({2, 1, 1})));
    CHECK_FALSE(is_almost_symmetric(yd({2, 2})));
    CHECK(is_almost_symmetric(YoungDiagram(Weight::zero(3))));
    CHECK_FALSE(is_almost_symmetric(yd({2, 0})));  // subtracting 1 breaks weak decrease
}

TEST_CASE("dual_negate") {
    CHECK(dual_negate(w({2, 1, 0})) == w({0, -1, -2}));
    CHECK(dual_negate(Weight::zero(5)) == Weight::zero(5));
    const Weight x = w({3, 1, -2});
    CHECK(dual_negate(dual_negate(x)) == x);
}

TEST_CASE("dual_negate reverses containment") {
    const Weight a = w({3, 2, 0});
    const Weight b = w({2, 1, 0});
    CHECK(contains(a, b));
    CHECK(contains(dual_negate(b), dual_negate(a)));
}

TEST_CASE("padding is explicit") {
    CHECK(padded(w({2, 1}), 4) == w({2, 1, 0, 0}));
    CHECK_THROWS_AS(padded(w({2, 1}), 1), std::invalid_argument);
}
