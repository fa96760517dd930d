#include <doctest.h>

#include "schurder/a2.hpp"
#include "schurder/catalog.hpp"
#include "schurder/homotopy.hpp"

#include <algorithm>

using namespace schurder;

TEST_CASE("realized A2 shapes") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    const int v1 = a2.quiver().vertex_index("1"), v2 = a2.quiver().vertex_index("2");

    ProjComplex e1 = realize({A2Tag::e1, 0, 0});
    CHECK(e1.lo == 1);
    CHECK(e1.terms == std::vector<std::vector<int>>{{v1}});

    ProjComplex a = realize({A2Tag::alpha, 0, 0});
    CHECK(a.lo == 1);
    CHECK(a.terms == std::vector<std::vector<int>>{{v1}, {v2}});

    ProjComplex b2 = realize({A2Tag::ba, 2, 0});
    CHECK(b2.terms == std::vector<std::vector<int>>{{v2}, {v2}, {v2}});
    CHECK(to_string(a2, b2.diffs[0]) == to_string(a2, b2.diffs[1]));

    CHECK(realize({A2Tag::a_ba_b, 3, 0}).terms.size() == 6);
    CHECK(realize({A2Tag::alpha, 0, 2}).lo == -1);
    CHECK_THROWS_AS(realize({A2Tag::ba, 0, 0}), Error);
}

TEST_CASE("shape names round-trip") {
    for (auto& x : a2_grid(3, 3)) CHECK(parse_a2_shape(to_string(x)) == x);
    CHECK(to_string({A2Tag::a_ba, 2, -1}) == "alpha(beta alpha)^2[-1]");
    CHECK_THROWS_AS(parse_a2_shape("gamma[0]"), Error);
    CHECK_THROWS_AS(parse_a2_shape("(beta alpha)^0[0]"), Error);
}

TEST_CASE("cohomology of (beta alpha)^s by hand") {
    // p(ba) on P_2 = <e2, alpha, ba> has rank 1 (only e2 survives), so the
    // ends carry 2-dimensional cohomology and every inner degree 1.
    const Algebra& a2 = catalog_get("A", 2).algebra;
    for (int s = 1; s <= 5; ++s) {
        CohomologyVector want{{1, 2}, {s + 1, 2}};
        for (int j = 2; j <= s; ++j) want[j] = 1;
        CHECK(cohomology(a2, realize({A2Tag::ba, s, 0})).dims == want);
    }
}

TEST_CASE("grid: complexes, indecomposable, pairwise non-isomorphic") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    auto grid = a2_grid(3, 3);
    REQUIRE(grid.size() == 112);
    std::vector<ProjComplex> cs;
    for (auto& x : grid) {
        cs.push_back(realize(x));
        CHECK(check_complex(a2, cs.back()));
        CHECK(in_frak_p(a2, cs.back()));
        CHECK(is_indecomposable(a2, cs.back()));
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK_FALSE(is_isomorphic_K(a2, cs[i], cs[j]));
}

TEST_CASE("enumerate_a2") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    CHECK(enumerate_a2({}).empty());
    CHECK(enumerate_a2({{4, 0}}).empty());
    CHECK(enumerate_a2({{0, 1}, {100, 1}}).empty());

    // The total cohomology grows with s, which is what bounds the search.
    for (auto tag : {A2Tag::ba, A2Tag::a_ba, A2Tag::ba_b, A2Tag::a_ba_b})
        for (int s = 1; s <= 10; ++s) {
            int t = 0;
            for (auto& [i, v] : cohomology(a2, realize({tag, s, 0})).dims) t += v;
            CHECK(t >= s);
        }

    for (auto& x : a2_grid(3, 3)) {
        CohomologyVector h = cohomology(a2, realize(x)).dims;
        auto found = enumerate_a2(h);
        CHECK(std::find(found.begin(), found.end(), x) != found.end());
        for (auto& y : found) CHECK(cohomology(a2, realize(y)).dims == h);
        for (int k : {-2, 5}) {
            auto moved = enumerate_a2(shift(h, k));
            REQUIRE(moved.size() == found.size());
            for (std::size_t t = 0; t < found.size(); ++t) {
                A2Shape y = found[t];
                y.shift += k;
                CHECK(std::find(moved.begin(), moved.end(), y) != moved.end());
            }
        }
    }
}

TEST_CASE("enumerate_a1") {
    CHECK(enumerate_a1({{3, 1}}) == std::vector<int>{3});
    CHECK(enumerate_a1({}).empty());
    CHECK(enumerate_a1({{3, 2}}).empty());
    CHECK(enumerate_a1({{3, 1}, {4, 1}}).empty());
}
