#include <doctest.h>

#include "schurder/catalog.hpp"
#include "schurder/projective.hpp"
#include "schurder/random.hpp"

#include <set>

using namespace schurder;

namespace {

// Independent oracle: quotient dimension of kQ by the ideal, computed from all
// paths up to length L at once (no degree-by-degree completion). Paths are
// arrow-index sequences; the ideal is spanned by u*r*v over all paths u, v.
int brute_force_dim(const Quiver& q, const std::vector<PathCombination>& rels, int L) {
    std::vector<Path> paths;
    for (int v = 0; v < q.num_vertices(); ++v) paths.push_back(trivial_path(v));
    std::size_t lo = 0;
    for (int len = 1; len <= L; ++len) {
        std::size_t hi = paths.size();
        for (std::size_t k = lo; k < hi; ++k)
            for (int a = 0; a < q.num_arrows(); ++a)
                if (auto p = concat(paths[k], arrow_path(q, a))) paths.push_back(*p);
        lo = hi;
    }
    std::map<Path, int> col;
    for (std::size_t i = 0; i < paths.size(); ++i) col[paths[i]] = static_cast<int>(i);
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (auto& r : rels)
        for (auto& u : paths)
            for (auto& v : paths) {
                std::vector<std::pair<int, Rational>> row;
                bool too_long = false;
                for (auto& t : r) {
                    auto ur = concat(u, t.path);
                    if (!ur) continue;
                    auto urv = concat(*ur, v);
                    if (!urv) continue;
                    if (static_cast<int>(urv->length()) > L) { too_long = true; continue; }
                    row.push_back({col.at(*urv), t.coef});
                }
                if (!row.empty() && !too_long) rows.push_back(row);
            }
    MatQ m = zeros<Rational>(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(paths.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i]) m(i, c) += v;
    return static_cast<int>(paths.size()) - static_cast<int>(rank<Rational>(m));
}

int vtx(const Algebra& a, const std::string& n) { return a.quiver().vertex_index(n); }

}  // namespace

TEST_CASE("A2 has dimension 5 and the expected basis") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    CHECK(a2.dim() == 5);
    auto src = catalog_source("A", 2);
    CHECK(brute_force_dim(src.quiver, parse_relations(src.quiver, src.relations), 6) == 5);
    CHECK(a2.basis_index(make_path(a2.quiver(), {"beta1", "alpha1"})) >= 0);
    CHECK(is_zero_matrix<Rational>(a2.path({"alpha1", "beta1"})));
    CHECK(projective(a2, vtx(a2, "2")).total_dim() == 3);
    CHECK(projective(a2, vtx(a2, "1")).total_dim() == 2);
}

TEST_CASE("A1 is one-dimensional") {
    const Algebra& a1 = catalog_get("A", 1).algebra;
    CHECK(a1.dim() == 1);
    CHECK(projective(a1, 0).total_dim() == 1);
}

TEST_CASE("F3 basis, loop nilpotence and projective dimensions") {
    const Algebra& f3 = catalog_get("F", 3).algebra;
    auto src = catalog_source("F", 3);
    CHECK(f3.dim() == brute_force_dim(src.quiver, parse_relations(src.quiver, src.relations), 6));
    CHECK(f3.dim() == 8);
    Element loop = f3.path({"beta1", "alpha1"});
    CHECK(!is_zero_matrix<Rational>(loop));
    CHECK(is_zero_matrix<Rational>(f3.mul(loop, loop)));
    CHECK(f3.basis_index(make_path(f3.quiver(), {"beta1", "alpha1"})) >= 0);
    CHECK(f3.path({"alpha2", "beta2"}) == loop);
    CHECK(projective(f3, vtx(f3, "1")).total_dim() == 2);
    CHECK(projective(f3, vtx(f3, "2")).total_dim() == 4);
    CHECK(projective(f3, vtx(f3, "3")).total_dim() == 2);
}

TEST_CASE("every catalog algebra builds, agrees with the brute-force oracle, and has the printed shape") {
    struct Shape { std::string name; int m; int vertices; int arrows; };
    std::vector<Shape> shapes = {{"A", 1, 1, 0}, {"A", 2, 2, 2}, {"A", 3, 3, 4}, {"A", 4, 4, 6}, {"A", 5, 5, 8},
                                 {"D3", 0, 3, 4}, {"D4", 0, 4, 6}, {"R4", 0, 4, 6}, {"H4", 0, 4, 6},
                                 {"G", 0, 4, 6}, {"F", 3, 3, 4}, {"F", 5, 5, 8}, {"B", 0, 5, 8},
                                 {"B1", 0, 5, 8}, {"D", 0, 4, 6}, {"W1", 0, 6, 5}, {"W2", 0, 6, 5},
                                 {"W3", 0, 6, 5}, {"W4", 0, 6, 5}, {"W5", 0, 6, 5}, {"W6", 0, 9, 8},
                                 {"W", 0, 9, 9}};
    for (auto& s : shapes) {
        CAPTURE(s.name);
        CAPTURE(s.m);
        const Algebra& a = catalog_get(s.name, s.m).algebra;
        CHECK(a.quiver().num_vertices() == s.vertices);
        CHECK(a.quiver().num_arrows() == s.arrows);
        auto src = catalog_source(s.name, s.m);
        auto rels = parse_relations(src.quiver, src.relations);
        CHECK(a.dim() == brute_force_dim(src.quiver, rels, a.top_degree() + 2));
        for (auto& r : rels) CHECK(is_zero_matrix<Rational>(a.normalize(r)));
        int total = 0;
        for (int v = 0; v < a.quiver().num_vertices(); ++v) {
            ModuleRep p = projective(a, v);
            CHECK(satisfies_relations(a, p));
            total += p.total_dim();
        }
        CHECK(total == a.dim());
    }
}

TEST_CASE("catalog parameter validation") {
    CHECK_THROWS_AS(catalog_get("F", 4), Error);
    CHECK_THROWS_AS(catalog_get("A", 0), Error);
    CHECK_THROWS_AS(catalog_get("Z"), Error);
}

TEST_CASE("infinite-dimensional presentations are rejected") {
    Quiver q({"1"}, {{"x", 0, 0}});
    CHECK_THROWS_AS(Algebra::build("loop", q, {}), Error);
}

TEST_CASE("normalize: unit law and idempotence") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    Element alpha = a2.path({"alpha1"});
    CHECK(a2.mul(a2.unit(vtx(a2, "1")), alpha) == alpha);
    CHECK(a2.mul(alpha, a2.unit(vtx(a2, "2"))) == alpha);
    CHECK(is_zero_matrix<Rational>(a2.mul(a2.unit(vtx(a2, "2")), alpha)));
}

TEST_CASE("radical membership") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    const int v2 = vtx(a2, "2"), v1 = vtx(a2, "1");
    CHECK(radical_membership(a2, p_of(a2, v1, v2, a2.path({"alpha1"}))));
    CHECK_FALSE(radical_membership(a2, p_of(a2, v2, v2, a2.unit(v2))));
    CHECK_FALSE(radical_membership(a2, p_of(a2, v2, v2, a2.unit(v2) + a2.path({"beta1", "alpha1"}))));
}

TEST_CASE("apply_morphism: identities, relations, rank of p(beta alpha)") {
    const Algebra& a2 = catalog_get("A", 2).algebra;
    const int v1 = vtx(a2, "1"), v2 = vtx(a2, "2");
    CHECK(apply_morphism(a2, identity_morphism(a2, {v1})) == identity<Rational>(2));
    CHECK(is_zero_matrix<Rational>(apply_morphism(a2, p_of(a2, v1, v1, a2.path({"alpha1", "beta1"})))));
    CHECK(rank<Rational>(apply_morphism(a2, p_of(a2, v2, v2, a2.path({"beta1", "alpha1"})))) == 1);
}

TEST_CASE("apply_morphism turns composition into matrix products on every catalog algebra") {
    seed_oracle(11);
    for (auto [name, m] : std::vector<std::pair<std::string, int>>{
             {"A", 3}, {"F", 3}, {"D3", 0}, {"D4", 0}, {"R4", 0}, {"H4", 0}, {"G", 0}, {"B1", 0}, {"D", 0}}) {
        const Algebra& a = catalog_get(name, m).algebra;
        const int nv = a.quiver().num_vertices();
        for (int trial = 0; trial < 5; ++trial) {
            auto random_summands = [&]() {
                std::vector<int> s;
                for (int k = 0; k < 2; ++k) s.push_back(static_cast<int>(oracle_rng()() % nv));
                return s;
            };
            auto random_morphism = [&](const std::vector<int>& s, const std::vector<int>& t) {
                ProjMorphism f = zero_morphism(a, s, t);
                for (int i = 0; i < f.rows(); ++i)
                    for (int j = 0; j < f.cols(); ++j)
                        for (int b = 0; b < a.dim(); ++b)
                            if (a.basis_path(b).start == s[i] && a.basis_path(b).end == t[j])
                                f.at(i, j)(b) = random_rational(3);
                return f;
            };
            auto s = random_summands(), t = random_summands(), u = random_summands();
            ProjMorphism f = random_morphism(s, t), g = random_morphism(t, u);
            CHECK(well_typed(a, f));
            CHECK(apply_morphism(a, compose(a, f, g)) ==
                  mul<Rational>(apply_morphism(a, g), apply_morphism(a, f)));
            ModuleMap mf = morphism_as_module_map(a, f);
            CHECK(is_equivariant(a, projective_sum(a, s), projective_sum(a, t), mf));
        }
    }
}

TEST_CASE("module operations") {
    const Algebra& f3 = catalog_get("F", 3).algebra;
    const int v1 = f3.quiver().vertex_index("1"), v2 = f3.quiver().vertex_index("2"),
              v3 = f3.quiver().vertex_index("3");
    ModuleRep p2 = projective(f3, v2);
    Sub k0 = kernel(f3, p2, p2, identity_map(p2));
    CHECK(k0.module.total_dim() == 0);
    Sub kall = kernel(f3, p2, p2, zero_map(p2, p2));
    CHECK(is_isomorphic(f3, kall.module, p2));

    ProjMorphism pb1 = p_of(f3, v2, v1, f3.path({"beta1"}));
    ProjMorphism pa2 = p_of(f3, v2, v3, f3.path({"alpha2"}));
    Sub kb = kernel(f3, p2, projective(f3, v1), morphism_as_module_map(f3, pb1));
    Sub ka = kernel(f3, p2, projective(f3, v3), morphism_as_module_map(f3, pa2));
    CHECK(kb.module.total_dim() == 3);
    CHECK(satisfies_relations(f3, kb.module));
    CHECK(is_isomorphic(f3, kb.module, ka.module));
    CHECK_FALSE(is_isomorphic(f3, kb.module, direct_sum(projective(f3, v1), projective(f3, v3))));

    Quot c = cokernel(f3, p2, projective(f3, v1), morphism_as_module_map(f3, pb1));
    CHECK(c.module.total_dim() == 1);
    CHECK(satisfies_relations(f3, c.module));
    CHECK(top_dims(f3, p2) == std::vector<int>{0, 1, 0});
}
