#include <doctest.h>

#include "schurder/catalog.hpp"
#include "schurder/f3.hpp"
#include "schurder/homotopy.hpp"

#include <set>

using namespace schurder;
using namespace schurder::f3;

namespace {

const Algebra& f3alg() { return catalog_get("F", 3).algebra; }

// Independent word checker: recomputes the three validity clauses straight
// from the ordered bunch, without tilde()/dash().
std::string brute_violation(const Word& w) {
    auto elems = [](const Letter& l) {
        std::vector<Elem> out;
        if (two_element(l.kind)) out = {{l.kind, -1, l.i}, {l.kind, 1, l.i}};
        else out = {{l.kind, 0, l.i}};
        return out;
    };
    auto glued = [&](const Letter& a, const Letter& b) {
        if (a == b) return two_element(a.kind);
        for (auto& u : elems(a))
            for (auto& v : elems(b))
                if (partner(u) == v) return true;
        return false;
    };
    auto related = [&](const Letter& a, const Letter& b) {
        // Different sides of the same index pair E_i, F_i.
        bool ea = a.kind == Kind::x || a.kind == Kind::y || a.kind == Kind::z;
        bool eb = b.kind == Kind::x || b.kind == Kind::y || b.kind == Kind::z;
        return ea != eb && a.i == b.i;
    };
    for (int k = 1; k <= w.m(); ++k) {
        const Link rk = w.r[k - 1];
        if ((rk == Link::tilde) != glued(w.w[k - 1], w.w[k])) return "a";
        if ((rk == Link::dash) != related(w.w[k - 1], w.w[k])) return "b";
        if (k < w.m() && w.r[k] == rk) return "c";
    }
    return "";
}

}  // namespace

TEST_CASE("the bunch axioms hold on a window") {
    CHECK(check_bunch(c_f3(-2, 4)).empty());
    CHECK(lt(Elem{Kind::y, -1, 0}, Elem{Kind::x, 0, 0}));
    CHECK(lt(Elem{Kind::x, 0, 0}, Elem{Kind::z, 0, 0}));
    CHECK_FALSE(comparable(Elem{Kind::y, 1, 0}, Elem{Kind::y, -1, 0}));
    CHECK(lt(Elem{Kind::p, 1, 3}, Elem{Kind::q, 3, 0}) == false);
    CHECK(lt(Elem{Kind::p, 1, 3}, Elem{Kind::q, 0, 3}));
    CHECK_FALSE(comparable(Elem{Kind::p, -1, 0}, Elem{Kind::p, 1, 0}));
    CHECK(partner(Elem{Kind::r, 0, 1}) == Elem{Kind::x, 0, 3});
    CHECK(partner(Elem{Kind::z, 0, 2}) == Elem{Kind::q, 0, 1});
    CHECK_FALSE(partner(Elem{Kind::p, 1, 0}));
}

TEST_CASE("word examples") {
    Word w = parse_word("q[0]~z[1]-p[1]");
    WordInfo info = classify_word(w);
    CHECK(info.valid);
    CHECK(info.full);
    CHECK(info.d_l == 0);
    CHECK(info.d_r == 1);
    StringSpec s = make_string(w, 0);
    CHECK(s.type == StringType::special);
    CHECK(in_psi(s));
    CHECK(psi_clause(s) == "a");
    CHECK(to_string(w) == "q[0]~z[1]-p[1]");

    info = classify_word(parse_word("r[0]-p[0]"));
    CHECK_FALSE(info.valid);
    CHECK(info.violation == "b");
    CHECK_THROWS_AS(require_valid(parse_word("r[0]-p[0]")), Error);

    info = classify_word(parse_word("p[0]~p[0]-y[0]~y[0]-p[0]"));
    CHECK(info.valid);
    CHECK(info.cycle);
    CHECK(info.aperiodic);

    CHECK(classify_word(parse_word("x[0]-r[0]-x[0]")).violation == "c");
    CHECK(classify_word(parse_word("x[0]~r[0]")).violation == "a");
    CHECK_FALSE(classify_word(parse_word("x[2]")).full);  // glued to r[0], needs its ~ neighbour
    CHECK(classify_word(parse_word("r[0]~x[2]")).full);
    CHECK(parse_word("<p>[3]~<p>[3]") == parse_word("p3~p3"));
    CHECK_THROWS_AS(parse_word("w[0]"), Error);
}

TEST_CASE("validity agrees with an independent checker") {
    const std::vector<Kind> kinds{Kind::x, Kind::y, Kind::z, Kind::r, Kind::p, Kind::q};
    int checked = 0;
    // Every word of length <= 3 over indices 0..2 with arbitrary links.
    std::function<void(Word&)> rec = [&](Word& w) {
        ++checked;
        CAPTURE(to_string(w));
        WordInfo info = classify_word(w);
        CHECK(info.violation == brute_violation(w));
        CHECK(info.valid == brute_violation(w).empty());
        if (w.m() == 3) return;
        for (Kind k : kinds)
            for (int i = 0; i <= 2; ++i)
                for (Link l : {Link::tilde, Link::dash}) {
                    w.w.push_back({k, i});
                    w.r.push_back(l);
                    rec(w);
                    w.w.pop_back();
                    w.r.pop_back();
                }
    };
    for (Kind k : kinds) {
        Word w{{{k, 1}}, {}};
        rec(w);
    }
    CHECK(checked > 100000);
}

TEST_CASE("a single nonzero block gives the expected complex") {
    BunchRep m;
    m.dims[vertex_of({Kind::x, 0, 0})] = 1;
    m.dims[vertex_of({Kind::q, 0, 0})] = 1;
    m.blocks[{Elem{Kind::x, 0, 0}, Elem{Kind::q, 0, 0}}] = MatQ::Constant(1, 1, Rational(1));
    ProjComplex c = build_complex(m);
    const Algebra& a = f3alg();
    CHECK(check_complex(a, c));
    CHECK(in_frak_p(a, c));
    CHECK(c.lo == -1);
    CHECK(c.hi() == 1);
    // X[0] carries x[0] (P1 + P3 in degree 0) and r[-2] (P2 in degree -1);
    // q[0] lives in Z[1] and gives P2 in degree 1.
    CHECK(c.multiplicities(a, -1) == std::vector<int>{0, 1, 0});
    CHECK(c.multiplicities(a, 0) == std::vector<int>{1, 0, 1});
    CHECK(c.multiplicities(a, 1) == std::vector<int>{0, 1, 0});
    CHECK(is_indecomposable(a, c));

    BunchRep bad = m;
    bad.blocks[{Elem{Kind::x, 0, 0}, Elem{Kind::q, 0, 0}}] = MatQ::Constant(2, 1, Rational(1));
    CHECK_THROWS_AS(build_complex(bad), Error);
    BunchRep wrong = m;
    wrong.blocks[{Elem{Kind::x, 0, 0}, Elem{Kind::q, 0, 1}}] = MatQ::Constant(1, 1, Rational(1));
    CHECK_THROWS_AS(check_rep(wrong), Error);
    CHECK(build_complex(BunchRep{}).empty());
}

TEST_CASE("string and band complexes are indecomposable and pairwise distinct") {
    const Algebra& a = f3alg();
    auto strings = enumerate_strings(5);
    auto bands = enumerate_bands(6, {Rational(1), Rational(2)});
    MESSAGE("strings: " << strings.size() << ", bands: " << bands.size());
    REQUIRE(!strings.empty());
    REQUIRE(!bands.empty());
    std::vector<std::pair<std::string, ProjComplex>> all;
    for (auto& s : strings) all.push_back({to_string(s), build_complex(realize_rep(s))});
    for (auto& b : bands) all.push_back({to_string(b), build_complex(realize_rep(b))});
    for (auto& [name, c] : all) {
        CAPTURE(name);
        CHECK(check_complex(a, c));
        CHECK(in_frak_p(a, c));
        CHECK(is_indecomposable(a, c));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            CAPTURE(all[i].first);
            CAPTURE(all[j].first);
            CHECK_FALSE(is_isomorphic_K(a, all[i].second, all[j].second));
        }
}

TEST_CASE("band parameters") {
    const Algebra& a = f3alg();
    Word w = parse_word("p[0]~p[0]-y[0]~y[0]-p[0]");
    std::vector<ProjComplex> cs;
    for (int l : {1, 2, 3, 5}) {
        ProjComplex c = build_complex(realize_rep(make_band(w, Rational(l))));
        CHECK(check_complex(a, c));
        CHECK(is_indecomposable(a, c));
        cs.push_back(c);
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK_FALSE(is_isomorphic_K(a, cs[i], cs[j]));
    ProjComplex c2 = build_complex(realize_rep(make_band(w, Rational(2), 2)));
    CHECK(is_indecomposable(a, c2));
    CHECK_THROWS_AS(make_band(w, Rational(0)), Error);
    CHECK_THROWS_AS(make_band(parse_word("p[0]~p[0]"), Rational(1)), Error);
}

TEST_CASE("bispecial strings are gated") {
    Word w = parse_word("p[0]-y[0]~y[0]-p[0]");
    WordInfo info = classify_word(w);
    REQUIRE(info.valid);
    if (info.full && info.simple && info.d_l + info.d_r == 2) {
        StringSpec s = make_string(w, 0, 0, 1);
        CHECK_THROWS_AS(realize_rep(s), Error);
        CHECK_FALSE(in_psi(s));
    }
}

namespace {

// Terms of degree >= from, with their differentials.
ProjComplex cut_below(const ProjComplex& c, int from) {
    ProjComplex out;
    out.lo = std::max(from, c.lo);
    for (int i = out.lo; i <= c.hi(); ++i) out.terms.push_back(c.term(i));
    for (int i = out.lo; i < c.hi(); ++i) out.diffs.push_back(c.diffs[i - c.lo]);
    return out;
}

// Two complexes agree modulo the relation used to pick representatives when
// their spliced resolutions agree above a common cut.
bool same_resolution(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int steps) {
    ProjComplex px = truncation_prefix(a, x, steps), py = truncation_prefix(a, y, steps);
    const int from = std::max(px.lo, py.lo) + 1;
    return is_isomorphic_K(a, cut_below(px, from), cut_below(py, from));
}

}  // namespace

TEST_CASE("Psi and perfectness") {
    const Algebra& a = f3alg();
    std::vector<StringSpec> strings = enumerate_strings(4);
    std::vector<std::pair<StringSpec, ProjComplex>> psi, nonperfect;
    std::vector<std::string> perfect_psi;
    for (auto& s : strings) {
        ProjComplex c = build_complex(realize_rep(s));
        const bool np = !resolve_truncation(a, c).perfect;
        if (in_psi(s)) psi.push_back({s, c});
        if (np) nonperfect.push_back({s, c});
        if (in_psi(s) && !np) perfect_psi.push_back(to_string(s));
    }
    // The one literal member of S whose complex is perfect: q[0]~z[1] alone
    // gives the stalk P2, whose lowest differential is zero.
    CHECK(perfect_psi == std::vector<std::string>{"z[1]~q[0]"});
    MESSAGE("psi " << psi.size() << ", non-perfect " << nonperfect.size());

    // Every non-perfect string is represented by a member of Psi up to a shift.
    for (auto& [s, c] : nonperfect) {
        CAPTURE(to_string(s));
        bool found = false;
        for (auto& [t, d] : psi)
            for (int k = -4; k <= 4 && !found; ++k)
                if (same_resolution(a, c, shift(d, k), 6)) found = true;
        CHECK(found);
    }
}

TEST_CASE("the lowest kernel of p(beta1) resolves 2-periodically") {
    const Algebra& a = f3alg();
    const int v1 = a.quiver().vertex_index("1"), v2 = a.quiver().vertex_index("2"),
              v3 = a.quiver().vertex_index("3");
    ProjMorphism b = zero_morphism(a, {v2}, {v1});
    b.at(0, 0) = a.path({"beta1"});
    ProjComplex c = make_complex(0, {b});
    REQUIRE(check_complex(a, c));
    TruncationResolution r = resolve_truncation(a, c);
    CHECK_FALSE(r.perfect);
    REQUIRE(r.certificate);
    CHECK(r.certificate->second - r.certificate->first == 2);
    ProjComplex prefix = truncation_prefix(a, c, 5);
    // Terms below the spliced degree alternate P1 + P3 and P2.
    for (int i = prefix.lo; i < 0; ++i) {
        auto t = prefix.term(i);
        std::sort(t.begin(), t.end());
        CHECK(t == ((-i) % 2 ? std::vector<int>{v1, v3} : std::vector<int>{v2}));
    }
}
