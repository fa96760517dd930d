#include "schurder/schur.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace schurder {

void validate(const SchurSpec& s) {
    if (!is_prime(s.p)) throw Error("invalid-params", "p must be prime");
    if (s.n < 1) throw Error("invalid-params", "n must be at least 1");
    if (s.d < 0) throw Error("invalid-params", "d must be non-negative");
    if (s.r && *s.r < 1) throw Error("invalid-params", "r must be positive");
}

std::string to_string(ReprType t) {
    switch (t) {
        case ReprType::semisimple: return "semisimple";
        case ReprType::finite: return "finite";
        case ReprType::tame: return "tame";
        case ReprType::wild: return "wild";
    }
    return "?";
}

std::string to_string(DerivedType t) { return t == DerivedType::derived_tame ? "derived_tame" : "derived_wild"; }

namespace {

bool in(int v, std::initializer_list<int> xs) { return std::find(xs.begin(), xs.end(), v) != xs.end(); }

std::vector<std::pair<std::string, bool>> schur_clauses(int p, int n, int d) {
    return {
        {"i.a", p > d},
        {"i.b", p == 2 && n == 2 && d == 3},
        {"i.c", p == 2 && n == 2 && in(d, {5, 7})},
        {"i.d", n == 2 && p <= d && d < 2 * p && !(p == 2 && d == 3)},
        {"i.e", p == 2 && n >= 3 && in(d, {2, 3})},
        {"i.f", p == 3 && n == 3 && in(d, {4, 5})},
    };
}

std::vector<std::pair<std::string, bool>> infinitesimal_clauses(int p, int n, int d, int r) {
    return {
        {"ii.a", p > 2 && n >= 2 && d < p},
        {"ii.b", p == 2 && n == 2 && d == 3},
        {"ii.c", p == 2 && n == 2 && d % 2 == 1 && r == 1},
        {"ii.d", p == 2 && n == 2 && r == 2 && in(d, {5, 7})},
        {"ii.e", p == 2 && n == 2 && r == 1 && d == 2},
        {"ii.f", n == 2 && r == 1 && 2 < p && p <= d && d < 2 * p},
    };
}

std::string first_true(const std::vector<std::pair<std::string, bool>>& cs) {
    for (auto& [id, ok] : cs)
        if (ok) return id;
    return "";
}

std::string schur_repr_clause(int p, int n, int d) {
    return first_true({
        {"finite.a", (n == 2 && d < p * p) || (n >= 3 && d < 2 * p)},
        {"finite.b", p == 2 && n == 2 && in(d, {5, 7})},
        {"tame.a", p == 3 && n == 3 && in(d, {7, 8})},
        {"tame.b", p == 3 && n == 2 && in(d, {9, 10, 11})},
        {"tame.c", p == 2 && n == 2 && in(d, {4, 9})},
    });
}

std::string infinitesimal_repr_clause(int p, int n, int d, int r) {
    return first_true({
        {"inf.finite.a", n >= 3 && d < 2 * p && r >= 2},
        {"inf.finite.b", n >= 3 && d < p && r == 1},
        {"inf.finite.c", p == 3 && n == 3 && r == 1 && in(d, {4, 5})},
        {"inf.finite.d", p == 2 && n == 3 && r == 1 && in(d, {2, 3})},
        {"inf.finite.e", n == 2 && d < p * p && r >= 2},
        {"inf.finite.f", p == 2 && n == 2 && r >= 3 && in(d, {5, 7})},
        {"inf.finite.g", p == 2 && n == 2 && r == 2 && d % 2 == 1},
        {"inf.finite.h", n == 2 && r == 1},
        {"inf.tame.a", p >= 5 && n == 3 && p <= d && d <= 2 * p - 1 && r == 1},
        {"inf.tame.b", p == 3 && n == 3 && d == 3 && r == 1},
        {"inf.tame.c", p == 3 && n == 4 && r == 1 && in(d, {3, 4, 5})},
        {"inf.tame.d", p == 3 && n == 3 && r >= 2 && in(d, {7, 8})},
        {"inf.tame.e", p == 3 && n == 2 && r >= 3 && in(d, {9, 10, 11})},
        {"inf.tame.f", p == 2 && n == 4 && r == 1 && in(d, {2, 3})},
        {"inf.tame.g", p == 2 && n == 2 && d == 4 && r >= 2},
        {"inf.tame.h", p == 2 && n == 2 && d == 9 && r >= 3},
    });
}

Classification finish(const std::string& clause, bool semisimple, const std::string& repr_clause) {
    Classification c;
    c.clause = clause;
    c.semisimple = semisimple;
    c.derived = clause.empty() ? DerivedType::derived_wild : DerivedType::derived_tame;
    c.repr_clause = repr_clause;
    if (semisimple) c.repr = ReprType::semisimple;
    else if (repr_clause.find("finite") != std::string::npos) c.repr = ReprType::finite;
    else if (repr_clause.find("tame") != std::string::npos) c.repr = ReprType::tame;
    else c.repr = ReprType::wild;
    return c;
}

}  // namespace

std::vector<std::string> derived_tame_clauses(const SchurSpec& s) {
    validate(s);
    auto cs = s.r ? infinitesimal_clauses(s.p, s.n, s.d, *s.r) : schur_clauses(s.p, s.n, s.d);
    std::vector<std::string> out;
    for (auto& [id, ok] : cs)
        if (ok) out.push_back(id);
    return out;
}

Classification classify_schur(const SchurSpec& s) {
    validate(s);
    if (s.r) throw Error("invalid-params", "classify_schur takes no r");
    auto cs = schur_clauses(s.p, s.n, s.d);
    const bool ss = cs[0].second || cs[1].second;
    return finish(first_true(cs), ss, schur_repr_clause(s.p, s.n, s.d));
}

Classification classify_infinitesimal(const SchurSpec& s) {
    validate(s);
    if (!s.r) throw Error("invalid-params", "classify_infinitesimal needs r");
    auto cs = infinitesimal_clauses(s.p, s.n, s.d, *s.r);
    const bool ss = cs[0].second || cs[1].second || cs[2].second;
    return finish(first_true(cs), ss, infinitesimal_repr_clause(s.p, s.n, s.d, *s.r));
}

Classification classify(const SchurSpec& s) { return s.r ? classify_infinitesimal(s) : classify_schur(s); }

// ---- partitions and cores ---------------------------------------------------

std::vector<Partition> partitions(int d) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

Partition p_core(const Partition& lambda, int p) {
    const int k = static_cast<int>(lambda.size());
    std::vector<int> count(p, 0);
    for (int i = 0; i < k; ++i) ++count[(lambda[i] + (k - 1 - i)) % p];
    std::vector<int> beta;
    for (int r = 0; r < p; ++r)
        for (int j = 0; j < count[r]; ++j) beta.push_back(r + p * j);
    std::sort(beta.rbegin(), beta.rend());
    Partition core;
    for (int i = 0; i < k; ++i)
        if (int part = beta[i] - (k - 1 - i); part > 0) core.push_back(part);
    return core;
}

std::string to_string(const Partition& lambda) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
    os << ")";
    return os.str();
}

BlockReport symmetric_blocks(int d, int p, int n) {
    if (!is_prime(p)) throw Error("invalid-params", "p must be prime");
    BlockReport rep;
    rep.in_range = n >= 3 && d < 2 * p;
    std::map<Partition, std::size_t> index;
    for (auto& lambda : partitions(d)) {
        Partition c = p_core(lambda, p);
        auto it = index.find(c);
        if (it == index.end()) {
            it = index.emplace(c, rep.blocks.size()).first;
            rep.blocks.push_back(Block{c, {}, 0, ""});
        }
        Block& b = rep.blocks[it->second];
        b.members.push_back(lambda);
        if (static_cast<int>(lambda.size()) <= n) ++b.s;
    }
    for (auto& b : rep.blocks) b.morita_type = b.s == 0 ? "none" : "A" + std::to_string(b.s);
    return rep;
}

MoritaReport block_morita_types(const SchurSpec& s) {
    validate(s);
    const Classification c = classify(s);
    const int p = s.p, n = s.n, d = s.d;
    MoritaReport out;
    auto add = [&](const std::string& t) {
        if (std::find(out.types.begin(), out.types.end(), t) == out.types.end()) out.types.push_back(t);
    };
    if (c.semisimple) {
        add("A1");
        return out;
    }
    auto schur_lookup = [&]() -> bool {
        if (n >= 3 && d < 2 * p) {
            for (auto& b : symmetric_blocks(d, p, n).blocks)
                if (b.s > 0) add(b.morita_type);
            return true;
        }
        if (c.clause == "i.c" || c.clause == "i.d") {
            add("A2");
            return true;
        }
        if (n == 2 && d < p * p) {
            add("A_m (m unspecified)");
            return true;
        }
        if (p == 2 && n == 2 && in(d, {5, 7})) {
            add("A2");
            return true;
        }
        if (p == 2 && n == 2 && in(d, {4, 9})) add("D3");
        else if (p == 3 && n == 2 && in(d, {9, 10, 11})) add("D4");
        else if (p == 3 && n == 3 && d == 7) add("R4");
        else if (p == 3 && n == 3 && d == 8) add("H4");
        else return false;
        return true;
    };
    if (!s.r) {
        out.covered = schur_lookup();
        if (!out.covered) out.types = {"unknown"};
        return out;
    }
    const int r = *s.r;
    const std::string rc = c.repr_clause;
    if (rc == "inf.finite.a" || rc == "inf.finite.b" || rc == "inf.finite.e" || rc == "inf.finite.f") {
        out.covered = schur_lookup();
    } else if (rc == "inf.finite.c" || rc == "inf.finite.d") {
        add("G");
    } else if (rc == "inf.finite.g" || rc == "inf.finite.h") {
        if (c.derived == DerivedType::derived_tame) {
            add("F3");
        } else {
            add("F_m (m unspecified)");
        }
    } else if (rc == "inf.tame.e") {
        add("D4");
    } else if (rc == "inf.tame.d") {
        add(d == 7 ? "R4" : "H4");
    } else if ((rc == "inf.tame.g" && r > 2) || (rc == "inf.tame.h" && r > 3)) {
        add("D3");
    } else if (rc == "inf.tame.g" || rc == "inf.tame.h") {
        add("D");
    } else if (rc == "inf.tame.a" || rc == "inf.tame.b") {
        add("B1");
    } else if (rc == "inf.tame.c" || rc == "inf.tame.f") {
        add("B");
    } else {
        out.covered = false;
    }
    if (!out.covered) out.types = {"unknown"};
    return out;
}

// ---- wildness witnesses -----------------------------------------------------

std::string witness_quiver(int k) {
    static const char* by_case[] = {"W1", "W2", "W3", "W4", "W6", "W5", "W5", "W"};
    if (k < 1 || k > 8) throw Error("invalid-params", "witness case must be 1..8");
    return by_case[k - 1];
}

std::string witness_algebra(int k) {
    static const char* by_case[] = {"G", "B", "B1", "D", "D3", "D4", "H4", "A"};
    if (k < 1 || k > 8) throw Error("invalid-params", "witness case must be 1..8");
    return by_case[k - 1];
}

namespace {

// A term of N: summands (algebra vertex, quiver vertex giving the multiplicity).
using Group = std::pair<std::string, std::string>;

struct Link {
    int src_group;
    int tgt_group;
    std::string word;   // path in the algebra
    std::string arrow;  // arrow of the quiver whose matrix fills the block
};

struct Step {
    std::vector<Group> from, to;
    std::vector<Link> links;
};

std::vector<std::string> words_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> w;
    std::string t;
    while (is >> t) w.push_back(t);
    return w;
}

std::vector<Step> witness_steps(int k) {
    auto g = [](std::initializer_list<Group> xs) { return std::vector<Group>(xs); };
    switch (k) {
        case 1:
            return {{g({{"1", "1"}, {"2", "2"}, {"3", "3"}}), g({{"0", "0"}}),
                     {{0, 0, "alpha1", "a"}, {1, 0, "alpha2", "b"}, {2, 0, "alpha3", "c"}}},
                    {g({{"0", "0"}}), g({{"1", "4"}, {"2", "5"}}), {{0, 0, "beta1", "d"}, {0, 1, "beta2", "e"}}}};
        case 2:
        case 3:
            return {{g({{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}}), g({{"0", "0"}}),
                     {{0, 0, "alpha1", "a"}, {1, 0, "alpha2", "b"}, {2, 0, "alpha3", "c"}, {3, 0, "alpha4", "d"}}},
                    {g({{"0", "0"}}), g({{k == 2 ? "1" : "4", "5"}}), {{0, 0, k == 2 ? "beta1" : "beta4", "e"}}}};
        case 4:
            return {{g({{"1", "1"}, {"2", "2"}}), g({{"0", "0"}}), {{0, 0, "alpha1", "a"}, {1, 0, "alpha2", "b"}}},
                    {g({{"0", "0"}}), g({{"1", "3"}, {"2", "4"}, {"0", "5"}}),
                     {{0, 0, "beta1", "c"}, {0, 1, "beta2", "d"}, {0, 2, "beta3 alpha3", "e"}}}};
        case 5: {
            std::vector<Step> st;
            auto term = [&](int i) {
                return i == 3 ? g({{"2", "3"}, {"1", "9"}}) : g({{"2", std::to_string(i)}});
            };
            const char* arrows = "abcdefg";
            for (int i = 1; i <= 7; ++i) {
                Step s{term(i), term(i + 1), {{0, 0, "beta2 alpha2", std::string(1, arrows[i - 1])}}};
                if (i == 3) s.links.push_back({1, 0, "alpha1", "h"});
                st.push_back(s);
            }
            return st;
        }
        case 6:
        case 7:
            return {{g({{"1", "1"}, {"3", "2"}, {"2", "3"}}), g({{"0", "0"}}),
                     {{0, 0, "alpha1", "a"}, {1, 0, "alpha3", "b"}, {2, 0, "alpha2", "c"}}},
                    k == 6 ? Step{g({{"0", "0"}}), g({{"1", "4"}, {"0", "5"}}),
                                  {{0, 0, "beta1", "d"}, {0, 1, "beta2 alpha2", "e"}}}
                           : Step{g({{"0", "0"}}), g({{"3", "4"}, {"1", "5"}}),
                                  {{0, 0, "beta3", "d"}, {0, 1, "beta1", "e"}}}};
        case 8: {
            auto term = [&](int i) -> std::vector<Group> {
                if (i <= 3) return g({{"3", std::to_string(i)}});
                if (i == 4) return g({{"2", "5"}, {"3", "4"}});
                return g({{"2", std::to_string(i + 1)}});
            };
            return {{term(1), term(2), {{0, 0, "beta2 alpha2", "a"}}},
                    {term(2), term(3), {{0, 0, "beta2 alpha2", "b"}}},
                    {term(3), term(4), {{0, 0, "beta2", "d"}, {0, 1, "beta2 alpha2", "c"}}},
                    {term(4), term(5), {{0, 0, "alpha2 beta2", "f"}, {1, 0, "beta2", "e"}}},
                    {term(5), term(6), {{0, 0, "alpha2 beta2", "g"}}},
                    {term(6), term(7), {{0, 0, "alpha2 beta2", "h"}}},
                    {term(7), term(8), {{0, 0, "alpha2 beta2", "t"}}}};
        }
    }
    throw Error("invalid-params", "witness case must be 1..8");
}

}  // namespace

Witness wildness_witness(int k, const ModuleRep& rep, const std::string& family, int m) {
    const Quiver& wq = catalog_get(witness_quiver(k)).algebra.quiver();
    if (static_cast<int>(rep.dims.size()) != wq.num_vertices() ||
        static_cast<int>(rep.arrow_maps.size()) != wq.num_arrows())
        throw Error("dimension-mismatch", "representation does not fit " + witness_quiver(k));
    for (int a = 0; a < wq.num_arrows(); ++a)
        if (rep.arrow_maps[a].rows() != rep.dims[wq.arrow(a).src] || rep.arrow_maps[a].cols() != rep.dims[wq.arrow(a).tgt])
            throw Error("dimension-mismatch", "matrix of arrow " + wq.arrow(a).name + " has the wrong shape");

    Witness w;
    if (k == 8) {
        if (family == "R4") w.algebra = &catalog_get("R4").algebra;
        else if (family == "A" && m > 2) w.algebra = &catalog_get("A", m).algebra;
        else if (family == "F" && m > 3) w.algebra = &catalog_get("F", m).algebra;
        else throw Error("invalid-params", "case 8 needs A_m with m > 2, F_r with r > 3, or R4");
    } else {
        w.algebra = &catalog_get(witness_algebra(k)).algebra;
    }
    const Algebra& alg = *w.algebra;
    const Quiver& aq = alg.quiver();

    auto expand = [&](const std::vector<Group>& gs, std::vector<int>& offsets) {
        std::vector<int> summands;
        for (auto& [av, qv] : gs) {
            offsets.push_back(static_cast<int>(summands.size()));
            const int mult = rep.dims[wq.vertex_index(qv)];
            for (int c = 0; c < mult; ++c) summands.push_back(aq.vertex_index(av));
        }
        return summands;
    };

    std::vector<ProjMorphism> diffs;
    for (const Step& st : witness_steps(k)) {
        std::vector<int> so, to;
        std::vector<int> src = expand(st.from, so), tgt = expand(st.to, to);
        ProjMorphism d = zero_morphism(alg, src, tgt);
        for (const Link& l : st.links) {
            const Element e = alg.path(words_of(l.word));
            const MatQ& mx = rep.arrow_maps[wq.arrow_index(l.arrow)];
            for (Eigen::Index r = 0; r < mx.rows(); ++r)
                for (Eigen::Index c = 0; c < mx.cols(); ++c)
                    if (!is_zero(mx(r, c))) d.at(so[l.src_group] + r, to[l.tgt_group] + c) += mx(r, c) * e;
        }
        diffs.push_back(d);
    }
    w.complex = trimmed(make_complex(1, diffs));
    return w;
}

std::vector<int> witness_dims(int k) {
    const std::string q = witness_quiver(k);
    if (q == "W6") return {1, 2, 3, 4, 3, 2, 1, 0, 2};
    if (q == "W") return {1, 2, 3, 2, 2, 3, 2, 1, 1};
    return {2, 1, 1, 1, 1, 1};  // the stars W1..W5, centre first
}

ModuleRep random_witness_rep(int k, int dim, std::mt19937_64& rng) {
    const int n = catalog_get(witness_quiver(k)).algebra.quiver().num_vertices();
    return random_witness_rep(k, std::vector<int>(n, dim), rng);
}

ModuleRep random_witness_rep(int k, const std::vector<int>& dims, std::mt19937_64& rng) {
    const Algebra& wa = catalog_get(witness_quiver(k)).algebra;
    const Quiver& q = wa.quiver();
    if (static_cast<int>(dims.size()) != q.num_vertices())
        throw Error("dimension-mismatch", "one dimension per vertex of " + witness_quiver(k));
    std::uniform_int_distribution<int> coef(-4, 4);
    auto random_mat = [&](Eigen::Index r, Eigen::Index c) {
        MatQ x(r, c);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < c; ++j) x(i, j) = coef(rng);
        return x;
    };
    ModuleRep rep;
    rep.dims = dims;
    for (int a = 0; a < q.num_arrows(); ++a)
        rep.arrow_maps.push_back(random_mat(dims[q.arrow(a).src], dims[q.arrow(a).tgt]));
    // Each printed relation is a single two-arrow path x y = 0: make x drop
    // rank and take y from its kernel.
    for (const auto& rel : wa.relations()) {
        const Path& path = rel.front().path;
        const int x = path.arrows[0], y = path.arrows[1];
        const int ds = dims[q.arrow(x).src], dt = dims[q.arrow(x).tgt], du = dims[q.arrow(y).tgt];
        if (dt == 0) continue;
        const int r = std::min(ds, dt - 1);
        rep.arrow_maps[x] = mul<Rational>(random_mat(ds, r), random_mat(r, dt));
        MatQ ker = kernel_basis<Rational>(rep.arrow_maps[x]);
        rep.arrow_maps[y] = mul<Rational>(ker, random_mat(ker.cols(), du));
    }
    if (!satisfies_relations(wa, rep)) throw Error("internal", "random witness representation violates relations");
    return rep;
}

}  // namespace schurder
