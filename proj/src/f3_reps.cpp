#include "schurder/f3.hpp"

#include "schurder/catalog.hpp"
#include "schurder/homotopy.hpp"

#include <functional>

namespace schurder::f3 {

namespace {

bool g_bispecial = false;

const Algebra& f3_algebra() { return catalog_get("F", 3).algebra; }

// One component of a word position: an element and the offset of the
// position's block inside that element's vector space.
struct Comp {
    Elem e;
    int off;
};

struct Skeleton {
    std::vector<Letter> letters;  // one per position
    std::vector<Link> links;      // links[k] joins positions k and (k + 1) % size
    bool cyclic = false;
    int block = 1;
    MatQ param;                   // band parameter on the closing link
    int left_sign = 0, right_sign = 0;
};

Elem single(const Letter& l, int sign = 0) { return Elem{l.kind, two_element(l.kind) ? sign : 0, l.i}; }

MatQ companion_power(const std::vector<Rational>& f, int mult) {
    std::vector<Rational> g{Rational(1)};
    for (int t = 0; t < mult; ++t) {
        std::vector<Rational> h(g.size() + f.size() - 1, Rational(0));
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b) h[a + b] += g[a] * f[b];
        g = h;
    }
    const int n = static_cast<int>(g.size()) - 1;
    MatQ c = zeros<Rational>(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -g[i];
    return c;
}

BunchRep assemble(const Skeleton& sk, unsigned orientation) {
    const int npos = static_cast<int>(sk.letters.size());
    const int nlinks = static_cast<int>(sk.links.size());
    const int n = sk.block;
    BunchRep rep;
    std::vector<std::vector<Comp>> vec(npos);
    auto alloc = [&](const Elem& e) {
        int& d = rep.dims[vertex_of(e)];
        const int off = d;
        d += n;
        return off;
    };
    int pair_link = 0;
    for (int k = 0; k < nlinks; ++k) {
        if (sk.links[k] != Link::tilde) continue;
        const int a = k, b = (k + 1) % npos;
        const Letter& la = sk.letters[a];
        if (!two_element(la.kind)) {
            const Elem ea = single(la), eb = single(sk.letters[b]);
            const int off = alloc(ea);
            vec[a].push_back({ea, off});
            vec[b].push_back({eb, off});
            continue;
        }
        const Elem minus = single(la, -1), plus = single(la, 1);
        const int om = alloc(minus), op = alloc(plus);
        const bool both_on_a = !((orientation >> pair_link++) & 1u);
        const int both = both_on_a ? a : b, only = both_on_a ? b : a;
        vec[both] = {{minus, om}, {plus, op}};
        vec[only] = {{plus, op}};
    }
    for (int p = 0; p < npos; ++p) {
        if (!vec[p].empty()) continue;
        const int sign = p == 0 ? sk.left_sign : sk.right_sign;
        const Elem e = single(sk.letters[p], sign);
        vec[p].push_back({e, alloc(e)});
    }
    auto link_ends = [&](int k) {
        int a = k, b = (k + 1) % npos;
        if (!in_E(sk.letters[a].kind)) std::swap(a, b);
        return std::pair{a, b};
    };
    for (int k = 0; k < nlinks; ++k) {
        if (sk.links[k] != Link::dash) continue;
        auto [a, b] = link_ends(k);
        for (auto& cu : vec[a])
            for (auto& cv : vec[b]) rep.blocks[{cu.e, cv.e}];
    }
    // Sized once every dimension is known.
    const MatQ id = identity<Rational>(n);
    for (auto& [key, m] : rep.blocks) m = zeros<Rational>(rep.dim(vertex_of(key.first)), rep.dim(vertex_of(key.second)));
    for (int k = 0; k < nlinks; ++k) {
        if (sk.links[k] != Link::dash) continue;
        auto [a, b] = link_ends(k);
        const MatQ& x = (sk.cyclic && k == nlinks - 1) ? sk.param : id;
        for (auto& cu : vec[a])
            for (auto& cv : vec[b]) rep.blocks[{cu.e, cv.e}].block(cu.off, cv.off, n, n) += x;
    }
    return rep;
}

int count_pair_links(const Skeleton& sk) {
    int t = 0;
    for (std::size_t k = 0; k < sk.links.size(); ++k)
        if (sk.links[k] == Link::tilde && two_element(sk.letters[k].kind)) ++t;
    return t;
}

// Tries every orientation of the self-glued links. A band orientation must
// also be sensitive to its parameter: shifting the closing matrix by the
// identity has to change the isomorphism class, otherwise the parameter can
// be scaled away.
BunchRep search(const Skeleton& sk, const std::string& what) {
    const int t = count_pair_links(sk);
    std::optional<Inconclusive> pending;
    for (unsigned o = 0; o < (1u << t); ++o) {
        BunchRep rep = assemble(sk, o);
        try {
            ProjComplex c = build_complex(rep);
            if (!is_indecomposable(f3_algebra(), c)) continue;
            if (sk.cyclic) {
                Skeleton shifted = sk;
                shifted.param += identity<Rational>(sk.block);
                if (is_isomorphic_K(f3_algebra(), c, build_complex(assemble(shifted, o)))) continue;
            }
            return rep;
        } catch (const Inconclusive& e) {
            pending = e;
        }
    }
    if (pending) throw *pending;
    throw Error("construction-failed", "no orientation of the self-glued links works for " + what);
}

}  // namespace

void set_bispecial_enabled(bool on) { g_bispecial = on; }
bool bispecial_enabled() { return g_bispecial; }

Vertex vertex_of(const Elem& e) {
    switch (e.kind) {
        case Kind::x: return {VKind::X, e.i};
        case Kind::r: return {VKind::X, e.i + 2};
        case Kind::z: return {VKind::Z, e.i};
        case Kind::q: return {VKind::Z, e.i + 1};
        case Kind::y: return {e.sign < 0 ? VKind::Ym : VKind::Yp, e.i};
        case Kind::p: return {e.sign < 0 ? VKind::Pm : VKind::Pp, e.i};
    }
    return {};
}

int BunchRep::dim(const Vertex& v) const {
    auto it = dims.find(v);
    return it == dims.end() ? 0 : it->second;
}

MatQ BunchRep::block(const Elem& u, const Elem& v) const {
    auto it = blocks.find({u, v});
    if (it != blocks.end()) return it->second;
    return zeros<Rational>(dim(vertex_of(u)), dim(vertex_of(v)));
}

bool BunchRep::is_zero() const {
    for (auto& [v, d] : dims)
        if (d) return false;
    return true;
}

void check_rep(const BunchRep& m) {
    for (auto& [key, b] : m.blocks) {
        const auto& [u, v] = key;
        if (!in_E(u.kind) || in_E(v.kind) || u.i != v.i)
            throw Error("dimension-inference-failure", "no arrow from " + to_string(u) + " to " + to_string(v));
        if (b.rows() != m.dim(vertex_of(u)) || b.cols() != m.dim(vertex_of(v)))
            throw Error("dimension-inference-failure", "block " + to_string(u) + " -> " + to_string(v) +
                                                           " disagrees with the vertex dimensions");
    }
}

BunchRep realize_rep(const StringSpec& s) {
    if (s.type == StringType::bispecial && !g_bispecial)
        throw Error("unsupported-spec", "bispecial strings are disabled: " + to_string(s));
    if (s.w.w.empty()) return {};
    Skeleton sk;
    sk.letters = s.w.w;
    sk.links = s.w.r;
    WordInfo info = classify_word(s.w);
    const int sign_k = s.k ? 1 : -1;
    const int sign_l = s.l ? 1 : -1;
    if (info.d_l) sk.left_sign = sign_k;
    if (info.d_r) sk.right_sign = info.d_l ? sign_l : sign_k;
    if (s.type == StringType::bispecial) sk.block = s.n;
    return search(sk, to_string(s));
}

BunchRep realize_rep(const BandSpec& b) {
    Skeleton sk;
    const int m = b.w.m();
    sk.letters.assign(b.w.w.begin(), b.w.w.begin() + m);
    sk.links = b.w.r;
    sk.cyclic = true;
    sk.param = companion_power(b.f, b.mult);
    sk.block = static_cast<int>(sk.param.rows());
    return search(sk, to_string(b));
}

ProjComplex build_complex(const BunchRep& m) {
    check_rep(m);
    const Algebra& alg = f3_algebra();
    const Quiver& q = alg.quiver();
    const int v1 = q.vertex_index("1"), v2 = q.vertex_index("2"), v3 = q.vertex_index("3");

    int lo = 0, hi = -1;
    bool any = false;
    auto touch = [&](int a, int b) {
        if (!any) lo = a, hi = b, any = true;
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    };
    for (auto& [v, d] : m.dims) {
        if (!d) continue;
        switch (v.kind) {
            case VKind::X: touch(v.i - 1, v.i); break;
            case VKind::Pm: case VKind::Pp: touch(v.i + 1, v.i + 2); break;
            default: touch(v.i, v.i);
        }
    }
    if (!any) return zero_complex();

    // Blocks of degree j: for each summand group, the element labelling it
    // and the vertex of F_3.
    struct Part {
        Elem label;
        int vertex;
    };
    auto layout = [&](int j) {
        return std::vector<Part>{
            {{Kind::x, 0, j}, v1},      {{Kind::p, -1, j - 2}, v1}, {{Kind::y, 1, j}, v1},
            {{Kind::r, 0, j - 1}, v2},  {{Kind::p, -1, j - 1}, v2}, {{Kind::p, 1, j - 1}, v2},
            {{Kind::q, 0, j - 1}, v2},  {{Kind::x, 0, j}, v3},      {{Kind::p, 1, j - 2}, v3},
            {{Kind::y, -1, j}, v3}};
    };
    auto terms = [&](int j, std::vector<int>& offsets) {
        std::vector<int> summands;
        for (auto& part : layout(j)) {
            offsets.push_back(static_cast<int>(summands.size()));
            summands.insert(summands.end(), m.dim(vertex_of(part.label)), part.vertex);
        }
        return summands;
    };
    // Group indices inside layout(j).
    enum { P1x, P1p, P1y, P2r, P2pm, P2pp, P2q, P3x, P3p, P3y };

    const Element a1 = alg.path({"alpha1"}), b1 = alg.path({"beta1"}), a2 = alg.path({"alpha2"}),
                  b2 = alg.path({"beta2"}), b1a1 = alg.path({"beta1", "alpha1"});
    std::vector<ProjMorphism> diffs;
    std::vector<std::vector<int>> all_terms;
    for (int j = lo; j <= hi; ++j) {
        std::vector<int> so;
        all_terms.push_back(terms(j, so));
    }
    for (int j = lo; j < hi; ++j) {
        std::vector<int> so, to;
        std::vector<int> src = terms(j, so), tgt = terms(j + 1, to);
        ProjMorphism d = zero_morphism(alg, src, tgt);
        auto put = [&](int sg, int tg, const MatQ& x, const Element& e, const Rational& sign) {
            for (Eigen::Index r = 0; r < x.rows(); ++r)
                for (Eigen::Index c = 0; c < x.cols(); ++c)
                    if (!is_zero(x(r, c))) d.at(so[sg] + r, to[tg] + c) += (sign * x(r, c)) * e;
        };
        auto ident = [&](const Elem& e) { return identity<Rational>(m.dim(vertex_of(e))); };
        const std::vector<std::pair<int, Elem>> fcols{{P2r, {Kind::r, 0, j}},
                                                      {P2pm, {Kind::p, -1, j}},
                                                      {P2pp, {Kind::p, 1, j}},
                                                      {P2q, {Kind::q, 0, j}}};
        for (auto& [tg, v] : fcols) {
            put(P1x, tg, m.block({Kind::x, 0, j}, v), a1, 1);       // A_j
            put(P1y, tg, m.block({Kind::y, 1, j}, v), a1, 1);
            put(P2q, tg, m.block({Kind::z, 0, j}, v), b1a1, 1);     // C_j
            put(P3x, tg, m.block({Kind::x, 0, j}, v), b2, -1);      // R_j
            put(P3y, tg, m.block({Kind::y, -1, j}, v), b2, 1);
        }
        put(P2r, P1x, ident({Kind::r, 0, j - 1}), b1, 1);           // B_j
        put(P2pm, P1p, ident({Kind::p, -1, j - 1}), b1, 1);
        put(P2r, P3x, ident({Kind::r, 0, j - 1}), a2, 1);           // D_j
        put(P2pp, P3p, ident({Kind::p, 1, j - 1}), a2, 1);
        diffs.push_back(d);
    }
    ProjComplex c;
    c.lo = lo;
    c.terms = all_terms;
    c.diffs = diffs;
    return trimmed(c);
}

std::string psi_clause(const StringSpec& s) {
    if (s.type == StringType::bispecial) return "";
    const Word& w = s.w;
    const int m = w.m();
    if (m < 1) return "";
    auto index_ok = [&](int t) {
        for (auto& l : w.w) {
            int i = l.i;
            if (l.kind == Kind::x) i = l.i - 1;
            if (l.kind == Kind::r || l.kind == Kind::q) i = l.i + 1;
            if (i < t) return false;
        }
        return true;
    };
    auto at = [&](int k) { return w.w[k]; };
    auto is = [](const Letter& l, Kind k, int i) { return l.kind == k && l.i == i; };
    // (a) and (b): q[t-1] ~ z[t] at either end.
    if (at(0).kind == Kind::q && w.r[0] == Link::tilde) {
        const int t = at(0).i + 1;
        if (is(at(1), Kind::z, t) && index_ok(t)) return "a";
    }
    if (at(m).kind == Kind::q && w.r[m - 1] == Link::tilde) {
        const int t = at(m).i + 1;
        if (is(at(m - 1), Kind::z, t) && index_ok(t)) return "b";
    }
    // (c) and (d): r[t-1] ~ x[t+1] not followed by r[t+1].
    if (at(0).kind == Kind::r && w.r[0] == Link::tilde) {
        const int t = at(0).i + 1;
        if (is(at(1), Kind::x, t + 1) && (m < 2 || !is(at(2), Kind::r, t + 1)) && index_ok(t)) return "c";
    }
    if (at(m).kind == Kind::r && w.r[m - 1] == Link::tilde) {
        const int t = at(m).i + 1;
        if (is(at(m - 1), Kind::x, t + 1) && (m < 2 || !is(at(m - 2), Kind::r, t + 1)) && index_ok(t)) return "d";
    }
    return "";
}

bool in_psi(const StringSpec& s) { return !psi_clause(s).empty(); }

std::vector<DbEntry> enumerate_db_f3(int max_length, const std::vector<Rational>& lambdas, bool include_truncations) {
    const Algebra& alg = f3_algebra();
    std::vector<DbEntry> out;
    for (auto& s : enumerate_strings(max_length)) {
        DbEntry e;
        e.origin = to_string(s);
        e.complex = build_complex(realize_rep(s));
        e.psi = in_psi(s);
        e.nonperfect = !resolve_truncation(alg, e.complex).perfect;
        out.push_back(e);
        if (e.psi && include_truncations) {
            DbEntry t = e;
            t.truncated = true;
            t.truncation = good_truncate(alg, e.complex);
            out.push_back(t);
        }
    }
    for (auto& b : enumerate_bands(max_length, lambdas)) {
        DbEntry e;
        e.origin = to_string(b);
        e.is_band = true;
        e.complex = build_complex(realize_rep(b));
        e.nonperfect = !resolve_truncation(alg, e.complex).perfect;
        out.push_back(e);
    }
    return out;
}

}  // namespace schurder::f3
