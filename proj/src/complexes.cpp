#include "schurder/complexes.hpp"

#include <algorithm>

namespace schurder {

std::vector<int> ProjComplex::term(int i) const {
    if (empty() || i < lo || i > hi()) return {};
    return terms[i - lo];
}

std::vector<int> ProjComplex::multiplicities(const Algebra& alg, int i) const {
    std::vector<int> m(alg.quiver().num_vertices(), 0);
    for (int v : term(i)) ++m[v];
    return m;
}

ProjComplex make_complex(int lo, const std::vector<ProjMorphism>& diffs) {
    ProjComplex c;
    c.lo = lo;
    if (diffs.empty()) return c;
    c.terms.push_back(diffs.front().source);
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (k > 0 && diffs[k].source != diffs[k - 1].target)
            throw Error("dimension-mismatch", "consecutive differentials do not match");
        c.terms.push_back(diffs[k].target);
    }
    c.diffs = diffs;
    return c;
}

ProjComplex stalk(int degree, std::vector<int> summands) {
    ProjComplex c;
    c.lo = degree;
    c.terms.push_back(std::move(summands));
    return c;
}

ProjComplex zero_complex() { return ProjComplex{}; }

ProjMorphism diff_at(const Algebra& alg, const ProjComplex& c, int i) {
    if (!c.empty() && i >= c.lo && i < c.hi()) return c.diffs[i - c.lo];
    return zero_morphism(alg, c.term(i), c.term(i + 1));
}

ProjComplex trimmed(const ProjComplex& c) {
    if (c.empty()) return c;
    int a = 0, b = static_cast<int>(c.terms.size()) - 1;
    while (a <= b && c.terms[a].empty()) ++a;
    while (b >= a && c.terms[b].empty()) --b;
    ProjComplex out;
    if (a > b) return out;
    out.lo = c.lo + a;
    out.terms.assign(c.terms.begin() + a, c.terms.begin() + b + 1);
    out.diffs.assign(c.diffs.begin() + a, c.diffs.begin() + b);
    return out;
}

ProjComplex direct_sum(const Algebra& alg, const ProjComplex& a, const ProjComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
    ProjComplex c;
    c.lo = lo;
    for (int i = lo; i <= hi; ++i) {
        std::vector<int> t = a.term(i), u = b.term(i);
        t.insert(t.end(), u.begin(), u.end());
        c.terms.push_back(t);
        if (i < hi) c.diffs.push_back(block_diag(alg, diff_at(alg, a, i), diff_at(alg, b, i)));
    }
    return c;
}

bool same_complex(const ProjComplex& a, const ProjComplex& b) {
    ProjComplex x = trimmed(a), y = trimmed(b);
    if (x.empty() || y.empty()) return x.empty() && y.empty();
    if (x.lo != y.lo || x.terms != y.terms) return false;
    for (std::size_t k = 0; k < x.diffs.size(); ++k)
        if (x.diffs[k].entries != y.diffs[k].entries) return false;
    return true;
}

ModuleComplex to_module_complex(const Algebra& alg, const ProjComplex& c) {
    ModuleComplex m;
    m.lo = c.lo;
    for (auto& t : c.terms) m.terms.push_back(projective_sum(alg, t));
    for (auto& d : c.diffs) m.maps.push_back(morphism_as_module_map(alg, d));
    return m;
}

std::optional<int> first_noncomposing_degree(const Algebra& alg, const ProjComplex& c) {
    for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k)
        if (!is_zero(compose(alg, c.diffs[k], c.diffs[k + 1]))) return c.lo + static_cast<int>(k);
    return std::nullopt;
}

bool check_complex(const Algebra& alg, const ProjComplex& c) {
    if (c.diffs.size() + (c.empty() ? 0 : 1) != c.terms.size()) return false;
    for (std::size_t k = 0; k < c.diffs.size(); ++k) {
        const ProjMorphism& d = c.diffs[k];
        if (d.source != c.terms[k] || d.target != c.terms[k + 1] || !well_typed(alg, d)) return false;
    }
    return !first_noncomposing_degree(alg, c).has_value();
}

bool check_complex(const Algebra& alg, const ModuleComplex& c) {
    for (std::size_t k = 0; k < c.maps.size(); ++k)
        if (!is_equivariant(alg, c.terms[k], c.terms[k + 1], c.maps[k])) return false;
    for (std::size_t k = 0; k + 1 < c.maps.size(); ++k)
        for (auto& b : compose(c.maps[k], c.maps[k + 1]).blocks)
            if (!is_zero_matrix<Rational>(b)) return false;
    return true;
}

bool in_frak_p(const Algebra& alg, const ProjComplex& c) {
    for (auto& d : c.diffs)
        if (!radical_membership(alg, d)) return false;
    return true;
}

Cohomology cohomology(const Algebra& alg, const ModuleComplex& c) {
    Cohomology h;
    const int n = static_cast<int>(c.terms.size());
    for (int k = 0; k < n; ++k) {
        const ModuleRep& ck = c.terms[k];
        if (ck.total_dim() == 0) continue;
        Sub z = k + 1 < n ? kernel(alg, ck, c.terms[k + 1], c.maps[k])
                          : Sub{ck, identity_map(ck)};
        if (z.module.total_dim() == 0) continue;
        ModuleRep quotient;
        if (k > 0 && c.terms[k - 1].total_dim() > 0) {
            // Incoming map expressed in cycle coordinates.
            ModuleMap into_z;
            for (std::size_t u = 0; u < z.inclusion.blocks.size(); ++u) {
                const MatQ& inc = z.inclusion.blocks[u];
                const MatQ& d = c.maps[k - 1].blocks[u];
                if (inc.cols() == 0 || d.cols() == 0)
                    into_z.blocks.push_back(zeros<Rational>(inc.cols(), d.cols()));
                else
                    into_z.blocks.push_back(coordinates<Rational>(inc, d));
            }
            quotient = cokernel(alg, c.terms[k - 1], z.module, into_z).module;
        } else {
            quotient = z.module;
        }
        if (quotient.total_dim() > 0) {
            h.dims[c.lo + k] = quotient.total_dim();
            h.modules[c.lo + k] = quotient;
        }
    }
    return h;
}

Cohomology cohomology(const Algebra& alg, const ProjComplex& c) {
    return cohomology(alg, to_module_complex(alg, c));
}

ProjComplex shift(const ProjComplex& c, int i) {
    ProjComplex out = c;
    out.lo = c.lo - i;
    if (i % 2 != 0)
        for (auto& d : out.diffs)
            for (auto& e : d.entries) e = -e;
    return out;
}

CohomologyVector shift(const CohomologyVector& h, int i) {
    CohomologyVector out;
    for (auto& [d, v] : h) out[d - i] = v;
    return out;
}

ProjComplex brutal_truncate(const Algebra& alg, const ProjComplex& c, bool lowest_is_cut) {
    ProjComplex t = trimmed(c);
    if (t.empty()) throw Error("no-such-s", "zero complex");
    CohomologyVector h = cohomology(alg, t).dims;
    std::optional<int> s;
    for (int d = t.lo; d <= t.hi(); ++d) {
        bool acyclic_below = true;
        for (auto& [deg, dim] : h)
            if (deg <= d && dim > 0 && !(lowest_is_cut && deg == t.lo)) acyclic_below = false;
        if (acyclic_below && !t.term(d).empty()) s = d;
    }
    if (!s) throw Error("no-such-s", "cohomology is nonzero at or below every nonzero degree");
    ProjComplex out;
    out.lo = *s;
    out.terms.assign(t.terms.begin() + (*s - t.lo), t.terms.end());
    out.diffs.assign(t.diffs.begin() + (*s - t.lo), t.diffs.end());
    return out;
}

ModuleComplex good_truncate(const Algebra& alg, const ProjComplex& c) {
    ProjComplex t = trimmed(c);
    if (t.empty()) throw Error("zero-complex", "good truncation of the zero complex");
    ModuleComplex m = to_module_complex(alg, t);
    const ModuleRep& first = m.terms.front();
    ModuleRep next = m.terms.size() > 1 ? m.terms[1] : zero_module(alg);
    ModuleMap d = m.terms.size() > 1 ? m.maps[0] : zero_map(first, next);
    Sub k = kernel(alg, first, next, d);
    ModuleComplex out;
    out.lo = t.lo - 1;
    out.terms.push_back(k.module);
    out.maps.push_back(k.inclusion);
    out.terms.insert(out.terms.end(), m.terms.begin(), m.terms.end());
    out.maps.insert(out.maps.end(), m.maps.begin(), m.maps.end());
    return out;
}

namespace {

MatQ complement_columns(const MatQ& span, Eigen::Index n) {
    std::vector<char> covered(n, 0);
    if (span.cols() > 0 && n > 0) {
        auto e = rref<Rational>(transpose<Rational>(span));
        for (auto c : e.pivots) covered[c] = 1;
    }
    std::vector<Eigen::Index> free;
    for (Eigen::Index j = 0; j < n; ++j)
        if (!covered[j]) free.push_back(j);
    MatQ out = zeros<Rational>(n, static_cast<Eigen::Index>(free.size()));
    for (std::size_t i = 0; i < free.size(); ++i) out(free[i], i) = 1;
    return out;
}

// Summand list of the projective cover: vertex u once per generator at u.
std::vector<int> cover_summands(const std::vector<MatQ>& gens) {
    std::vector<int> s;
    for (int u = 0; u < static_cast<int>(gens.size()); ++u)
        for (Eigen::Index c = 0; c < gens[u].cols(); ++c) s.push_back(u);
    return s;
}

// The map P(gens) -> m sending the generator of each summand to its vector.
ModuleMap cover_map(const Algebra& alg, const ModuleRep& m, const std::vector<MatQ>& gens) {
    const int nv = alg.quiver().num_vertices();
    std::vector<std::pair<int, Eigen::Index>> summand_gen;  // (vertex, column)
    for (int u = 0; u < nv; ++u)
        for (Eigen::Index c = 0; c < gens[u].cols(); ++c) summand_gen.push_back({u, c});
    ModuleMap f;
    for (int w = 0; w < nv; ++w) {
        std::vector<MatQ> cols;
        Eigen::Index total = 0;
        for (auto& [u, c] : summand_gen) {
            auto paths = basis_paths_from_to(alg, w, u);
            MatQ block = zeros<Rational>(m.dims[w], static_cast<Eigen::Index>(paths.size()));
            for (std::size_t k = 0; k < paths.size(); ++k)
                block.col(k) = mul<Rational>(path_action(alg, m, alg.basis_path(paths[k])), MatQ(gens[u].col(c)));
            total += block.cols();
            cols.push_back(block);
        }
        MatQ b = zeros<Rational>(m.dims[w], total);
        Eigen::Index off = 0;
        for (auto& blk : cols) {
            if (blk.cols()) b.middleCols(off, blk.cols()) = blk;
            off += blk.cols();
        }
        f.blocks.push_back(b);
    }
    return f;
}

// Differential rows for the generators of a submodule of projective_sum(ambient).
ProjMorphism generator_rows(const Algebra& alg, const Sub& sub, const std::vector<MatQ>& gens,
                            const std::vector<int>& ambient) {
    std::vector<int> summands = cover_summands(gens);
    ProjMorphism d = zero_morphism(alg, summands, ambient);
    int row = 0;
    for (int u = 0; u < static_cast<int>(gens.size()); ++u)
        for (Eigen::Index c = 0; c < gens[u].cols(); ++c, ++row) {
            MatQ v = mul<Rational>(sub.inclusion.blocks[u], MatQ(gens[u].col(c)));
            Eigen::Index pos = 0;
            for (int k = 0; k < static_cast<int>(ambient.size()); ++k)
                for (int idx : basis_paths_from_to(alg, u, ambient[k])) d.at(row, k)(idx) = v(pos++, 0);
        }
    return d;
}

struct SubResolution {
    std::vector<ProjMorphism> diffs;  // diffs[0]: Q^0 -> ambient, diffs[1]: Q^1 -> Q^0, ...
    std::vector<ModuleRep> syzygies;  // the submodule first
    bool terminated = false;
};

SubResolution resolve_sub(const Algebra& alg, Sub sub, std::vector<int> ambient, int steps) {
    SubResolution r;
    r.syzygies.push_back(sub.module);
    for (int k = 0; k < steps; ++k) {
        if (sub.module.total_dim() == 0) {
            r.terminated = true;
            break;
        }
        auto gens = top_generators(alg, sub.module);
        ProjMorphism d = generator_rows(alg, sub, gens, ambient);
        r.diffs.push_back(d);
        sub = kernel(alg, projective_sum(alg, d.source), projective_sum(alg, ambient),
                     morphism_as_module_map(alg, d));
        ambient = d.source;
        r.syzygies.push_back(sub.module);
    }
    if (!r.terminated && sub.module.total_dim() == 0) r.terminated = true;
    return r;
}

std::optional<std::pair<int, int>> periodicity(const Algebra& alg, const std::vector<ModuleRep>& syz, int window) {
    for (int j = 1; j < static_cast<int>(syz.size()); ++j)
        for (int i = std::max(0, j - window); i < j; ++i)
            if (syz[i].total_dim() > 0 && is_isomorphic(alg, syz[i], syz[j])) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

std::vector<MatQ> top_generators(const Algebra& alg, const ModuleRep& m) {
    const Quiver& q = alg.quiver();
    std::vector<MatQ> out;
    for (int u = 0; u < q.num_vertices(); ++u) {
        MatQ span = zeros<Rational>(m.dims[u], 0);
        for (int a : q.out_arrows(u))
            if (m.dims[q.arrow(a).tgt] > 0 && m.dims[u] > 0) span = hcat<Rational>(span, m.arrow_maps[a]);
        out.push_back(complement_columns(span, m.dims[u]));
    }
    return out;
}

Resolution minimal_resolution(const Algebra& alg, const ModuleRep& m, int bound) {
    Resolution res;
    res.syzygies.push_back(m);
    if (m.total_dim() == 0) {
        res.terminated = true;
        res.augmentation = ModuleMap{};
        return res;
    }
    auto gens = top_generators(alg, m);
    std::vector<int> p0 = cover_summands(gens);
    res.augmentation = cover_map(alg, m, gens);
    Sub omega1 = kernel(alg, projective_sum(alg, p0), m, res.augmentation);
    SubResolution rest = resolve_sub(alg, omega1, p0, std::max(0, bound - 1));
    for (auto& s : rest.syzygies) res.syzygies.push_back(s);
    res.terminated = rest.terminated;
    std::vector<ProjMorphism> diffs(rest.diffs.rbegin(), rest.diffs.rend());
    const int n = static_cast<int>(diffs.size());
    res.complex = diffs.empty() ? stalk(0, p0) : make_complex(-n, diffs);
    return res;
}

Perfectness is_perfect(const Algebra& alg, const ModuleRep& m, int bound, int window) {
    Perfectness p;
    p.resolution = minimal_resolution(alg, m, bound);
    const auto& syz = p.resolution.syzygies;
    if (p.resolution.terminated) {
        p.perfect = true;
        int last = -1;
        for (int k = 0; k < static_cast<int>(syz.size()); ++k)
            if (syz[k].total_dim() > 0) last = k;
        p.length = last;
        return p;
    }
    if (auto cert = periodicity(alg, syz, window)) {
        p.perfect = false;
        p.certificate = cert;
        return p;
    }
    throw Inconclusive("no termination and no periodic syzygy within " + std::to_string(bound) + " steps");
}

TruncationResolution resolve_truncation(const Algebra& alg, const ProjComplex& c, int bound, int window) {
    TruncationResolution out;
    ProjComplex t = trimmed(c);
    if (t.empty()) {
        out.complex = t;
        return out;
    }
    ModuleRep first = projective_sum(alg, t.terms.front());
    ModuleRep next = t.terms.size() > 1 ? projective_sum(alg, t.terms[1]) : zero_module(alg);
    ModuleMap d = t.terms.size() > 1 ? morphism_as_module_map(alg, t.diffs.front()) : zero_map(first, next);
    Sub k = kernel(alg, first, next, d);
    if (k.module.total_dim() == 0) {
        out.complex = t;
        return out;
    }
    SubResolution r = resolve_sub(alg, k, t.terms.front(), bound);
    if (!r.terminated) {
        if (auto cert = periodicity(alg, r.syzygies, window)) {
            out.perfect = false;
            out.certificate = cert;
            return out;
        }
        throw Inconclusive("kernel of the lowest differential: no termination and no periodicity");
    }
    std::vector<ProjMorphism> diffs(r.diffs.rbegin(), r.diffs.rend());
    const int n = static_cast<int>(diffs.size());
    diffs.insert(diffs.end(), t.diffs.begin(), t.diffs.end());
    out.complex = make_complex(t.lo - n, diffs);
    return out;
}

ProjComplex truncation_prefix(const Algebra& alg, const ProjComplex& c, int steps) {
    ProjComplex t = trimmed(c);
    if (t.empty()) return t;
    ModuleRep first = projective_sum(alg, t.terms.front());
    ModuleRep next = t.terms.size() > 1 ? projective_sum(alg, t.terms[1]) : zero_module(alg);
    ModuleMap d = t.terms.size() > 1 ? morphism_as_module_map(alg, t.diffs.front()) : zero_map(first, next);
    SubResolution r = resolve_sub(alg, kernel(alg, first, next, d), t.terms.front(), steps);
    if (r.diffs.empty()) return t;
    std::vector<ProjMorphism> diffs(r.diffs.rbegin(), r.diffs.rend());
    const int n = static_cast<int>(diffs.size());
    diffs.insert(diffs.end(), t.diffs.begin(), t.diffs.end());
    return make_complex(t.lo - n, diffs);
}

}  // namespace schurder
