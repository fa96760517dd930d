#include "schurder/projective.hpp"

#include <sstream>

namespace schurder {

ProjMorphism zero_morphism(const Algebra& alg, std::vector<int> source, std::vector<int> target) {
    ProjMorphism f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.entries.assign(f.source.size() * f.target.size(), alg.zero());
    return f;
}

ProjMorphism identity_morphism(const Algebra& alg, const std::vector<int>& summands) {
    ProjMorphism f = zero_morphism(alg, summands, summands);
    for (int i = 0; i < f.rows(); ++i) f.at(i, i) = alg.unit(summands[i]);
    return f;
}

ProjMorphism p_of(const Algebra& alg, int s, int t, const Element& w) {
    ProjMorphism f = zero_morphism(alg, {s}, {t});
    f.at(0, 0) = w;
    return f;
}

ProjMorphism compose(const Algebra& alg, const ProjMorphism& f, const ProjMorphism& g) {
    if (f.target != g.source) throw Error("dimension-mismatch", "composite of non-matching morphisms");
    ProjMorphism h = zero_morphism(alg, f.source, g.target);
    for (int i = 0; i < f.rows(); ++i)
        for (int k = 0; k < f.cols(); ++k) {
            const Element& a = f.at(i, k);
            if (is_zero_matrix<Rational>(a)) continue;
            for (int j = 0; j < g.cols(); ++j) {
                const Element& b = g.at(k, j);
                if (!is_zero_matrix<Rational>(b)) h.at(i, j) += alg.mul(a, b);
            }
        }
    return h;
}

ProjMorphism add(const ProjMorphism& f, const ProjMorphism& g) {
    if (f.source != g.source || f.target != g.target)
        throw Error("dimension-mismatch", "sum of morphisms with different shapes");
    ProjMorphism h = f;
    for (std::size_t k = 0; k < h.entries.size(); ++k) h.entries[k] += g.entries[k];
    return h;
}

ProjMorphism scale(const Rational& c, const ProjMorphism& f) {
    ProjMorphism h = f;
    for (auto& e : h.entries) e *= c;
    return h;
}

bool is_zero(const ProjMorphism& f) {
    for (auto& e : f.entries)
        if (!is_zero_matrix<Rational>(e)) return false;
    return true;
}

bool well_typed(const Algebra& alg, const ProjMorphism& f) {
    if (f.entries.size() != f.source.size() * f.target.size()) return false;
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            if (f.at(i, j).size() != alg.dim() || !alg.is_homogeneous(f.at(i, j), f.source[i], f.target[j]))
                return false;
    return true;
}

bool radical_membership(const Algebra& alg, const ProjMorphism& f) {
    for (auto& e : f.entries)
        if (!alg.in_radical(e)) return false;
    return true;
}

std::vector<int> basis_paths_from_to(const Algebra& alg, int u, int t) {
    std::vector<int> out;
    for (int i : alg.projective_basis(t))
        if (alg.basis_path(i).start == u) out.push_back(i);
    return out;
}

ModuleRep projective_sum(const Algebra& alg, const std::vector<int>& summands) {
    const Quiver& q = alg.quiver();
    const int nv = q.num_vertices();
    // coords[u] lists (summand, basis index) pairs spanning V_u.
    std::vector<std::vector<std::pair<int, int>>> coords(nv);
    for (int u = 0; u < nv; ++u)
        for (int k = 0; k < static_cast<int>(summands.size()); ++k)
            for (int i : basis_paths_from_to(alg, u, summands[k])) coords[u].push_back({k, i});
    ModuleRep m;
    for (int u = 0; u < nv; ++u) m.dims.push_back(static_cast<int>(coords[u].size()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrow(a).src, t = q.arrow(a).tgt;
        MatQ x = zeros<Rational>(m.dims[s], m.dims[t]);
        const Element ea = alg.normalize(arrow_path(q, a));
        for (int c = 0; c < m.dims[t]; ++c) {
            auto [k, i] = coords[t][c];
            Element b = alg.zero();
            b(i) = 1;
            Element prod = alg.mul(ea, b);
            for (int r = 0; r < m.dims[s]; ++r)
                if (coords[s][r].first == k) x(r, c) = prod(coords[s][r].second);
        }
        m.arrow_maps.push_back(x);
    }
    return m;
}

ModuleRep projective(const Algebra& alg, int v) { return projective_sum(alg, {v}); }

int projective_sum_dim(const Algebra& alg, const std::vector<int>& summands) {
    int n = 0;
    for (int s : summands) n += static_cast<int>(alg.projective_basis(s).size());
    return n;
}

MatQ apply_morphism(const Algebra& alg, const ProjMorphism& f) {
    std::vector<int> row_off(f.cols() + 1, 0), col_off(f.rows() + 1, 0);
    for (int j = 0; j < f.cols(); ++j)
        row_off[j + 1] = row_off[j] + static_cast<int>(alg.projective_basis(f.target[j]).size());
    for (int i = 0; i < f.rows(); ++i)
        col_off[i + 1] = col_off[i] + static_cast<int>(alg.projective_basis(f.source[i]).size());
    MatQ m = zeros<Rational>(row_off.back(), col_off.back());
    for (int i = 0; i < f.rows(); ++i) {
        const auto& src_basis = alg.projective_basis(f.source[i]);
        for (std::size_t c = 0; c < src_basis.size(); ++c) {
            Element x = alg.zero();
            x(src_basis[c]) = 1;
            for (int j = 0; j < f.cols(); ++j) {
                if (is_zero_matrix<Rational>(f.at(i, j))) continue;
                Element y = alg.mul(x, f.at(i, j));
                const auto& tgt_basis = alg.projective_basis(f.target[j]);
                for (std::size_t r = 0; r < tgt_basis.size(); ++r)
                    m(row_off[j] + r, col_off[i] + c) = y(tgt_basis[r]);
            }
        }
    }
    return m;
}

ModuleMap morphism_as_module_map(const Algebra& alg, const ProjMorphism& f) {
    const int nv = alg.quiver().num_vertices();
    ModuleMap out;
    for (int u = 0; u < nv; ++u) {
        std::vector<std::pair<int, int>> src, tgt;
        for (int k = 0; k < f.rows(); ++k)
            for (int i : basis_paths_from_to(alg, u, f.source[k])) src.push_back({k, i});
        for (int k = 0; k < f.cols(); ++k)
            for (int i : basis_paths_from_to(alg, u, f.target[k])) tgt.push_back({k, i});
        MatQ b = zeros<Rational>(static_cast<Eigen::Index>(tgt.size()), static_cast<Eigen::Index>(src.size()));
        for (std::size_t c = 0; c < src.size(); ++c) {
            Element x = alg.zero();
            x(src[c].second) = 1;
            std::vector<Element> img(f.cols());
            for (int j = 0; j < f.cols(); ++j)
                img[j] = is_zero_matrix<Rational>(f.at(src[c].first, j)) ? alg.zero()
                                                                          : alg.mul(x, f.at(src[c].first, j));
            for (std::size_t r = 0; r < tgt.size(); ++r) b(r, c) = img[tgt[r].first](tgt[r].second);
        }
        out.blocks.push_back(b);
    }
    return out;
}

ProjMorphism block_diag(const Algebra& alg, const ProjMorphism& f, const ProjMorphism& g) {
    std::vector<int> s = f.source, t = f.target;
    s.insert(s.end(), g.source.begin(), g.source.end());
    t.insert(t.end(), g.target.begin(), g.target.end());
    ProjMorphism h = zero_morphism(alg, s, t);
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) h.at(i, j) = f.at(i, j);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) h.at(f.rows() + i, f.cols() + j) = g.at(i, j);
    return h;
}

std::string to_string(const Algebra& alg, const ProjMorphism& f) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < f.cols(); ++j) os << (j ? ", " : "") << alg.to_string(f.at(i, j));
    }
    os << "]";
    return os.str();
}

}  // namespace schurder
