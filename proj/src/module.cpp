#include "schurder/module.hpp"

#include "schurder/random.hpp"

namespace schurder {

int ModuleRep::total_dim() const {
    int n = 0;
    for (int d : dims) n += d;
    return n;
}

ModuleRep zero_module(const Algebra& alg) {
    ModuleRep m;
    m.dims.assign(alg.quiver().num_vertices(), 0);
    for (auto& a : alg.quiver().arrows()) { (void)a; m.arrow_maps.push_back(MatQ(0, 0)); }
    return m;
}

MatQ path_action(const Algebra& alg, const ModuleRep& m, const Path& p) {
    MatQ out = identity<Rational>(m.dims.at(p.start));
    for (int a : p.arrows) out = mul<Rational>(out, m.arrow_maps.at(a));
    (void)alg;
    return out;
}

bool satisfies_relations(const Algebra& alg, const ModuleRep& m) {
    const Quiver& q = alg.quiver();
    if (static_cast<int>(m.dims.size()) != q.num_vertices()) return false;
    if (static_cast<int>(m.arrow_maps.size()) != q.num_arrows()) return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const MatQ& x = m.arrow_maps[a];
        if (x.rows() != m.dims[q.arrow(a).src] || x.cols() != m.dims[q.arrow(a).tgt]) return false;
    }
    for (auto& r : alg.relations()) {
        const Path& p0 = r.front().path;
        MatQ acc = zeros<Rational>(m.dims[p0.start], m.dims[p0.end]);
        for (auto& t : r) acc += t.coef * path_action(alg, m, t.path);
        if (!is_zero_matrix<Rational>(acc)) return false;
    }
    return true;
}

bool is_equivariant(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt,
                    const ModuleMap& f) {
    const Quiver& q = alg.quiver();
    if (static_cast<int>(f.blocks.size()) != q.num_vertices()) return false;
    for (int u = 0; u < q.num_vertices(); ++u)
        if (f.blocks[u].rows() != tgt.dims[u] || f.blocks[u].cols() != src.dims[u]) return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrow(a).src, t = q.arrow(a).tgt;
        if (mul<Rational>(tgt.arrow_maps[a], f.blocks[t]) != mul<Rational>(f.blocks[s], src.arrow_maps[a]))
            return false;
    }
    return true;
}

namespace {

void require_equivariant(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt,
                         const ModuleMap& f) {
    if (!is_equivariant(alg, src, tgt, f))
        throw Error("non-equivariant-map", "map does not commute with the arrow actions");
}

// Columns of a basis of a complement to the column space of img inside k^n.
MatQ complement(const MatQ& img, Eigen::Index n) {
    std::vector<char> covered(n, 0);
    if (img.cols() > 0) {
        auto e = rref<Rational>(transpose<Rational>(img));
        for (auto c : e.pivots) covered[c] = 1;
    }
    std::vector<Eigen::Index> free;
    for (Eigen::Index j = 0; j < n; ++j)
        if (!covered[j]) free.push_back(j);
    MatQ c = zeros<Rational>(n, static_cast<Eigen::Index>(free.size()));
    for (std::size_t i = 0; i < free.size(); ++i) c(free[i], i) = 1;
    return c;
}

}  // namespace

Sub kernel(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt, const ModuleMap& f) {
    require_equivariant(alg, src, tgt, f);
    const Quiver& q = alg.quiver();
    Sub out;
    out.module.dims.resize(q.num_vertices());
    out.inclusion.blocks.resize(q.num_vertices());
    for (int u = 0; u < q.num_vertices(); ++u) {
        MatQ k = src.dims[u] == 0 ? MatQ(0, 0) : kernel_basis<Rational>(f.blocks[u]);
        if (src.dims[u] == 0) k = zeros<Rational>(0, 0);
        out.inclusion.blocks[u] = k;
        out.module.dims[u] = static_cast<int>(k.cols());
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrow(a).src, t = q.arrow(a).tgt;
        const MatQ& ks = out.inclusion.blocks[s];
        const MatQ& kt = out.inclusion.blocks[t];
        if (ks.cols() == 0 || kt.cols() == 0) {
            out.module.arrow_maps.push_back(zeros<Rational>(ks.cols(), kt.cols()));
            continue;
        }
        out.module.arrow_maps.push_back(coordinates<Rational>(ks, mul<Rational>(src.arrow_maps[a], kt)));
    }
    return out;
}

Sub image(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt, const ModuleMap& f) {
    require_equivariant(alg, src, tgt, f);
    const Quiver& q = alg.quiver();
    Sub out;
    out.module.dims.resize(q.num_vertices());
    out.inclusion.blocks.resize(q.num_vertices());
    for (int u = 0; u < q.num_vertices(); ++u) {
        MatQ b = image_basis<Rational>(f.blocks[u]);
        out.inclusion.blocks[u] = b;
        out.module.dims[u] = static_cast<int>(b.cols());
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrow(a).src, t = q.arrow(a).tgt;
        const MatQ& bs = out.inclusion.blocks[s];
        const MatQ& bt = out.inclusion.blocks[t];
        if (bs.cols() == 0 || bt.cols() == 0) {
            out.module.arrow_maps.push_back(zeros<Rational>(bs.cols(), bt.cols()));
            continue;
        }
        out.module.arrow_maps.push_back(coordinates<Rational>(bs, mul<Rational>(tgt.arrow_maps[a], bt)));
    }
    return out;
}

Quot cokernel(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt, const ModuleMap& f) {
    require_equivariant(alg, src, tgt, f);
    const Quiver& q = alg.quiver();
    Quot out;
    out.module.dims.resize(q.num_vertices());
    out.projection.blocks.resize(q.num_vertices());
    std::vector<MatQ> comp(q.num_vertices());
    for (int u = 0; u < q.num_vertices(); ++u) {
        const Eigen::Index n = tgt.dims[u];
        MatQ img = (n == 0 || src.dims[u] == 0) ? zeros<Rational>(n, 0) : image_basis<Rational>(f.blocks[u]);
        comp[u] = complement(img, n);
        const Eigen::Index c = comp[u].cols();
        out.module.dims[u] = static_cast<int>(c);
        if (n == 0) {
            out.projection.blocks[u] = zeros<Rational>(0, 0);
            continue;
        }
        MatQ inv = inverse<Rational>(hcat<Rational>(img, comp[u]));
        out.projection.blocks[u] = inv.bottomRows(c);
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrow(a).src, t = q.arrow(a).tgt;
        const Eigen::Index rs = out.module.dims[s], ct = out.module.dims[t];
        if (rs == 0 || ct == 0) {
            out.module.arrow_maps.push_back(zeros<Rational>(rs, ct));
            continue;
        }
        out.module.arrow_maps.push_back(
            mul<Rational>(out.projection.blocks[s], mul<Rational>(tgt.arrow_maps[a], comp[t])));
    }
    return out;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    ModuleRep m;
    for (std::size_t u = 0; u < a.dims.size(); ++u) m.dims.push_back(a.dims[u] + b.dims[u]);
    for (std::size_t k = 0; k < a.arrow_maps.size(); ++k) {
        const MatQ& x = a.arrow_maps[k];
        const MatQ& y = b.arrow_maps[k];
        MatQ z = zeros<Rational>(x.rows() + y.rows(), x.cols() + y.cols());
        if (x.size()) z.topLeftCorner(x.rows(), x.cols()) = x;
        if (y.size()) z.bottomRightCorner(y.rows(), y.cols()) = y;
        m.arrow_maps.push_back(z);
    }
    return m;
}

ModuleMap identity_map(const ModuleRep& m) {
    ModuleMap f;
    for (int d : m.dims) f.blocks.push_back(identity<Rational>(d));
    return f;
}

ModuleMap zero_map(const ModuleRep& src, const ModuleRep& tgt) {
    ModuleMap f;
    for (std::size_t u = 0; u < src.dims.size(); ++u)
        f.blocks.push_back(zeros<Rational>(tgt.dims[u], src.dims[u]));
    return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (std::size_t u = 0; u < f.blocks.size(); ++u) h.blocks.push_back(mul<Rational>(g.blocks[u], f.blocks[u]));
    return h;
}

std::vector<ModuleMap> hom_basis(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt) {
    const Quiver& q = alg.quiver();
    const int nv = q.num_vertices();
    // Unknown f_u(i,j) lives at offset[u] + j * rows + i (column major).
    std::vector<int> offset(nv + 1, 0);
    for (int u = 0; u < nv; ++u) offset[u + 1] = offset[u] + tgt.dims[u] * src.dims[u];
    const int nunk = offset[nv];
    int neq = 0;
    for (int a = 0; a < q.num_arrows(); ++a) neq += tgt.dims[q.arrow(a).src] * src.dims[q.arrow(a).tgt];
    MatQ sys = zeros<Rational>(neq, nunk);
    int row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrow(a).src, t = q.arrow(a).tgt;
        const MatQ& N = tgt.arrow_maps[a];  // W_s x W_t
        const MatQ& M = src.arrow_maps[a];  // V_s x V_t
        const int ws = tgt.dims[s], wt = tgt.dims[t], vs = src.dims[s], vt = src.dims[t];
        // (N f_t - f_s M)(i,j) = sum_k N(i,k) f_t(k,j) - sum_k f_s(i,k) M(k,j)
        for (int j = 0; j < vt; ++j)
            for (int i = 0; i < ws; ++i, ++row) {
                for (int k = 0; k < wt; ++k)
                    if (!N(i, k).is_zero()) sys(row, offset[t] + j * wt + k) += N(i, k);
                for (int k = 0; k < vs; ++k)
                    if (!M(k, j).is_zero()) sys(row, offset[s] + k * ws + i) -= M(k, j);
            }
    }
    MatQ ker = neq == 0 ? identity<Rational>(nunk) : kernel_basis<Rational>(sys);
    std::vector<ModuleMap> out;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        ModuleMap f;
        for (int u = 0; u < nv; ++u) {
            MatQ b(tgt.dims[u], src.dims[u]);
            for (int j = 0; j < src.dims[u]; ++j)
                for (int i = 0; i < tgt.dims[u]; ++i) b(i, j) = ker(offset[u] + j * tgt.dims[u] + i, c);
            f.blocks.push_back(b);
        }
        out.push_back(f);
    }
    return out;
}

namespace {

ModuleMap combine(const std::vector<ModuleMap>& basis, const std::vector<Rational>& coef) {
    ModuleMap f = basis.front();
    for (auto& b : f.blocks) b = zeros<Rational>(b.rows(), b.cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coef[k].is_zero()) continue;
        for (std::size_t u = 0; u < f.blocks.size(); ++u) f.blocks[u] += coef[k] * basis[k].blocks[u];
    }
    return f;
}

bool invertible(const ModuleMap& f) {
    for (auto& b : f.blocks)
        if (b.rows() != b.cols() || rank<Rational>(b) != b.rows()) return false;
    return true;
}

}  // namespace

bool is_isomorphic(const Algebra& alg, const ModuleRep& a, const ModuleRep& b) {
    if (a.dims != b.dims) return false;
    if (a.total_dim() == 0) return true;
    auto ab = hom_basis(alg, a, b);
    if (ab.empty()) return false;
    const std::size_t dab = ab.size();
    if (hom_basis(alg, b, a).size() != dab || hom_basis(alg, a, a).size() != dab ||
        hom_basis(alg, b, b).size() != dab)
        return false;

    std::vector<Rational> c(dab);
    for (int t = 0; t < 5; ++t) {
        for (auto& x : c) x = random_rational(50);
        if (invertible(combine(ab, c))) return true;
    }
    if (dab <= 8) {
        std::vector<int> g(dab, -1);
        while (true) {
            for (std::size_t k = 0; k < dab; ++k) c[k] = g[k];
            if (invertible(combine(ab, c))) return true;
            std::size_t k = 0;
            while (k < dab && g[k] == 1) g[k++] = -1;
            if (k == dab) break;
            ++g[k];
        }
        return false;
    }
    // Determinant has degree <= total dim; wide samples make a miss negligible.
    for (int t = 0; t < 20; ++t) {
        for (auto& x : c) x = random_rational(1000000);
        if (invertible(combine(ab, c))) return true;
    }
    return false;
}

std::vector<int> top_dims(const Algebra& alg, const ModuleRep& m) {
    const Quiver& q = alg.quiver();
    std::vector<int> out(q.num_vertices());
    for (int u = 0; u < q.num_vertices(); ++u) {
        MatQ span = zeros<Rational>(m.dims[u], 0);
        for (int a : q.out_arrows(u))
            if (m.dims[q.arrow(a).tgt] > 0) span = hcat<Rational>(span, m.arrow_maps[a]);
        out[u] = m.dims[u] - static_cast<int>(rank<Rational>(span));
    }
    return out;
}

}  // namespace schurder
