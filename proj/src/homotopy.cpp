#include "schurder/homotopy.hpp"

#include "schurder/random.hpp"

#include <algorithm>
#include <cstdlib>

namespace schurder {

namespace {

// Slots of graded maps x^i -> y^{i+shift} over degrees [lo, hi].
std::vector<Slot> make_slots(const Algebra& alg, const ProjComplex& x, const ProjComplex& y, int lo, int hi,
                             int shift) {
    std::vector<Slot> s;
    for (int i = lo; i <= hi; ++i) {
        auto src = x.term(i), tgt = y.term(i + shift);
        for (int r = 0; r < static_cast<int>(src.size()); ++r)
            for (int c = 0; c < static_cast<int>(tgt.size()); ++c)
                for (int b : basis_paths_from_to(alg, src[r], tgt[c])) s.push_back({i, r, c, b});
    }
    return s;
}

std::vector<ProjMorphism> assemble(const Algebra& alg, const ProjComplex& x, const ProjComplex& y, int lo, int hi,
                                   int shift, const std::vector<Slot>& slots, const VecQ& v) {
    std::vector<ProjMorphism> f;
    for (int i = lo; i <= hi; ++i) f.push_back(zero_morphism(alg, x.term(i), y.term(i + shift)));
    for (std::size_t k = 0; k < slots.size(); ++k)
        if (!is_zero(v(k))) f[slots[k].degree - lo].at(slots[k].row, slots[k].col)(slots[k].basis) = v(k);
    return f;
}

VecQ flatten(const std::vector<Slot>& slots, int lo, const std::vector<ProjMorphism>& f) {
    VecQ v = VecQ::Zero(static_cast<Eigen::Index>(slots.size()));
    for (std::size_t k = 0; k < slots.size(); ++k) v(k) = f[slots[k].degree - lo].at(slots[k].row, slots[k].col)(slots[k].basis);
    return v;
}

VecQ unit_vector(Eigen::Index n, Eigen::Index k) {
    VecQ v = VecQ::Zero(n);
    v(k) = 1;
    return v;
}

// Coefficients of the obstruction "d_x then f - f then d_y" at every degree.
VecQ chain_defect(const Algebra& alg, const ProjComplex& x, const ProjComplex& y, int lo, int hi,
                  const std::vector<ProjMorphism>& f) {
    std::vector<Rational> out;
    auto comp = [&](int i) -> const ProjMorphism* {
        return (i >= lo && i <= hi) ? &f[i - lo] : nullptr;
    };
    for (int i = lo - 1; i <= hi; ++i) {
        auto src = x.term(i), tgt = y.term(i + 1);
        if (src.empty() || tgt.empty()) continue;
        ProjMorphism e = zero_morphism(alg, src, tgt);
        if (auto g = comp(i + 1)) e = add(e, compose(alg, diff_at(alg, x, i), *g));
        if (auto g = comp(i)) e = add(e, scale(Rational(-1), compose(alg, *g, diff_at(alg, y, i))));
        for (int r = 0; r < e.rows(); ++r)
            for (int c = 0; c < e.cols(); ++c)
                for (int b : basis_paths_from_to(alg, src[r], tgt[c])) out.push_back(e.at(r, c)(b));
    }
    VecQ v(static_cast<Eigen::Index>(out.size()));
    for (std::size_t k = 0; k < out.size(); ++k) v(k) = out[k];
    return v;
}

std::pair<int, int> window(const ProjComplex& x, const ProjComplex& y) {
    if (x.empty() || y.empty()) return {0, -1};
    return {std::max(x.lo, y.lo), std::min(x.hi(), y.hi())};
}

// Path-basis matrices of each degree component.
std::vector<MatQ> applied(const Algebra& alg, const std::vector<ProjMorphism>& f) {
    std::vector<MatQ> out;
    for (auto& g : f) out.push_back(apply_morphism(alg, g));
    return out;
}

// tr of the composite "f then g" on the underlying spaces of the source of f.
Rational trace_pair(const std::vector<MatQ>& f, const std::vector<MatQ>& g) {
    Rational t = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (Eigen::Index r = 0; r < f[i].rows(); ++r)
            for (Eigen::Index c = 0; c < f[i].cols(); ++c)
                if (!is_zero(f[i](r, c))) t += f[i](r, c) * g[i](c, r);
    return t;
}

std::vector<std::vector<MatQ>> basis_actions(const Algebra& alg, const ProjComplex& x, const ProjComplex& y,
                                             const ChainMapSpace& s) {
    std::vector<std::vector<MatQ>> out;
    for (Eigen::Index k = 0; k < s.chain_maps.cols(); ++k)
        out.push_back(applied(alg, graded_map(alg, x, y, s, s.chain_maps.col(k))));
    return out;
}

// --- Rational roots of an integer polynomial, for the minimal-polynomial test.

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> ds{1};
    if (n == 0) return ds;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        if (p > 2000000) throw Inconclusive("coefficient too large to factor");
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e == 0) continue;
        std::size_t old = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < old; ++j) ds.push_back(ds[j] * pk);
        }
    }
    if (m > 1) {
        std::size_t old = ds.size();
        for (std::size_t j = 0; j < old; ++j) ds.push_back(ds[j] * m);
    }
    return ds;
}

// coeffs[k] is the coefficient of t^k; monic of degree >= 1.
bool has_rational_root(const std::vector<Rational>& coeffs) {
    if (is_zero(coeffs.front())) return true;
    Integer den = 1;
    for (auto& c : coeffs) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    std::vector<Integer> z;
    for (auto& c : coeffs) z.push_back(Integer(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c))));
    for (auto& p : divisors(z.front()))
        for (auto& q : divisors(z.back()))
            for (int sign : {1, -1}) {
                Rational r(Integer(sign * p), q);
                Rational acc = 0;
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
                if (is_zero(acc)) return true;
            }
    return false;
}

// Finite-dimensional algebra with structure constants, used for End/rad.
struct SmallAlgebra {
    int n = 0;
    std::vector<VecQ> table;  // table[a * n + b] = e_a * e_b
    VecQ unit;

    VecQ mul(const VecQ& p, const VecQ& q) const {
        VecQ out = VecQ::Zero(n);
        for (int a = 0; a < n; ++a) {
            if (is_zero(p(a))) continue;
            for (int b = 0; b < n; ++b)
                if (!is_zero(q(b))) out += (p(a) * q(b)) * table[a * n + b];
        }
        return out;
    }

    // Monic minimal polynomial of v, low degree first.
    std::vector<Rational> min_poly(const VecQ& v) const {
        MatQ powers = zeros<Rational>(n, 0);
        VecQ cur = unit;
        for (int d = 0; d <= n; ++d) {
            MatQ next = hcat<Rational>(powers, MatQ(cur));
            if (rank<Rational>(next) == d) {
                MatQ c = coordinates<Rational>(powers, MatQ(cur));
                std::vector<Rational> coeffs;
                for (int k = 0; k < d; ++k) coeffs.push_back(-c(k, 0));
                coeffs.push_back(1);
                return coeffs;
            }
            powers = next;
            cur = mul(cur, v);
        }
        throw Error("internal", "minimal polynomial degree exceeds dimension");
    }
};

// Decides whether a semisimple algebra (given by structure constants) is a
// division algebra. Each non-scalar element whose minimal polynomial has a
// rational root yields a zero divisor; an element generating the whole
// algebra with an irreducible minimal polynomial proves it is a field.
bool is_division_algebra(const SmallAlgebra& q) {
    std::vector<VecQ> candidates;
    for (int k = 0; k < q.n; ++k) candidates.push_back(unit_vector(q.n, k));
    for (int t = 0; t < 12; ++t) {
        VecQ v(q.n);
        for (int k = 0; k < q.n; ++k) v(k) = random_rational(3);
        candidates.push_back(v);
    }
    for (auto& v : candidates) {
        auto mp = q.min_poly(v);
        const int deg = static_cast<int>(mp.size()) - 1;
        if (deg <= 1) continue;
        if (has_rational_root(mp)) return false;
        if (deg == q.n && deg <= 3) return true;
    }
    throw Inconclusive("endomorphism ring modulo radical has dimension " + std::to_string(q.n) +
                       " and could not be classified");
}

}  // namespace

ChainMapSpace hom_complex(const Algebra& alg, const ProjComplex& x0, const ProjComplex& y0) {
    ProjComplex x = trimmed(x0), y = trimmed(y0);
    ChainMapSpace s;
    auto [lo, hi] = window(x, y);
    s.lo = lo;
    s.hi = hi;
    s.slots = make_slots(alg, x, y, lo, hi, 0);
    const Eigen::Index nv = static_cast<Eigen::Index>(s.slots.size());
    if (nv == 0) {
        s.chain_maps = zeros<Rational>(0, 0);
        s.null_homotopic = zeros<Rational>(0, 0);
        return s;
    }
    MatQ eq;
    for (Eigen::Index k = 0; k < nv; ++k) {
        VecQ col = chain_defect(alg, x, y, lo, hi, assemble(alg, x, y, lo, hi, 0, s.slots, unit_vector(nv, k)));
        if (k == 0) eq = zeros<Rational>(col.size(), nv);
        eq.col(k) = col;
    }
    s.chain_maps = eq.rows() == 0 ? identity<Rational>(nv) : kernel_basis<Rational>(eq);

    // Homotopies h^i : x^i -> y^{i-1}; the induced map is h then d_y plus d_x then h.
    const int hlo = std::max(x.lo, y.lo + 1), hhi = std::min(x.hi(), y.hi() + 1);
    std::vector<Slot> hs = make_slots(alg, x, y, hlo, hhi, -1);
    MatQ img = zeros<Rational>(nv, static_cast<Eigen::Index>(hs.size()));
    for (std::size_t k = 0; k < hs.size(); ++k) {
        auto h = assemble(alg, x, y, hlo, hhi, -1, hs, unit_vector(static_cast<Eigen::Index>(hs.size()), k));
        std::vector<ProjMorphism> f;
        for (int i = lo; i <= hi; ++i) {
            ProjMorphism fi = zero_morphism(alg, x.term(i), y.term(i));
            if (i >= hlo && i <= hhi) fi = add(fi, compose(alg, h[i - hlo], diff_at(alg, y, i - 1)));
            if (i + 1 >= hlo && i + 1 <= hhi) fi = add(fi, compose(alg, diff_at(alg, x, i), h[i + 1 - hlo]));
            f.push_back(fi);
        }
        img.col(k) = flatten(s.slots, lo, f);
    }
    s.null_homotopic = image_basis<Rational>(img);
    return s;
}

std::vector<ProjMorphism> graded_map(const Algebra& alg, const ProjComplex& x, const ProjComplex& y,
                                     const ChainMapSpace& space, const VecQ& coords) {
    return assemble(alg, trimmed(x), trimmed(y), space.lo, space.hi, 0, space.slots, coords);
}

bool is_chain_map(const Algebra& alg, const ProjComplex& x, const ProjComplex& y, int lo,
                  const std::vector<ProjMorphism>& f) {
    const int hi = lo + static_cast<int>(f.size()) - 1;
    for (int i = lo; i <= hi; ++i)
        if (f[i - lo].source != x.term(i) || f[i - lo].target != y.term(i)) return false;
    // Components outside [lo, hi] are zero; the defect must vanish everywhere.
    VecQ d = chain_defect(alg, x, y, lo, hi, f);
    for (Eigen::Index k = 0; k < d.size(); ++k)
        if (!is_zero(d(k))) return false;
    // Degrees of x or y beyond the window must not need a nonzero component.
    for (int i = std::min(x.lo, y.lo); i <= std::max(x.hi(), y.hi()); ++i)
        if ((i < lo || i > hi) && !x.term(i).empty() && !y.term(i).empty()) return false;
    return true;
}

bool same_multiplicities(const Algebra& alg, const ProjComplex& x0, const ProjComplex& y0) {
    ProjComplex x = trimmed(x0), y = trimmed(y0);
    if (x.empty() || y.empty()) return x.empty() && y.empty();
    if (x.lo != y.lo || x.hi() != y.hi()) return false;
    for (int i = x.lo; i <= x.hi(); ++i)
        if (x.multiplicities(alg, i) != y.multiplicities(alg, i)) return false;
    return true;
}

bool is_indecomposable(const Algebra& alg, const ProjComplex& x0) {
    ProjComplex x = trimmed(x0);
    if (x.empty()) return false;
    ChainMapSpace s = hom_complex(alg, x, x);
    const int n = s.dim_chain();
    if (n == 1) return true;
    auto acts = basis_actions(alg, x, x, s);
    MatQ gram = zeros<Rational>(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) gram(a, b) = gram(b, a) = trace_pair(acts[a], acts[b]);
    const int r = static_cast<int>(rank<Rational>(gram));
    if (r == 1) return true;

    // Structure constants of End(x) in the chain-map basis.
    SmallAlgebra e;
    e.n = n;
    std::vector<std::vector<ProjMorphism>> maps;
    for (int a = 0; a < n; ++a) maps.push_back(graded_map(alg, x, x, s, s.chain_maps.col(a)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<ProjMorphism> ab;
            for (std::size_t i = 0; i < maps[a].size(); ++i) ab.push_back(compose(alg, maps[a][i], maps[b][i]));
            e.table.push_back(coordinates<Rational>(s.chain_maps, MatQ(flatten(s.slots, s.lo, ab))).col(0));
        }
    std::vector<ProjMorphism> id;
    for (int i = s.lo; i <= s.hi; ++i) id.push_back(identity_morphism(alg, x.term(i)));
    e.unit = coordinates<Rational>(s.chain_maps, MatQ(flatten(s.slots, s.lo, id))).col(0);

    // Quotient by the radical (the kernel of the Gram matrix).
    MatQ rad = kernel_basis<Rational>(gram);
    MatQ basis = rad;
    std::vector<Eigen::Index> comp;
    for (Eigen::Index k = 0; k < n && static_cast<int>(comp.size()) < r; ++k) {
        MatQ trial = hcat<Rational>(basis, MatQ(unit_vector(n, k)));
        if (rank<Rational>(trial) == trial.cols()) {
            basis = trial;
            comp.push_back(k);
        }
    }
    // basis = [rad | complement]; quotient coordinates are the trailing r entries.
    SmallAlgebra q;
    q.n = r;
    auto project = [&](const VecQ& v) {
        VecQ c = coordinates<Rational>(basis, MatQ(v)).col(0);
        return VecQ(c.tail(r));
    };
    auto lift = [&](const VecQ& v) {
        VecQ out = VecQ::Zero(n);
        for (int k = 0; k < r; ++k) out(comp[k]) = v(k);
        return out;
    };
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) q.table.push_back(project(e.mul(lift(unit_vector(r, a)), lift(unit_vector(r, b)))));
    q.unit = project(e.unit);
    return is_division_algebra(q);
}

std::optional<std::vector<ProjMorphism>> find_invertible_chain_map(const Algebra& alg, const ProjComplex& x0,
                                                                   const ProjComplex& y0, int attempts) {
    ProjComplex x = trimmed(x0), y = trimmed(y0);
    if (!same_multiplicities(alg, x, y)) return std::nullopt;
    if (x.empty()) return std::vector<ProjMorphism>{};
    ChainMapSpace s = hom_complex(alg, x, y);
    if (s.dim_chain() == 0) return std::nullopt;
    for (int t = 0; t < attempts; ++t) {
        VecQ c(s.dim_chain());
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = random_rational(t < attempts / 2 ? 5 : 1000);
        auto f = graded_map(alg, x, y, s, s.chain_maps * c);
        bool ok = true;
        for (auto& g : f)
            if (!is_invertible<Rational>(apply_morphism(alg, g))) {
                ok = false;
                break;
            }
        if (ok) return f;
    }
    return std::nullopt;
}

bool is_isomorphic_K(const Algebra& alg, const ProjComplex& x0, const ProjComplex& y0) {
    ProjComplex x = trimmed(x0), y = trimmed(y0);
    if (!same_multiplicities(alg, x, y)) return false;
    if (x.empty()) return true;
    if (same_complex(x, y)) return true;

    ChainMapSpace xx = hom_complex(alg, x, x), yy = hom_complex(alg, y, y);
    auto local_rank_one = [&](const ProjComplex& c, const ChainMapSpace& s) {
        auto acts = basis_actions(alg, c, c, s);
        MatQ gram = zeros<Rational>(s.dim_chain(), s.dim_chain());
        for (int a = 0; a < s.dim_chain(); ++a)
            for (int b = a; b < s.dim_chain(); ++b) gram(a, b) = gram(b, a) = trace_pair(acts[a], acts[b]);
        return rank<Rational>(gram) == 1;
    };
    if (local_rank_one(x, xx) && local_rank_one(y, yy)) {
        ChainMapSpace xy = hom_complex(alg, x, y), yx = hom_complex(alg, y, x);
        auto f = basis_actions(alg, x, y, xy), g = basis_actions(alg, y, x, yx);
        for (auto& fa : f)
            for (auto& gb : g) {
                // Degree windows of xy and yx coincide since the supports agree.
                Rational t = 0;
                for (std::size_t i = 0; i < fa.size(); ++i) {
                    MatQ prod = mul<Rational>(gb[i], fa[i]);
                    for (Eigen::Index d = 0; d < prod.rows(); ++d) t += prod(d, d);
                }
                if (!is_zero(t)) return true;
            }
        return false;
    }
    if (find_invertible_chain_map(alg, x, y)) return true;
    // Isomorphic objects have equal Hom dimensions against each other.
    const int exx = xx.dim_homotopy(), eyy = yy.dim_homotopy();
    const int exy = hom_complex(alg, x, y).dim_homotopy(), eyx = hom_complex(alg, y, x).dim_homotopy();
    if (exx != eyy || exx != exy || exx != eyx) return false;
    throw Inconclusive("no invertible chain map found between complexes with decomposable endomorphism rings");
}

}  // namespace schurder
