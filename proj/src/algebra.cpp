#include "schurder/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schurder {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (int v = 0; v < num_vertices(); ++v)
        if (!vindex_.emplace(vertices_[v], v).second)
            throw Error("ill-formed-quiver", "duplicate vertex " + vertices_[v]);
    out_.assign(vertices_.size(), {});
    for (int a = 0; a < num_arrows(); ++a) {
        const Arrow& ar = arrows_[a];
        if (ar.src < 0 || ar.src >= num_vertices() || ar.tgt < 0 || ar.tgt >= num_vertices())
            throw Error("ill-formed-quiver", "arrow " + ar.name + " has an undeclared endpoint");
        if (!aindex_.emplace(ar.name, a).second)
            throw Error("ill-formed-quiver", "duplicate arrow " + ar.name);
        if (vindex_.count(ar.name))
            throw Error("ill-formed-quiver", "arrow name clashes with a vertex: " + ar.name);
        out_[ar.src].push_back(a);
    }
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) throw Error("unknown-vertex", name);
    return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
    auto it = aindex_.find(name);
    if (it == aindex_.end()) throw Error("unknown-arrow", name);
    return it->second;
}

Path trivial_path(int v) { return Path{v, v, {}}; }

Path arrow_path(const Quiver& q, int a) { return Path{q.arrow(a).src, q.arrow(a).tgt, {a}}; }

Path make_path(const Quiver& q, const std::vector<std::string>& names, int vertex) {
    if (names.empty()) {
        if (vertex < 0 || vertex >= q.num_vertices())
            throw Error("ill-formed-relation", "trivial path without a vertex");
        return trivial_path(vertex);
    }
    Path p = arrow_path(q, q.arrow_index(names[0]));
    for (std::size_t i = 1; i < names.size(); ++i) {
        int a = q.arrow_index(names[i]);
        if (q.arrow(a).src != p.end)
            throw Error("ill-formed-relation", "path not composable at " + names[i]);
        p.arrows.push_back(a);
        p.end = q.arrow(a).tgt;
    }
    if (vertex >= 0 && vertex != p.start)
        throw Error("ill-formed-relation", "path does not start at the given vertex");
    return p;
}

std::optional<Path> concat(const Path& u, const Path& v) {
    if (u.end != v.start) return std::nullopt;
    Path w{u.start, v.end, u.arrows};
    w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
    return w;
}

std::string path_string(const Quiver& q, const Path& p) {
    if (p.trivial()) return "e_" + q.vertices()[p.start];
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ' ';
        s += q.arrow(p.arrows[i]).name;
    }
    return s;
}

namespace {

using Sparse = std::map<int, Rational>;

void axpy(Sparse& y, const Rational& a, const Sparse& x) {
    for (auto& [k, v] : x) {
        Rational& t = y[k];
        t += a * v;
        if (t.is_zero()) y.erase(k);
    }
}

}  // namespace

Algebra Algebra::build(std::string name, Quiver q, std::vector<PathCombination> rels,
                       int length_bound) {
    Algebra A;
    A.name_ = std::move(name);
    A.quiver_ = std::move(q);
    const Quiver& Q = A.quiver_;

    // Validate and bucket relations by degree.
    std::map<std::size_t, std::vector<PathCombination>> by_degree;
    for (auto& r : rels) {
        if (r.empty()) throw Error("ill-formed-relation", "empty relation");
        const std::size_t deg = r[0].path.length();
        for (auto& t : r) {
            if (t.path.length() == 0)
                throw Error("ill-formed-relation", "relation term of length 0");
            if (t.path.length() != deg)
                throw Error("ill-formed-relation", "relation is not homogeneous");
            if (t.path.start != r[0].path.start || t.path.end != r[0].path.end)
                throw Error("ill-formed-relation", "relation terms have different endpoints");
        }
        by_degree[deg].push_back(r);
    }
    A.relations_ = rels;

    // Degree-by-degree linear completion: I_n = I_{n-1} kQ_1 + kQ_1 I_{n-1} + R_n.
    std::vector<Path> layer;
    for (int v = 0; v < Q.num_vertices(); ++v) layer.push_back(trivial_path(v));
    std::vector<std::vector<Path>> standard;
    std::vector<Path> prev_layer;
    std::vector<Sparse> prev_ideal;  // basis of I_{n-1} as sparse rows over prev_layer
    int n = 0;
    while (true) {
        if (n > length_bound)
            throw Error("infinite-dimensional-suspected",
                        A.name_ + ": quotient is nonzero in degree " + std::to_string(length_bound));
        // Columns: paths of length n in descending order so larger monomials pivot first.
        std::vector<Path> cols = layer;
        std::sort(cols.begin(), cols.end(), [](const Path& a, const Path& b) { return b < a; });
        std::map<Path, int> col_of;
        for (int i = 0; i < static_cast<int>(cols.size()); ++i) col_of[cols[i]] = i;

        std::vector<Sparse> gens;
        for (const Sparse& g : prev_ideal) {
            for (int a = 0; a < Q.num_arrows(); ++a) {
                Sparse right, left;
                const Path ap = arrow_path(Q, a);
                for (auto& [c, coef] : g) {
                    if (auto p = concat(prev_layer[c], ap)) right[col_of.at(*p)] += coef;
                    if (auto p = concat(ap, prev_layer[c])) left[col_of.at(*p)] += coef;
                }
                if (!right.empty()) gens.push_back(right);
                if (!left.empty()) gens.push_back(left);
            }
        }
        if (auto it = by_degree.find(static_cast<std::size_t>(n)); it != by_degree.end())
            for (auto& r : it->second) {
                Sparse s;
                for (auto& t : r) axpy(s, t.coef, Sparse{{col_of.at(t.path), Rational(1)}});
                if (!s.empty()) gens.push_back(s);
            }

        MatQ m = zeros<Rational>(static_cast<Eigen::Index>(gens.size()),
                                 static_cast<Eigen::Index>(cols.size()));
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (auto& [c, coef] : gens[i]) m(i, c) = coef;
        RowEchelon<Rational> e;
        if (!gens.empty() && !cols.empty()) e = rref(m);

        std::vector<char> pivot(cols.size(), 0);
        for (auto c : e.pivots) pivot[c] = 1;
        std::vector<Path> std_here;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!pivot[c]) std_here.push_back(cols[c]);
        std::sort(std_here.begin(), std_here.end());

        // Store provisional normal forms keyed by path; basis indices come later.
        std::vector<Sparse> ideal_rows;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            Sparse row;
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                if (!e.reduced(r, c).is_zero()) row[static_cast<int>(c)] = e.reduced(r, c);
            ideal_rows.push_back(row);
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Sparse nf;
            if (!pivot[c]) {
                nf[-1 - static_cast<int>(c)] = 1;  // placeholder: column id, remapped below
            } else {
                std::size_t r = std::find(e.pivots.begin(), e.pivots.end(),
                                          static_cast<Eigen::Index>(c)) - e.pivots.begin();
                for (auto& [cc, coef] : ideal_rows[r])
                    if (cc != static_cast<int>(c)) nf[-1 - cc] = -coef;
            }
            A.nf_[cols[c]] = nf;
        }
        // Remap placeholder column ids to global basis indices.
        const int offset = static_cast<int>(A.basis_.size());
        std::map<int, int> col_to_basis;
        for (std::size_t i = 0; i < std_here.size(); ++i) {
            A.index_[std_here[i]] = offset + static_cast<int>(i);
            col_to_basis[col_of.at(std_here[i])] = offset + static_cast<int>(i);
            A.basis_.push_back(std_here[i]);
        }
        for (auto& p : cols) {
            Sparse fixed;
            for (auto& [k, coef] : A.nf_[p]) fixed[col_to_basis.at(-1 - k)] = coef;
            A.nf_[p] = fixed;
        }

        if (std_here.empty()) {
            A.top_ = n - 1;
            break;
        }
        standard.push_back(std_here);

        // Next layer: every path of length n+1.
        prev_layer = cols;
        prev_ideal = ideal_rows;
        std::vector<Path> next;
        for (auto& p : cols)
            for (int a : Q.out_arrows(p.end)) {
                Path w = p;
                w.arrows.push_back(a);
                w.end = Q.arrow(a).tgt;
                next.push_back(w);
            }
        layer = next;
        ++n;
        if (layer.empty()) {
            A.top_ = n - 1;
            break;
        }
    }

    // Structure constants.
    const int d = A.dim();
    A.table_.assign(d, std::vector<Sparse>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (auto p = concat(A.basis_[i], A.basis_[j]);
                p && static_cast<int>(p->length()) <= A.top_)
                A.table_[i][j] = A.nf_.at(*p);

    A.proj_.assign(Q.num_vertices(), {});
    for (int v = 0; v < Q.num_vertices(); ++v) {
        for (int i = 0; i < d; ++i)
            if (A.basis_[i].end == v) A.proj_[v].push_back(i);
        std::stable_sort(A.proj_[v].begin(), A.proj_[v].end(), [&](int a, int b) {
            return A.basis_[a].start < A.basis_[b].start;
        });
    }

    for (auto& r : A.relations_)
        if (!is_zero_matrix<Rational>(A.normalize(r)))
            throw Error("ill-formed-relation", "relation does not vanish after completion");
    return A;
}

Element Algebra::zero() const { return zeros<Rational>(dim(), 1); }

Element Algebra::unit(int v) const { return normalize(trivial_path(v)); }

Element Algebra::path(const std::vector<std::string>& names) const {
    return normalize(make_path(quiver_, names));
}

Element Algebra::normalize(const Path& p) const {
    Element out = zero();
    if (static_cast<int>(p.length()) > top_) return out;
    auto it = nf_.find(p);
    if (it == nf_.end()) throw Error("ill-formed-path", "path is not in the quiver");
    for (auto& [k, c] : it->second) out(k) = c;
    return out;
}

Element Algebra::normalize(const PathCombination& c) const {
    Element out = zero();
    for (auto& t : c) out += t.coef * normalize(t.path);
    return out;
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element out = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a(i).is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b(j).is_zero()) continue;
            const Rational ab = a(i) * b(j);
            for (auto& [k, c] : table_[i][j]) out(k) += ab * c;
        }
    }
    return out;
}

int Algebra::basis_index(const Path& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int Algebra::paths_between(int u, int v) const {
    int n = 0;
    for (auto& p : basis_)
        if (p.start == u && p.end == v) ++n;
    return n;
}

bool Algebra::in_radical(const Element& a) const {
    for (int v = 0; v < quiver_.num_vertices(); ++v)
        if (!a(basis_index(trivial_path(v))).is_zero()) return false;
    return true;
}

bool Algebra::is_homogeneous(const Element& a, int s, int t) const {
    for (int i = 0; i < dim(); ++i)
        if (!a(i).is_zero() && (basis_[i].start != s || basis_[i].end != t)) return false;
    return true;
}

std::string Algebra::to_string(const Element& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        if (a(i).is_zero()) continue;
        Rational c = a(i);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational ac = abs(c);
        if (ac != 1) os << ac.str() << "*";
        os << path_string(quiver_, basis_[i]);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace schurder
