#pragma once

// Quivers with homogeneous relations and their finite-dimensional path algebras.
//
// Paths are written in application order: the word "b a" means b first, then
// a, and the product u*v of two paths is the concatenation "u then v" (zero
// unless u ends where v starts). Left modules over A = kQ/I therefore have
// P_v = A e_v spanned by the basis paths ending at v, and the map p(w) attached
// to a path w from s to t is right multiplication x -> x*w, P_s -> P_t.

#include "schurder/errors.hpp"
#include "schurder/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace schurder {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_.at(a); }

    int vertex_index(const std::string& name) const;  // throws on unknown name
    int arrow_index(const std::string& name) const;   // throws on unknown name

    /// Arrows leaving v, in declaration order.
    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::map<std::string, int> vindex_, aindex_;
};

/// A path in the quiver: arrow indices in application order. Trivial paths
/// have no arrows and start = end.
struct Path {
    int start = 0;
    int end = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool trivial() const { return arrows.empty(); }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.start < b.start;
    }
    friend bool operator==(const Path& a, const Path& b) {
        return a.start == b.start && a.end == b.end && a.arrows == b.arrows;
    }
};

Path trivial_path(int v);
Path arrow_path(const Quiver& q, int a);
/// Builds a path from arrow names; an empty list needs the vertex explicitly.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names, int vertex = -1);
/// Concatenation "u then v"; nullopt when not composable.
std::optional<Path> concat(const Path& u, const Path& v);
std::string path_string(const Quiver& q, const Path& p);

/// Linear combination of paths in kQ (not yet reduced modulo I).
struct PathTerm {
    Rational coef;
    Path path;
};
using PathCombination = std::vector<PathTerm>;

/// An element of A stored densely as coordinates on the normal-form basis.
using Element = VecQ;

class Algebra {
public:
    /// Builds kQ/I. Relations must be homogeneous with every term of length at
    /// least 1 and common endpoints. Throws Error("infinite-dimensional-suspected")
    /// if degree length_bound of the quotient is still nonzero.
    static Algebra build(std::string name, Quiver q, std::vector<PathCombination> relations,
                         int length_bound = 12);

    const std::string& name() const { return name_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<PathCombination>& relations() const { return relations_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(int i) const { return basis_.at(i); }
    int top_degree() const { return top_; }

    Element zero() const;
    Element unit(int v) const;                      // e_v
    Element path(const std::vector<std::string>& arrow_names) const;
    Element normalize(const Path& p) const;
    Element normalize(const PathCombination& c) const;
    Element mul(const Element& a, const Element& b) const;

    /// Basis index of a standard path, or -1.
    int basis_index(const Path& p) const;

    /// Basis indices of P_v (paths ending at v), grouped by start vertex.
    const std::vector<int>& projective_basis(int v) const { return proj_.at(v); }
    /// dim e_u A e_v: basis paths from u to v.
    int paths_between(int u, int v) const;

    /// True iff every trivial-path coefficient vanishes.
    bool in_radical(const Element& a) const;
    /// True iff every path in the support runs from s to t.
    bool is_homogeneous(const Element& a, int s, int t) const;

    std::string to_string(const Element& a) const;

private:
    std::string name_;
    Quiver quiver_;
    std::vector<PathCombination> relations_;
    std::vector<Path> basis_;
    std::map<Path, int> index_;
    std::map<Path, std::map<int, Rational>> nf_;  // normal form of every path up to top_
    std::vector<std::vector<std::map<int, Rational>>> table_;  // basis_i * basis_j
    std::vector<std::vector<int>> proj_;
    int top_ = 0;
};

}  // namespace schurder
