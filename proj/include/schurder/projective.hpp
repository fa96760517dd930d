#pragma once

// Morphisms between finite direct sums of indecomposable projectives.
//
// A ProjMorphism from P_{s_1} + ... + P_{s_r} to P_{t_1} + ... + P_{t_c} is an
// r x c grid of algebra elements: entry (i, j) is a combination of paths from
// s_i to t_j and the component P_{s_i} -> P_{t_j} is x -> x * entry. Morphisms
// act on row vectors, so "f then g" is the grid product f * g.

#include "schurder/module.hpp"

namespace schurder {

struct ProjMorphism {
    std::vector<int> source;        // summand vertices
    std::vector<int> target;        // summand vertices
    std::vector<Element> entries;   // row-major, source.size() x target.size()

    int rows() const { return static_cast<int>(source.size()); }
    int cols() const { return static_cast<int>(target.size()); }
    Element& at(int i, int j) { return entries.at(static_cast<std::size_t>(i) * target.size() + j); }
    const Element& at(int i, int j) const {
        return entries.at(static_cast<std::size_t>(i) * target.size() + j);
    }
};

ProjMorphism zero_morphism(const Algebra& alg, std::vector<int> source, std::vector<int> target);
ProjMorphism identity_morphism(const Algebra& alg, const std::vector<int>& summands);
/// p(w) for a single element w between P_s and P_t.
ProjMorphism p_of(const Algebra& alg, int s, int t, const Element& w);

/// Composite "f then g".
ProjMorphism compose(const Algebra& alg, const ProjMorphism& f, const ProjMorphism& g);
ProjMorphism add(const ProjMorphism& f, const ProjMorphism& g);
ProjMorphism scale(const Rational& c, const ProjMorphism& f);
bool is_zero(const ProjMorphism& f);
/// Every entry is a combination of paths with the endpoints its position dictates.
bool well_typed(const Algebra& alg, const ProjMorphism& f);

bool radical_membership(const Algebra& alg, const ProjMorphism& f);

/// Basis indices of P_t whose paths start at u, in the order used for the
/// vertex-u coordinates of projective modules.
std::vector<int> basis_paths_from_to(const Algebra& alg, int u, int t);

/// P_v as a quiver representation.
ModuleRep projective(const Algebra& alg, int v);

/// The underlying module of a sum of projectives. Its coordinates at vertex u
/// list, summand by summand, the basis paths of P_{s} that start at u.
ModuleRep projective_sum(const Algebra& alg, const std::vector<int>& summands);
int projective_sum_dim(const Algebra& alg, const std::vector<int>& summands);

/// Matrix of the induced linear map on the path bases, acting on column
/// vectors (rows: target basis, columns: source basis; both summand-major).
/// Composition satisfies apply(f then g) = apply(g) * apply(f).
MatQ apply_morphism(const Algebra& alg, const ProjMorphism& f);

/// The same map split into per-vertex blocks, as a module homomorphism
/// between projective_sum(source) and projective_sum(target).
ModuleMap morphism_as_module_map(const Algebra& alg, const ProjMorphism& f);

/// Direct sum of morphisms (block diagonal grid).
ProjMorphism block_diag(const Algebra& alg, const ProjMorphism& f, const ProjMorphism& g);

std::string to_string(const Algebra& alg, const ProjMorphism& f);

}  // namespace schurder
