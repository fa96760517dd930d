#pragma once

// Finite-dimensional left modules given as quiver representations.
//
// With the path convention of algebra.hpp an arrow a: s -> t acts on a left
// module as a linear map V_t -> V_s, stored as a dim V_s x dim V_t matrix.
// The action of a path is the product of its arrow matrices in written order.

#include "schurder/algebra.hpp"

#include <vector>

namespace schurder {

struct ModuleRep {
    std::vector<int> dims;         // per vertex
    std::vector<MatQ> arrow_maps;  // per arrow, dims[src] x dims[tgt]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

/// Per-vertex linear maps f_u : V_u -> W_u (matrices dim W_u x dim V_u).
struct ModuleMap {
    std::vector<MatQ> blocks;
};

ModuleRep zero_module(const Algebra& alg);
/// Checks shapes and that every relation acts as zero.
bool satisfies_relations(const Algebra& alg, const ModuleRep& m);
MatQ path_action(const Algebra& alg, const ModuleRep& m, const Path& p);

bool is_equivariant(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt,
                    const ModuleMap& f);

/// A submodule or quotient together with its structure map.
struct Sub {
    ModuleRep module;
    ModuleMap inclusion;  // module -> ambient
};
struct Quot {
    ModuleRep module;
    ModuleMap projection;  // ambient -> module
};

Sub kernel(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt, const ModuleMap& f);
Quot cokernel(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt, const ModuleMap& f);
/// Image of f as a submodule of tgt.
Sub image(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt, const ModuleMap& f);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

ModuleMap identity_map(const ModuleRep& m);
ModuleMap zero_map(const ModuleRep& src, const ModuleRep& tgt);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g

/// Basis of Hom_A(src, tgt) as a list of module maps.
std::vector<ModuleMap> hom_basis(const Algebra& alg, const ModuleRep& src, const ModuleRep& tgt);

/// Module isomorphism: invariants, then random sampling in Hom for an
/// invertible map (5 tries), then a {-1,0,1} grid when dim Hom <= 8, then
/// further wide-range samples.
bool is_isomorphic(const Algebra& alg, const ModuleRep& a, const ModuleRep& b);

/// The radical top: dim of V_u / sum of images of arrows into V_u, per vertex.
std::vector<int> top_dims(const Algebra& alg, const ModuleRep& m);

}  // namespace schurder
