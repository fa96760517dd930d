#pragma once

// Hom spaces between bounded complexes of projectives, up to homotopy, and the
// indecomposability and isomorphism tests built on them.

#include "schurder/complexes.hpp"

#include <optional>
#include <vector>

namespace schurder {

/// One coordinate of a graded map: the coefficient of basis path `basis` in
/// entry (row, col) of the degree-`degree` component.
struct Slot {
    int degree;
    int row;
    int col;
    int basis;
};

struct ChainMapSpace {
    int lo = 0, hi = -1;      // degree window covered by the slots
    std::vector<Slot> slots;
    MatQ chain_maps;          // columns: basis of chain maps (slot coordinates)
    MatQ null_homotopic;      // columns: basis of the null-homotopic subspace

    int dim_chain() const { return static_cast<int>(chain_maps.cols()); }
    int dim_null() const { return static_cast<int>(null_homotopic.cols()); }
    int dim_homotopy() const { return dim_chain() - dim_null(); }
};

/// Chain maps x -> y and the null-homotopic ones. Grading matches degree by
/// degree; the condition is "d_x then f = f then d_y".
ChainMapSpace hom_complex(const Algebra& alg, const ProjComplex& x, const ProjComplex& y);

/// Components x^i -> y^i, for i in [space.lo, space.hi], of the chain map with
/// the given slot coordinates.
std::vector<ProjMorphism> graded_map(const Algebra& alg, const ProjComplex& x, const ProjComplex& y,
                                     const ChainMapSpace& space, const VecQ& coords);

bool is_chain_map(const Algebra& alg, const ProjComplex& x, const ProjComplex& y, int lo,
                  const std::vector<ProjMorphism>& f);

/// Local endomorphism ring. Uses the trace form of the action on the
/// underlying vector spaces to find rad End(x); a one-dimensional quotient
/// settles the question. Larger quotients are decided by minimal polynomials
/// of their elements and raise Inconclusive when that is not enough.
bool is_indecomposable(const Algebra& alg, const ProjComplex& x);

/// Random search for a chain map that is invertible in every degree.
std::optional<std::vector<ProjMorphism>> find_invertible_chain_map(const Algebra& alg, const ProjComplex& x,
                                                                   const ProjComplex& y, int attempts = 8);

/// Isomorphism in the homotopy category, for complexes in p(A). Multiplicity
/// mismatch rules it out; for two complexes with End/rad = Q the trace
/// pairing Hom(x,y) x Hom(y,x) decides exactly; otherwise a found invertible
/// chain map proves it; failing that, unequal dimensions among End(x), End(y),
/// Hom(x,y), Hom(y,x) disprove it, and otherwise Inconclusive is raised.
bool is_isomorphic_K(const Algebra& alg, const ProjComplex& x, const ProjComplex& y);

/// Same graded multiplicity vectors after trimming.
bool same_multiplicities(const Algebra& alg, const ProjComplex& x, const ProjComplex& y);

}  // namespace schurder
