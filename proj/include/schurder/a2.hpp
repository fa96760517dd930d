#pragma once

// Indecomposable objects of K^b(proj) for A_1 and A_2, and their lookup by
// cohomology dimensions.

#include "schurder/complexes.hpp"

#include <string>
#include <vector>

namespace schurder {

/// e1, e2, alpha, beta, and the families (ba)^s, a(ba)^s, (ba)^s b, a(ba)^s b
/// with s >= 1. Here a = alpha1 : 1 -> 2, b = beta1 : 2 -> 1, and "ba" is the
/// loop at vertex 2 (b first, then a).
enum class A2Tag { e1, e2, alpha, beta, ba, a_ba, ba_b, a_ba_b };

struct A2Shape {
    A2Tag tag = A2Tag::e1;
    int s = 0;      // used by the four families only
    int shift = 0;  // realized complex is shift(base, shift), base starting in degree 1

    friend bool operator==(const A2Shape&, const A2Shape&) = default;
    friend auto operator<=>(const A2Shape&, const A2Shape&) = default;
};

bool has_s(A2Tag t);
std::string to_string(const A2Shape& x);
/// Inverse of to_string; throws invalid-params.
A2Shape parse_a2_shape(const std::string& text);

/// The complex over catalog_get("A", 2).
ProjComplex realize(const A2Shape& x);

/// Every shape with 1 <= s <= max_s and |shift| <= max_shift.
std::vector<A2Shape> a2_grid(int max_s, int max_shift);

/// All shapes whose realization has cohomology vector h. Sound and complete
/// within the shape grammar: the total cohomology of a family member grows
/// with s, so s never needs to exceed the total dimension of h.
std::vector<A2Shape> enumerate_a2(const CohomologyVector& h);

/// A_1 = k: the indecomposables are stalks P_1 placed in some degree. Returns
/// the degrees whose stalk has cohomology h (at most one).
std::vector<int> enumerate_a1(const CohomologyVector& h);

}  // namespace schurder
