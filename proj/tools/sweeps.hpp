#pragma once

// Property sweeps at desk bounds, shared by the CLI selftest command and the
// acceptance binary. Each returns one named verdict with a short detail line.

#include "schurder/selftest.hpp"

#include <cstdint>

namespace schurder::sweeps {

CheckResult catalog(int f3_length = 4);
/// A_2 shapes with s <= max_s, |shift| <= max_shift: d^2 = 0, radical,
/// indecomposable, pairwise non-isomorphic.
CheckResult a2_shapes(int max_s = 3, int max_shift = 3);
/// F_3 strings and bands up to the given lengths with eigenvalues 1..n_eigen.
CheckResult f3_objects(int string_length = 6, int band_length = 6, int n_eigen = 3);
/// One band word, eigenvalues 1, 2, 3, 5: same cohomology, pairwise distinct.
CheckResult band_family();
/// Each witness case: `trials` pairs of random inputs of dimension
/// witness_dims(k); outputs are checked and must be non-isomorphic in at
/// least `needed` trials.
CheckResult witnesses(int trials = 10, int needed = 9, std::uint64_t seed = 7);

}  // namespace schurder::sweeps
