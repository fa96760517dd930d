#pragma once

// Bounded complexes of projectives and of modules (cohomological grading:
// the differential of degree i goes from degree i to degree i + 1).

#include "schurder/projective.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace schurder {

struct ProjComplex {
    int lo = 0;                              // degree of terms[0]
    std::vector<std::vector<int>> terms;     // summand vertices per degree
    std::vector<ProjMorphism> diffs;         // diffs[k]: degree lo+k -> lo+k+1

    bool empty() const { return terms.empty(); }
    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    std::vector<int> term(int i) const;
    /// Multiplicity of each vertex in degree i.
    std::vector<int> multiplicities(const Algebra& alg, int i) const;
};

/// Builds a complex from consecutive differentials; terms come from the
/// morphisms' source and target lists.
ProjComplex make_complex(int lo, const std::vector<ProjMorphism>& diffs);
ProjComplex stalk(int degree, std::vector<int> summands);
ProjComplex zero_complex();
/// The differential leaving degree i (a zero morphism outside the support).
ProjMorphism diff_at(const Algebra& alg, const ProjComplex& c, int i);
/// Drops zero terms at both ends.
ProjComplex trimmed(const ProjComplex& c);
ProjComplex direct_sum(const Algebra& alg, const ProjComplex& a, const ProjComplex& b);
bool same_complex(const ProjComplex& a, const ProjComplex& b);

struct ModuleComplex {
    int lo = 0;
    std::vector<ModuleRep> terms;
    std::vector<ModuleMap> maps;  // maps[k]: degree lo+k -> lo+k+1
};

ModuleComplex to_module_complex(const Algebra& alg, const ProjComplex& c);

/// Well-typed differentials and every consecutive composite is zero.
bool check_complex(const Algebra& alg, const ProjComplex& c);
/// First degree pair (i, i+1) whose composite is nonzero, if any.
std::optional<int> first_noncomposing_degree(const Algebra& alg, const ProjComplex& c);
bool check_complex(const Algebra& alg, const ModuleComplex& c);
bool in_frak_p(const Algebra& alg, const ProjComplex& c);

using CohomologyVector = std::map<int, int>;  // degree -> dim H^i, nonzero entries only

struct Cohomology {
    CohomologyVector dims;
    std::map<int, ModuleRep> modules;
};
Cohomology cohomology(const Algebra& alg, const ModuleComplex& c);
Cohomology cohomology(const Algebra& alg, const ProjComplex& c);

/// shift(c, i)^j = c^{j+i}; differentials are negated when i is odd.
ProjComplex shift(const ProjComplex& c, int i);
CohomologyVector shift(const CohomologyVector& h, int i);

/// Brutal truncation below s, where s is the maximal degree with P^s != 0 and
/// H^i = 0 for every i <= s. When lowest_is_cut is set the lowest degree of
/// the finite window is treated as an artificial boundary and its cohomology
/// is ignored (the input is a prefix of a right-bounded complex).
/// Throws Error("no-such-s") when no such degree exists.
ProjComplex brutal_truncate(const Algebra& alg, const ProjComplex& c, bool lowest_is_cut = false);

/// Good truncation below the lowest degree t: inserts Ker d^t in degree t - 1
/// with its inclusion. Throws Error("zero-complex") on the zero complex.
ModuleComplex good_truncate(const Algebra& alg, const ProjComplex& c);

struct Resolution {
    ProjComplex complex;              // degrees -n .. 0
    std::vector<ModuleRep> syzygies;  // syzygies[k] = Omega_k, Omega_0 = the module
    ModuleMap augmentation;           // P^0 -> module
    bool terminated = false;          // some syzygy vanished within the bound
};

/// Minimal projective resolution computed by iterated projective covers,
/// stopping when a syzygy vanishes or after `bound` steps.
Resolution minimal_resolution(const Algebra& alg, const ModuleRep& m, int bound);

struct Perfectness {
    bool perfect = false;
    int length = -1;                                // projective dimension when perfect
    std::optional<std::pair<int, int>> certificate; // i < j with Omega_i ~ Omega_j
    Resolution resolution;
};

/// Finite projective dimension within `bound` steps, or a periodicity
/// certificate among the syzygies (distance at most `window`). Throws
/// Inconclusive when neither is found.
Perfectness is_perfect(const Algebra& alg, const ModuleRep& m, int bound = 8, int window = 4);

struct TruncationResolution {
    std::optional<ProjComplex> complex;  // bounded projective model of the good truncation
    bool perfect = true;
    std::optional<std::pair<int, int>> certificate;
};

/// Decides whether the kernel added by good_truncate is perfect. If it is,
/// returns the spliced bounded projective complex; otherwise marks the input
/// as not perfect. Propagates Inconclusive.
TruncationResolution resolve_truncation(const Algebra& alg, const ProjComplex& c, int bound = 8,
                                        int window = 4);

/// The projective model of the good truncation spliced from `steps` steps of
/// the lowest kernel's resolution: all of it when the kernel is perfect,
/// otherwise a finite prefix of the right-bounded complex.
ProjComplex truncation_prefix(const Algebra& alg, const ProjComplex& c, int steps);

/// Top generators of a module: per vertex u a matrix whose columns span a
/// complement of the radical in V_u.
std::vector<MatQ> top_generators(const Algebra& alg, const ModuleRep& m);

}  // namespace schurder
