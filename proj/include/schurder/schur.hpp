#pragma once

// Representation type and derived type of (infinitesimal) Schur algebras,
// symmetric-group blocks through p-cores, and the wild-quiver witness
// complexes.

#include "schurder/catalog.hpp"
#include "schurder/complexes.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace schurder {

struct SchurSpec {
    int p = 2;
    int n = 1;
    int d = 0;
    std::optional<int> r;  // present for S(n,d)_r
};

/// Throws invalid-params for a non-prime p, n < 1, d < 0 or r < 1.
void validate(const SchurSpec& s);

enum class ReprType { semisimple, finite, tame, wild };
enum class DerivedType { derived_tame, derived_wild };
std::string to_string(ReprType t);
std::string to_string(DerivedType t);

struct Classification {
    bool semisimple = false;
    ReprType repr = ReprType::wild;
    DerivedType derived = DerivedType::derived_wild;
    std::string clause;       // first derived-tame clause that fired, e.g. "i.d"; empty if none
    std::string repr_clause;  // e.g. "finite.a", "inf.tame.g"; empty for wild
};

/// Every derived-tame clause that holds, in printed order.
std::vector<std::string> derived_tame_clauses(const SchurSpec& s);
Classification classify_schur(const SchurSpec& s);          // requires !s.r
Classification classify_infinitesimal(const SchurSpec& s);  // requires s.r
Classification classify(const SchurSpec& s);

using Partition = std::vector<int>;

/// All partitions of d in reverse lexicographic order.
std::vector<Partition> partitions(int d);
/// p-core via beta-numbers on a p-runner abacus.
Partition p_core(const Partition& lambda, int p);
std::string to_string(const Partition& lambda);

struct Block {
    Partition core;
    std::vector<Partition> members;
    int s = 0;                // members with at most n parts
    std::string morita_type;  // "A<s>", or "none" when s = 0
};

struct BlockReport {
    std::vector<Block> blocks;
    bool in_range = true;  // n >= 3 and d < 2p
};
BlockReport symmetric_blocks(int d, int p, int n);

struct MoritaReport {
    std::vector<std::string> types;  // catalog names, or families like "F_m (m unspecified)"
    bool covered = true;             // false means "unknown"
};
MoritaReport block_morita_types(const SchurSpec& s);

// ---- Wildness witnesses --------------------------------------------------

/// Catalog name of the quiver whose representations feed case k (1..8).
std::string witness_quiver(int k);
/// Catalog name of the algebra used by case k; case 8 accepts "A", "F" or "R4".
std::string witness_algebra(int k);

struct Witness {
    const Algebra* algebra = nullptr;
    ProjComplex complex;
};

/// The complex N of case k built from a representation of witness_quiver(k)
/// (stored in the left-module convention, so arrow x : s -> t is a
/// dim_s x dim_t matrix, the transpose of [M(x)]). For case 8 `family` picks
/// the algebra and `m` its parameter. Throws dimension-mismatch on bad shapes.
Witness wildness_witness(int k, const ModuleRep& rep, const std::string& family = "A", int m = 3);

/// Random representation of witness_quiver(k) with every vertex of dimension
/// `dim`, satisfying the quiver's relations.
ModuleRep random_witness_rep(int k, int dim, std::mt19937_64& rng);
ModuleRep random_witness_rep(int k, const std::vector<int>& dims, std::mt19937_64& rng);

/// A dimension vector of witness_quiver(k) whose Tits form is <= 0, so that
/// random representations of it lie in a continuous family: centre 2 and
/// leaves 1 for the stars, a null root of the E~7 subtree for W6, and a
/// vector with Tits form -4 for W.
std::vector<int> witness_dims(int k);

}  // namespace schurder
