#pragma once

// Named quivers with relations: the blocks that occur for (infinitesimal)
// Schur algebras of finite and tame type, and the wild quivers used to build
// wildness witnesses.

#include "schurder/algebra.hpp"

#include <string>
#include <vector>

namespace schurder {

struct CatalogEntry {
    std::string name;  // "A", "F" (parametrized by m) or a fixed name such as "D3"
    int m = 0;         // parameter for A and F, 0 otherwise
    Algebra algebra;
    std::string arises_from;
};

/// Memoized lookup. Throws Error("unknown-name") or Error("invalid-params").
const CatalogEntry& catalog_get(const std::string& name, int m = 0);

/// Fixed names plus the parametrized families "A" and "F".
std::vector<std::string> catalog_names();

/// Parses relations written as "alpha1 beta1 = 0; beta1 alpha1 = alpha2 beta2".
/// Each side is a sum of terms "[coef] arrow arrow ..."; a chain x = y = z
/// yields the relations x - y and y - z. The literal 0 is the empty sum.
std::vector<PathCombination> parse_relations(const Quiver& q, const std::string& text);

/// Raw data of an entry: the quiver and its relations in the text syntax of
/// parse_relations. Test fixtures perturb the text to exercise failures.
struct CatalogSource {
    Quiver quiver;
    std::string relations;
    std::string arises_from;
};
CatalogSource catalog_source(const std::string& name, int m = 0);

}  // namespace schurder
