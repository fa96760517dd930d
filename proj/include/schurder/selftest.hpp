#pragma once

// Consistency checks over the whole catalog: every entry builds and is
// finite-dimensional, quiver shapes match the printed pictures, and the
// complexes listed over A_2 and F_3 are well-formed and minimal.

#include "schurder/catalog.hpp"

#include <string>
#include <vector>

namespace schurder {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelfTestReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    std::vector<std::string> failures() const;
    void merge(const SelfTestReport& other);
};

/// Builds an entry from raw source text and checks it. `label` names the
/// entry in failures ("F3", "D4", ...) and selects the expected vertex and
/// arrow counts and any identities specific to it.
SelfTestReport check_source(const std::string& label, const CatalogSource& src);

/// Every catalog entry (A_1..A_5, F_3, F_5, F_7 for the families) plus the
/// A_2 shapes with s <= 3 and |shift| <= 3, the F_3 strings and bands up to
/// `f3_length`, and one witness complex per case.
SelfTestReport catalog_self_test(int f3_length = 3);

}  // namespace schurder
