#include "schurder/selftest.hpp"

#include "schurder/a2.hpp"
#include "schurder/f3.hpp"
#include "schurder/schur.hpp"

#include <cctype>
#include <map>
#include <random>

namespace schurder {

namespace {

std::pair<int, int> expected_shape(const std::string& label) {
    static const std::map<std::string, std::pair<int, int>> fixed{
        {"D3", {3, 4}}, {"D4", {4, 6}}, {"G", {4, 6}},  {"D", {4, 6}},  {"H4", {4, 6}},
        {"R4", {4, 6}}, {"B", {5, 8}},  {"B1", {5, 8}}, {"W1", {6, 5}}, {"W2", {6, 5}},
        {"W3", {6, 5}}, {"W4", {6, 5}}, {"W5", {6, 5}}, {"W6", {9, 8}}, {"W", {9, 9}}};
    if (auto it = fixed.find(label); it != fixed.end()) return it->second;
    if (label.size() > 1 && (label[0] == 'A' || label[0] == 'F') && std::isdigit(label[1])) {
        const int m = std::stoi(label.substr(1));
        return {m, 2 * (m - 1)};
    }
    return {-1, -1};
}

void add(SelfTestReport& r, std::string name, bool passed, std::string detail = "") {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
}

template <class F>
void guarded(SelfTestReport& r, const std::string& name, F&& body) {
    try {
        body();
    } catch (const Error& e) {
        add(r, name, false, e.what());
    }
}

void check_complexes(SelfTestReport& r, const std::string& label, const Algebra& alg,
                     const std::vector<std::pair<std::string, ProjComplex>>& cs) {
    int bad = 0;
    std::string first;
    for (auto& [name, c] : cs) {
        if (check_complex(alg, c) && in_frak_p(alg, c)) continue;
        if (!bad++) first = name;
    }
    add(r, label, bad == 0,
        std::to_string(cs.size()) + " complexes" + (bad ? ", " + std::to_string(bad) + " bad, first " + first : ""));
}

}  // namespace

bool SelfTestReport::ok() const {
    for (auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<std::string> SelfTestReport::failures() const {
    std::vector<std::string> out;
    for (auto& c : checks)
        if (!c.passed) out.push_back(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    return out;
}

void SelfTestReport::merge(const SelfTestReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

SelfTestReport check_source(const std::string& label, const CatalogSource& src) {
    SelfTestReport r;
    guarded(r, label + ": builds", [&] {
        Algebra alg = Algebra::build(label, src.quiver, parse_relations(src.quiver, src.relations));
        add(r, label + ": builds", true, "dimension " + std::to_string(alg.dim()));
        const auto [nv, na] = expected_shape(label);
        const Quiver& q = alg.quiver();
        add(r, label + ": quiver shape", q.num_vertices() == nv && q.num_arrows() == na,
            std::to_string(q.num_vertices()) + " vertices, " + std::to_string(q.num_arrows()) + " arrows");
        if (label == "F3" || label == "A2") {
            const bool nonzero = !alg.path({"beta1", "alpha1"}).isZero();
            const bool square = alg.path({"beta1", "alpha1", "beta1", "alpha1"}).isZero();
            add(r, label + ": beta1 alpha1 nonzero, its square zero", nonzero && square);
        }
    });
    return r;
}

SelfTestReport catalog_self_test(int f3_length) {
    SelfTestReport r;
    for (auto& name : catalog_names()) {
        if (name == "A") {
            for (int m = 1; m <= 5; ++m) r.merge(check_source("A" + std::to_string(m), catalog_source("A", m)));
        } else if (name == "F") {
            for (int m : {3, 5, 7}) r.merge(check_source("F" + std::to_string(m), catalog_source("F", m)));
        } else {
            r.merge(check_source(name, catalog_source(name)));
        }
    }

    guarded(r, "A2 shapes", [&] {
        std::vector<std::pair<std::string, ProjComplex>> cs;
        for (auto& x : a2_grid(3, 3)) cs.push_back({to_string(x), realize(x)});
        check_complexes(r, "A2 shapes", catalog_get("A", 2).algebra, cs);
    });

    guarded(r, "F3 strings and bands", [&] {
        std::vector<std::pair<std::string, ProjComplex>> cs;
        for (auto& s : f3::enumerate_strings(f3_length))
            cs.push_back({f3::to_string(s), f3::build_complex(f3::realize_rep(s))});
        for (auto& b : f3::enumerate_bands(std::max(f3_length, 4), {Rational(1), Rational(2), Rational(3)}))
            cs.push_back({f3::to_string(b), f3::build_complex(f3::realize_rep(b))});
        check_complexes(r, "F3 strings and bands", catalog_get("F", 3).algebra, cs);
    });

    std::mt19937_64 rng(1);
    for (int k = 1; k <= 8; ++k) {
        const std::string name = "witness case " + std::to_string(k);
        guarded(r, name, [&] {
            Witness w = wildness_witness(k, random_witness_rep(k, 2, rng));
            check_complexes(r, name, *w.algebra, {{name, w.complex}});
        });
    }
    return r;
}

}  // namespace schurder
