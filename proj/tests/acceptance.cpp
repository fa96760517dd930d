// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "schurder/complexes.hpp"
#include "schurder/f3.hpp"
#include "schurder/homotopy.hpp"
#include "schurder/schur.hpp"
#include "sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using namespace schurder;

namespace {

// ---- 1: a second, table-driven transcription of the classification ---------

constexpr int ANY = -1;

struct Range {
    int lo = ANY, hi = ANY;  // inclusive; ANY leaves that side open
    bool has(int v) const { return (lo == ANY || v >= lo) && (hi == ANY || v <= hi); }
};

struct Row {
    const char* id;
    std::set<int> ps;  // empty: any prime
    Range n;
    std::set<int> ds;  // empty: use d_range
    Range d_range;
    std::set<int> rs;  // empty: any r
    bool odd_d = false;
    // Relative constraints on d that a plain range cannot say.
    std::function<bool(int p, int d)> extra;
};

std::vector<Row> schur_table() {
    return {
        {"i.a", {}, {}, {}, {}, {}, false, [](int p, int d) { return d < p; }},
        {"i.b", {2}, {2, 2}, {3}, {}, {}, false, nullptr},
        {"i.c", {2}, {2, 2}, {5, 7}, {}, {}, false, nullptr},
        {"i.d", {}, {2, 2}, {}, {}, {}, false,
         [](int p, int d) { return p <= d && d <= 2 * p - 1 && (p != 2 || d != 3); }},
        {"i.e", {2}, {3, ANY}, {2, 3}, {}, {}, false, nullptr},
        {"i.f", {3}, {3, 3}, {4, 5}, {}, {}, false, nullptr},
    };
}

std::vector<Row> infinitesimal_table() {
    return {
        {"ii.a", {}, {2, ANY}, {}, {}, {}, false, [](int p, int d) { return p >= 3 && d <= p - 1; }},
        {"ii.b", {2}, {2, 2}, {3}, {}, {}, false, nullptr},
        {"ii.c", {2}, {2, 2}, {}, {}, {1}, true, nullptr},
        {"ii.d", {2}, {2, 2}, {5, 7}, {}, {2}, false, nullptr},
        {"ii.e", {2}, {2, 2}, {2}, {}, {1}, false, nullptr},
        {"ii.f", {}, {2, 2}, {}, {}, {1}, false, [](int p, int d) { return p >= 3 && p <= d && d < 2 * p; }},
    };
}

std::vector<std::string> table_clauses(int p, int n, int d, std::optional<int> r) {
    std::vector<std::string> out;
    for (const Row& row : r ? infinitesimal_table() : schur_table()) {
        if (!row.ps.empty() && !row.ps.count(p)) continue;
        if (!row.n.has(n)) continue;
        if (!row.ds.empty() ? !row.ds.count(d) : !row.d_range.has(d)) continue;
        if (r && !row.rs.empty() && !row.rs.count(*r)) continue;
        if (row.odd_d && d % 2 == 0) continue;
        if (row.extra && !row.extra(p, d)) continue;
        out.push_back(row.id);
    }
    return out;
}

CheckResult truth_table() {
    long cases = 0;
    for (int p : {2, 3, 5, 7, 11})
        for (int n = 1; n <= 5; ++n)
            for (int d = 0; d <= 30; ++d)
                for (int r = 0; r <= 4; ++r, ++cases) {
                    const std::optional<int> ro = r ? std::optional<int>(r) : std::nullopt;
                    const SchurSpec s{p, n, d, ro};
                    const auto mine = derived_tame_clauses(s);
                    const auto theirs = table_clauses(p, n, d, ro);
                    const bool tame = classify(s).derived == DerivedType::derived_tame;
                    if (mine != theirs || tame != !theirs.empty()) {
                        std::ostringstream os;
                        os << "mismatch at p=" << p << " n=" << n << " d=" << d << " r=" << r;
                        return {"truth table", false, os.str()};
                    }
                }
    return {"truth table", true, std::to_string(cases) + " parameter tuples agree"};
}

// ---- 2: derived tame iff every block has at most two admissible members ----

CheckResult blocks_vs_classifier() {
    long cases = 0;
    for (int p : {2, 3, 5, 7, 11})
        for (int n = 3; n <= 5; ++n)
            for (int d = 0; d < 2 * p; ++d, ++cases) {
                // Group partitions by p-core, count members with at most n parts.
                std::map<Partition, int> s;
                for (auto& l : partitions(d))
                    if (static_cast<int>(l.size()) <= n) ++s[p_core(l, p)];
                bool small = true;
                for (auto& [core, count] : s) small = small && count <= 2;
                std::set<std::string> types;
                for (auto& b : symmetric_blocks(d, p, n).blocks)
                    if (b.s > 0) types.insert(b.morita_type);
                const bool lib_small = std::all_of(types.begin(), types.end(),
                                                   [](const std::string& t) { return t == "A1" || t == "A2"; });
                const bool tame = classify(SchurSpec{p, n, d, std::nullopt}).derived == DerivedType::derived_tame;
                if (small != tame || lib_small != small) {
                    std::ostringstream os;
                    os << "mismatch at p=" << p << " n=" << n << " d=" << d;
                    return {"blocks vs classifier", false, os.str()};
                }
            }
    return {"blocks vs classifier", true, std::to_string(cases) + " cases"};
}

// ---- 6: Psi against non-perfectness -----------------------------------------

ProjComplex cut_below(const ProjComplex& c, int from) {
    ProjComplex out;
    out.lo = std::max(from, c.lo);
    for (int i = out.lo; i <= c.hi(); ++i) out.terms.push_back(c.term(i));
    for (int i = out.lo; i < c.hi(); ++i) out.diffs.push_back(c.diffs[i - c.lo]);
    return out;
}

bool same_resolution(const Algebra& a, const ProjComplex& x, const ProjComplex& y, int steps) {
    ProjComplex px = truncation_prefix(a, x, steps), py = truncation_prefix(a, y, steps);
    const int from = std::max(px.lo, py.lo) + 1;
    return is_isomorphic_K(a, cut_below(px, from), cut_below(py, from));
}

// Ker p(beta1) for p(beta1) : P2 -> P1 must resolve with terms P1+P3, P2, ...
std::string periodic_certificate(const Algebra& a) {
    const int v1 = a.quiver().vertex_index("1"), v2 = a.quiver().vertex_index("2"), v3 = a.quiver().vertex_index("3");
    ProjMorphism b = zero_morphism(a, {v2}, {v1});
    b.at(0, 0) = a.path({"beta1"});
    const ProjComplex c = make_complex(0, {b});
    TruncationResolution r = resolve_truncation(a, c);
    if (r.perfect || !r.certificate || r.certificate->second - r.certificate->first != 2)
        return "no period-2 certificate";
    const ProjComplex prefix = truncation_prefix(a, c, 5);
    for (int i = prefix.lo; i < 0; ++i) {
        auto t = prefix.term(i);
        std::sort(t.begin(), t.end());
        if (t != ((-i) % 2 ? std::vector<int>{v1, v3} : std::vector<int>{v2})) return "terms do not alternate";
    }
    return "";
}

CheckResult psi_vs_nonperfect(int length) {
    const Algebra& a = catalog_get("F", 3).algebra;
    const std::string cert = periodic_certificate(a);
    std::vector<std::pair<f3::StringSpec, ProjComplex>> psi, nonperfect;
    std::vector<std::string> disagree;
    const auto strings = f3::enumerate_strings(length);
    for (auto& s : strings) {
        ProjComplex c = f3::build_complex(f3::realize_rep(s));
        const bool np = !resolve_truncation(a, c).perfect;
        const bool in = f3::in_psi(s);
        if (in) psi.push_back({s, c});
        if (np) nonperfect.push_back({s, c});
        if (in != np) disagree.push_back(f3::to_string(s));
    }
    // Coarser reading: each non-perfect string matches a member of Psi up to
    // shift once both are resolved far enough.
    int covered = 0;
    for (auto& [s, c] : nonperfect) {
        bool found = false;
        for (auto& [t, d] : psi)
            for (int k = -4; k <= 4 && !found; ++k) found = same_resolution(a, c, shift(d, k), 6);
        covered += found;
    }
    std::ostringstream os;
    os << strings.size() << " strings, " << psi.size() << " in Psi, " << nonperfect.size() << " non-perfect, "
       << disagree.size() << " literal disagreements";
    if (!disagree.empty()) os << " (e.g. " << disagree.front() << ")";
    os << "; up to shift and resolution " << covered << "/" << nonperfect.size() << " non-perfect strings match Psi";
    os << "; period-2 certificate " << (cert.empty() ? "reproduced" : cert);
    return {"Psi vs non-perfect", disagree.empty() && cert.empty(), os.str()};
}

// ---- 9: every rim-hook removal order reaches the same core ------------------

Partition conjugate(const Partition& l) {
    Partition c;
    for (int j = 0; !l.empty() && j < l[0]; ++j) {
        int k = 0;
        while (k < static_cast<int>(l.size()) && l[k] > j) ++k;
        c.push_back(k);
    }
    return c;
}

std::vector<Partition> remove_one_hook(const Partition& l, int p) {
    std::vector<Partition> out;
    const Partition lc = conjugate(l);
    for (int i = 0; i < static_cast<int>(l.size()); ++i)
        for (int j = 0; j < l[i]; ++j) {
            const int leg = lc[j] - i - 1;
            if (l[i] - j + leg != p) continue;
            Partition m = l;
            for (int k = i; k < i + leg; ++k) m[k] = l[k + 1] - 1;
            m[i + leg] = j;
            while (!m.empty() && m.back() == 0) m.pop_back();
            out.push_back(m);
        }
    return out;
}

void ends(const Partition& l, int p, std::set<Partition>& out) {
    auto next = remove_one_hook(l, p);
    if (next.empty()) out.insert(l);
    for (auto& m : next) ends(m, p, out);
}

CheckResult core_orders() {
    long n = 0;
    for (int p : {2, 3, 5})
        for (int d = 0; d <= 8; ++d)
            for (auto& l : partitions(d)) {
                ++n;
                std::set<Partition> cores;
                ends(l, p, cores);
                if (cores.size() != 1 || *cores.begin() != p_core(l, p))
                    return {"p-core orders", false, "partition " + to_string(l) + ", p=" + std::to_string(p)};
            }
    return {"p-core orders", true, std::to_string(n) + " partitions"};
}

template <class F>
CheckResult timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r = {"exception", false, e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.1fs]", s);
    r.detail += buf;
    return r;
}

}  // namespace

int main() {
    const std::vector<std::function<CheckResult()>> criteria{
        truth_table,
        blocks_vs_classifier,
        [] { return sweeps::catalog(4); },
        [] { return sweeps::a2_shapes(3, 3); },
        [] { return sweeps::f3_objects(6, 6, 3); },
        [] { return psi_vs_nonperfect(6); },
        sweeps::band_family,
        [] { return sweeps::witnesses(10, 9, 7); },
        core_orders,
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CheckResult r = timed(criteria[i]);
        failed += !r.passed;
        std::printf("criterion %zu: %s  %s: %s\n", i + 1, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
