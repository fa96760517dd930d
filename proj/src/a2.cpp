#include "schurder/a2.hpp"

#include "schurder/catalog.hpp"

#include <map>
#include <numeric>
#include <regex>

namespace schurder {

namespace {

const Algebra& a2() { return catalog_get("A", 2).algebra; }

struct Maps {
    ProjMorphism a, b, ba;
};

const Maps& maps() {
    static const Maps m = [] {
        const Algebra& alg = a2();
        const int v1 = alg.quiver().vertex_index("1"), v2 = alg.quiver().vertex_index("2");
        return Maps{p_of(alg, v1, v2, alg.path({"alpha1"})), p_of(alg, v2, v1, alg.path({"beta1"})),
                    p_of(alg, v2, v2, alg.path({"beta1", "alpha1"}))};
    }();
    return m;
}

const std::map<A2Tag, std::string>& names() {
    static const std::map<A2Tag, std::string> n{
        {A2Tag::e1, "e1"},          {A2Tag::e2, "e2"},           {A2Tag::alpha, "alpha"},
        {A2Tag::beta, "beta"},      {A2Tag::ba, "(beta alpha)^s"}, {A2Tag::a_ba, "alpha(beta alpha)^s"},
        {A2Tag::ba_b, "(beta alpha)^s beta"}, {A2Tag::a_ba_b, "alpha(beta alpha)^s beta"}};
    return n;
}

int total(const CohomologyVector& h) {
    return std::accumulate(h.begin(), h.end(), 0, [](int t, auto& kv) { return t + kv.second; });
}

}  // namespace

bool has_s(A2Tag t) { return t == A2Tag::ba || t == A2Tag::a_ba || t == A2Tag::ba_b || t == A2Tag::a_ba_b; }

std::string to_string(const A2Shape& x) {
    std::string n = names().at(x.tag);
    if (has_s(x.tag)) n.replace(n.find("^s"), 2, "^" + std::to_string(x.s));
    return n + "[" + std::to_string(x.shift) + "]";
}

A2Shape parse_a2_shape(const std::string& text) {
    static const std::regex re(R"(^(.*?)(?:\^(\d+))?( beta)?\[(-?\d+)\]$)");
    std::smatch m;
    if (std::regex_match(text, m, re)) {
        std::string stem = m[1].str() + (m[2].matched ? "^s" : "") + m[3].str();
        for (auto& [tag, name] : names())
            if (name == stem && has_s(tag) == m[2].matched) {
                A2Shape x{tag, m[2].matched ? std::stoi(m[2].str()) : 0, std::stoi(m[4].str())};
                if (has_s(tag) && x.s < 1) break;
                return x;
            }
    }
    throw Error("invalid-params", "not an A2 shape: " + text);
}

ProjComplex realize(const A2Shape& x) {
    const Algebra& alg = a2();
    const Maps& m = maps();
    std::vector<ProjMorphism> d;
    ProjComplex base;
    switch (x.tag) {
        case A2Tag::e1: base = stalk(1, {alg.quiver().vertex_index("1")}); break;
        case A2Tag::e2: base = stalk(1, {alg.quiver().vertex_index("2")}); break;
        case A2Tag::alpha: base = make_complex(1, {m.a}); break;
        case A2Tag::beta: base = make_complex(1, {m.b}); break;
        default: {
            if (x.s < 1) throw Error("invalid-params", "s must be at least 1");
            if (x.tag == A2Tag::a_ba || x.tag == A2Tag::a_ba_b) d.push_back(m.a);
            for (int k = 0; k < x.s; ++k) d.push_back(m.ba);
            if (x.tag == A2Tag::ba_b || x.tag == A2Tag::a_ba_b) d.push_back(m.b);
            base = make_complex(1, d);
        }
    }
    return shift(base, x.shift);
}

std::vector<A2Shape> a2_grid(int max_s, int max_shift) {
    std::vector<A2Shape> out;
    for (int i = -max_shift; i <= max_shift; ++i)
        for (auto& [tag, name] : names()) {
            if (!has_s(tag)) out.push_back({tag, 0, i});
            else
                for (int s = 1; s <= max_s; ++s) out.push_back({tag, s, i});
        }
    return out;
}

std::vector<A2Shape> enumerate_a2(const CohomologyVector& h0) {
    CohomologyVector h;
    for (auto& [i, v] : h0)
        if (v != 0) h[i] = v;
    if (h.empty()) return {};
    const int bound = total(h);
    // Base cohomology vectors at shift 0, memoized across calls.
    static std::map<A2Shape, CohomologyVector> cache;
    auto base = [&](A2Tag t, int s) -> const CohomologyVector& {
        A2Shape key{t, s, 0};
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, cohomology(a2(), realize(key)).dims).first;
        return it->second;
    };
    std::vector<A2Shape> out;
    for (auto& [tag, name] : names()) {
        const int smax = has_s(tag) ? bound : 0;
        for (int s = has_s(tag) ? 1 : 0; s <= smax; ++s) {
            const CohomologyVector& b = base(tag, s);
            if (b.size() != h.size() || total(b) > bound) continue;
            // shift(c, i) moves degree j to j - i.
            const int i = b.begin()->first - h.begin()->first;
            if (shift(b, i) == h) out.push_back({tag, s, i});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> enumerate_a1(const CohomologyVector& h) {
    std::vector<std::pair<int, int>> nz;
    for (auto& [i, v] : h)
        if (v != 0) nz.emplace_back(i, v);
    // dim P_1 = 1 over A_1.
    if (nz.size() == 1 && nz[0].second == catalog_get("A", 1).algebra.dim()) return {nz[0].first};
    return {};
}

}  // namespace schurder
