#include "sweeps.hpp"

#include "schurder/a2.hpp"
#include "schurder/f3.hpp"
#include "schurder/homotopy.hpp"
#include "schurder/schur.hpp"

#include <random>

namespace schurder::sweeps {

namespace {

struct Named {
    std::string name;
    ProjComplex c;
};

// d^2 = 0, radical, indecomposable, pairwise non-isomorphic.
CheckResult objects(const std::string& label, const Algebra& alg, const std::vector<Named>& all) {
    CheckResult r{label, true, ""};
    auto fail = [&](const std::string& why) {
        if (r.passed) r.detail = why;
        r.passed = false;
    };
    for (auto& x : all) {
        if (!check_complex(alg, x.c)) fail("d^2 != 0 for " + x.name);
        else if (!in_frak_p(alg, x.c)) fail("not radical: " + x.name);
        else if (!is_indecomposable(alg, x.c)) fail("decomposable: " + x.name);
    }
    long pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j, ++pairs)
            if (is_isomorphic_K(alg, all[i].c, all[j].c)) fail("isomorphic: " + all[i].name + " and " + all[j].name);
    if (r.passed) r.detail = std::to_string(all.size()) + " objects, " + std::to_string(pairs) + " pairs";
    return r;
}

template <class F>
CheckResult guarded(const std::string& label, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {label, false, e.what()};
    }
}

}  // namespace

CheckResult catalog(int f3_length) {
    return guarded("catalog", [&] {
        SelfTestReport rep = catalog_self_test(f3_length);
        auto f = rep.failures();
        return CheckResult{"catalog", rep.ok(),
                           std::to_string(rep.checks.size()) + " checks" + (f.empty() ? "" : ", first failure " + f[0])};
    });
}

CheckResult a2_shapes(int max_s, int max_shift) {
    return guarded("A2 shapes", [&] {
        std::vector<Named> all;
        for (auto& x : a2_grid(max_s, max_shift)) all.push_back({to_string(x), realize(x)});
        return objects("A2 shapes", catalog_get("A", 2).algebra, all);
    });
}

CheckResult f3_objects(int string_length, int band_length, int n_eigen) {
    return guarded("F3 strings and bands", [&] {
        std::vector<Rational> lambdas;
        for (int l = 1; l <= n_eigen; ++l) lambdas.push_back(Rational(l));
        std::vector<Named> all;
        for (auto& s : f3::enumerate_strings(string_length))
            all.push_back({f3::to_string(s), f3::build_complex(f3::realize_rep(s))});
        for (auto& b : f3::enumerate_bands(band_length, lambdas))
            all.push_back({f3::to_string(b), f3::build_complex(f3::realize_rep(b))});
        return objects("F3 strings and bands", catalog_get("F", 3).algebra, all);
    });
}

CheckResult band_family() {
    return guarded("band family", [&] {
        const Algebra& alg = catalog_get("F", 3).algebra;
        const f3::Word w = f3::parse_word("p[0]~p[0]-y[0]~y[0]-p[0]");
        std::vector<Named> all;
        for (int l : {1, 2, 3, 5}) {
            f3::BandSpec b = f3::make_band(w, Rational(l));
            all.push_back({f3::to_string(b), f3::build_complex(f3::realize_rep(b))});
        }
        CheckResult r = objects("band family", alg, all);
        const CohomologyVector h = cohomology(alg, all[0].c).dims;
        for (auto& x : all)
            if (cohomology(alg, x.c).dims != h) {
                r.passed = false;
                r.detail = "cohomology differs for " + x.name;
            }
        if (r.passed) {
            std::string hs;
            for (auto& [deg, dim] : h) hs += (hs.empty() ? "" : ",") + std::to_string(deg) + ":" + std::to_string(dim);
            r.detail = "4 complexes, cohomology " + hs + ", pairwise non-isomorphic";
        }
        return r;
    });
}

CheckResult witnesses(int trials, int needed, std::uint64_t seed) {
    return guarded("witnesses", [&] {
        std::mt19937_64 rng(seed);
        CheckResult r{"witnesses", true, ""};
        std::string counts;
        for (int k = 1; k <= 8; ++k) {
            int distinct = 0;
            for (int t = 0; t < trials; ++t) {
                Witness a = wildness_witness(k, random_witness_rep(k, witness_dims(k), rng));
                Witness b = wildness_witness(k, random_witness_rep(k, witness_dims(k), rng));
                for (auto* w : {&a, &b})
                    if (!check_complex(*w->algebra, w->complex) || !in_frak_p(*w->algebra, w->complex)) {
                        r.passed = false;
                        r.detail = "case " + std::to_string(k) + " output fails d^2 = 0 or the radical condition";
                    }
                if (!is_isomorphic_K(*a.algebra, a.complex, b.complex)) ++distinct;
            }
            if (distinct < needed && r.passed) {
                r.passed = false;
                r.detail = "case " + std::to_string(k) + ": only " + std::to_string(distinct) + "/" +
                           std::to_string(trials) + " non-isomorphic";
            }
            counts += (k > 1 ? " " : "") + std::to_string(distinct) + "/" + std::to_string(trials);
        }
        r.detail += (r.detail.empty() ? "" : "; ") + ("non-isomorphic pairs per case: " + counts);
        return r;
    });
}

}  // namespace schurder::sweeps
