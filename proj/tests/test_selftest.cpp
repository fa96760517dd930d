#include <doctest.h>

#include "schurder/selftest.hpp"

#include <algorithm>

using namespace schurder;

TEST_CASE("catalog self-test passes") {
    SelfTestReport r = catalog_self_test();
    for (auto& f : r.failures()) MESSAGE(f);
    CHECK(r.ok());
    CHECK(r.checks.size() > 40);
}

TEST_CASE("a corrupted relation is reported by name") {
    CatalogSource src = catalog_source("F", 3);
    const std::string good = "beta1 alpha1 = alpha2 beta2";
    const auto pos = src.relations.find(good);
    REQUIRE(pos != std::string::npos);
    src.relations.replace(pos, good.size(), "beta1 alpha1 = 0");
    SelfTestReport r = check_source("F3", src);
    CHECK_FALSE(r.ok());
    auto f = r.failures();
    REQUIRE(f.size() == 1);
    CHECK(f[0].rfind("F3: beta1 alpha1", 0) == 0);

    CatalogSource typo = catalog_source("D3");
    typo.relations += "; alpha1 gamma = 0";
    r = check_source("D3", typo);
    REQUIRE(r.failures().size() == 1);
    CHECK(r.failures()[0].find("D3: builds") == 0);

    CatalogSource extra = catalog_source("D3");
    r = check_source("D4", extra);
    REQUIRE(r.failures().size() == 1);
    CHECK(r.failures()[0].find("D4: quiver shape") == 0);
}
