#include <doctest.h>

#include "perimal/amalgam.hpp"
#include "perimal/error.hpp"
#include "perimal/malnormality.hpp"
#include "perimal/presentation.hpp"
#include "perimal/word.hpp"

using namespace perimal;

namespace {

Presentation granny() {
    return sum_presentation({torus_presentation(2, 3), torus_presentation(2, 3)});
}

} // namespace

TEST_CASE("relators and meridian powers decompose trivially or centrally") {
    auto [g, p] = granny();
    for (const Word& rel : g.relators) CHECK(amalgam_normal_form(g, rel).trivial());
    AmalgamDecomposition mu3 = amalgam_normal_form(g, wpow(p.mu, 3));
    CHECK(mu3.e == 3);
    CHECK(mu3.syllables.empty());
    CHECK(amalgam_normal_form(g, Word{}).trivial());
}

TEST_CASE("factor elements outside the meridian make syllables") {
    auto [g, p] = granny();
    (void)p;
    AmalgamDecomposition d = amalgam_normal_form(g, parse_word("f0_x"));
    CHECK(d.syllables.size() == 1);
    CHECK(d.syllables[0].factor == 0);
    AmalgamDecomposition d2 = amalgam_normal_form(g, parse_word("f0_x f1_y f0_x"));
    CHECK(d2.syllables.size() == 3);
    // alternation: adjacent syllables come from different factors after
    // merging same-factor neighbours
    for (size_t i = 1; i < d2.syllables.size(); ++i)
        CHECK(d2.syllables[i].factor != d2.syllables[i - 1].factor);
}

TEST_CASE("decomposition certifies the composite witness identity") {
    auto [g, p] = granny();
    const auto* meta = std::get_if<SumMeta>(&g.structure);
    REQUIRE(meta != nullptr);
    // the first factor's longitude conjugates mu to itself
    Word gw = meta->factors[0].lambda;
    Word identity = wmul(wmul(gw, p.mu), wmul(winv(gw), winv(p.mu)));
    CHECK(amalgam_normal_form(g, identity).trivial());
    // and itself lies outside the peripheral subgroup
    CHECK(!sum_peripheral_membership(g, gw).has_value());
}

TEST_CASE("factor_mu_power sees meridian powers inside one factor") {
    auto [g, p] = granny();
    auto m = factor_mu_power(g, 0, wpow(p.mu, 5));
    REQUIRE(m.has_value());
    CHECK(*m == 5);
    CHECK(!factor_mu_power(g, 0, parse_word("f0_x")).has_value());
    CHECK(!factor_mu_power(g, 1, parse_word("f1_x f1_y")).has_value());
}

TEST_CASE("sum peripheral membership recovers exponents") {
    auto [g, p] = granny();
    for (i64 i : {-2, 0, 1, 3}) {
        for (i64 j : {-1, 0, 2}) {
            Word w = wmul(wpow(p.mu, i), wpow(p.lambda, j));
            auto res = sum_peripheral_membership(g, w);
            REQUIRE(res.has_value());
            CHECK(res->first == i);
            CHECK(res->second == j);
        }
    }
    CHECK(!sum_peripheral_membership(g, parse_word("f0_x")).has_value());
    CHECK(!sum_peripheral_membership(g, parse_word("f0_x f0_y")).has_value());
}

TEST_CASE("three-factor sums decompose the same way") {
    Presentation s = sum_presentation(
        {torus_presentation(2, 3), torus_presentation(2, 5), torus_presentation(3, 4)});
    auto& [g, p] = s;
    for (const Word& rel : g.relators) CHECK(amalgam_normal_form(g, rel).trivial());
    AmalgamDecomposition d = amalgam_normal_form(g, parse_word("f0_x f1_x f2_x"));
    CHECK(d.syllables.size() == 3);
    auto res = sum_peripheral_membership(g, wmul(p.mu, p.lambda));
    REQUIRE(res.has_value());
    CHECK(res->first == 1);
    CHECK(res->second == 1);
}

TEST_CASE("wirtinger structures are not amalgam-reducible") {
    PresentedGroup g;
    g.generators = {"a"};
    g.relators = {};
    g.structure = WirtingerMeta{};
    try {
        amalgam_normal_form(g, parse_word("a"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::unsupported_factor);
    }
}
