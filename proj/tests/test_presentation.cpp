#include <doctest.h>

#include "perimal/diagram.hpp"
#include "perimal/error.hpp"
#include "perimal/notation.hpp"
#include "perimal/presentation.hpp"
#include "perimal/word.hpp"

using namespace perimal;

TEST_CASE("torus presentation carries relator, peripheral pair, and metadata") {
    auto [g, p] = torus_presentation(2, 3);
    CHECK(g.generators == std::vector<std::string>{"x", "y"});
    REQUIRE(g.relators.size() == 1);
    CHECK(g.relators[0] == parse_word("x^2 y^-3"));
    auto* meta = std::get_if<TorusMeta>(&g.structure);
    REQUIRE(meta != nullptr);
    CHECK(meta->p == 2);
    CHECK(meta->q == 3);
    CHECK(meta->a * meta->q + meta->b * meta->p == 1);
    // mu = x^a y^b, lambda = z mu^-pq with z = x^p
    CHECK(p.mu == parse_word("x y^-1"));
    auto rep = abelianization_check(g, p);
    CHECK(rep.mu_image == 1);
    CHECK(rep.lambda_image == 0);
}

TEST_CASE("torus meridian exponents solve a*q + b*p = 1 minimally") {
    for (auto [p, q] : {std::pair<i64, i64>{2, 3}, {3, 5}, {2, 7}, {4, 7}, {5, 6}}) {
        auto [a, b] = torus_mu_exponents(p, q);
        CHECK(a * q + b * p == 1);
        CHECK(a > 0);
        CHECK(a <= p);
    }
}

TEST_CASE("wirtinger presentation of the trefoil") {
    auto [g, p] = wirtinger(dt_to_diagram(parse_dt("4 6 2")));
    CHECK(g.generators.size() == 3);
    CHECK(g.relators.size() == 3);
    CHECK(std::holds_alternative<WirtingerMeta>(g.structure));
    // meridian is a generator, longitude abelianizes to zero
    auto rep = abelianization_check(g, p);
    CHECK(rep.invariant_factors.empty());
    CHECK(rep.mu_image == 1);
    CHECK(rep.lambda_image == 0);
}

TEST_CASE("abelianization rejects non-Z groups") {
    PresentedGroup g;
    g.generators = {"a"};
    g.relators = {parse_word("a^2")};
    PeripheralPair p{parse_word("a"), Word{}};
    try {
        abelianization_check(g, p);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::h1_not_z);
    }
}

TEST_CASE("sum presentation concatenates factors over one meridian") {
    Presentation s = sum_presentation({torus_presentation(2, 3), torus_presentation(2, 5)});
    auto& [g, p] = s;
    CHECK(g.generators.size() == 4);
    auto* meta = std::get_if<SumMeta>(&g.structure);
    REQUIRE(meta != nullptr);
    REQUIRE(meta->factors.size() == 2);
    for (const FactorMeta& f : meta->factors) {
        CHECK(f.torus.has_value());
        CHECK(f.gen_end - f.gen_begin == 2);
        // factor meridians are all glued to the global one
        auto rep = abelianization_check(g, p);
        CHECK(rep.mu_image == 1);
        CHECK(rep.lambda_image == 0);
    }
    // composite longitude is the product of the factor longitudes
    CHECK(p.lambda == wmul(meta->factors[0].lambda, meta->factors[1].lambda));
}

TEST_CASE("cable presentation records the gluing arithmetic") {
    Presentation c = cable_presentation(2, 3, torus_presentation(2, 3));
    auto& [g, p] = c;
    auto* meta = std::get_if<CableMeta>(&g.structure);
    REQUIRE(meta != nullptr);
    CHECK(meta->a == 2);
    CHECK(meta->b == 3);
    CHECK(meta->a * meta->s - meta->b * meta->r == 1);
    CHECK(meta->alpha * meta->b + meta->beta * meta->a == 1);
    CHECK(meta->alpha > 0);
    auto rep = abelianization_check(g, p);
    CHECK(rep.mu_image == 1);
    CHECK(rep.lambda_image == 0);
}

TEST_CASE("presentation_of dispatches on the expression shape") {
    CHECK(presentation_of(*parse_knot_expr("torus(2,3)")) == torus_presentation(2, 3));
    CHECK(presentation_of(*parse_knot_expr("sum(torus(2,3),torus(2,5))")) ==
          sum_presentation({torus_presentation(2, 3), torus_presentation(2, 5)}));
    CHECK(presentation_of(*parse_knot_expr("cable(2,3;torus(2,3))")) ==
          cable_presentation(2, 3, torus_presentation(2, 3)));
    CHECK(presentation_of(*parse_knot_expr("dt[4 6 2]")) ==
          wirtinger(dt_to_diagram(parse_dt("4 6 2"))));
}

TEST_CASE("rename_with_prefix rewrites every component consistently") {
    Presentation t = torus_presentation(2, 3);
    Presentation r = rename_with_prefix(t, "f0_");
    CHECK(r.first.generators == std::vector<std::string>{"f0_x", "f0_y"});
    CHECK(r.first.relators[0] == parse_word("f0_x^2 f0_y^-3"));
    CHECK(r.second.mu == parse_word("f0_x f0_y^-1"));
    auto* meta = std::get_if<TorusMeta>(&r.first.structure);
    REQUIRE(meta != nullptr);
    CHECK(meta->p == 2);
    // abelianization map follows the renaming
    CHECK(r.first.abelianization.count("f0_x") == 1);
    CHECK(r.first.abelianization.count("x") == 0);
}

TEST_CASE("serialization round-trips bit-exactly") {
    for (const char* expr :
         {"torus(2,3)", "torus(3,5)", "sum(torus(2,3),torus(2,3))",
          "cable(2,3;torus(2,3))", "dt[4 6 8 2]", "braid[B3: 1 -2 1 -2]"}) {
        Presentation pres = presentation_of(*parse_knot_expr(expr));
        std::string text = serialize_presentation(pres.first, pres.second);
        Presentation back = parse_presentation(text);
        CHECK(back == pres);
        CHECK(serialize_presentation(back.first, back.second) == text);
    }
}

TEST_CASE("parse_presentation rejects malformed text") {
    CHECK_THROWS_AS(parse_presentation(""), Error);
    CHECK_THROWS_AS(parse_presentation("gen: x y\nrel: x z\nmu: x\nlambda: y\n"), Error);
}
