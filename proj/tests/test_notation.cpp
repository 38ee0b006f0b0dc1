#include <doctest.h>

#include "perimal/error.hpp"
#include "perimal/notation.hpp"

using namespace perimal;

namespace {

std::string code_of(const std::string& text, const std::string& fallback = "") {
    try {
        parse_knot_expr(text);
        return fallback;
    } catch (const Error& e) {
        return e.code();
    }
}

} // namespace

TEST_CASE("dt parse and render round-trip") {
    DTCode c = parse_dt("4 6 2");
    CHECK(c.crossings() == 3);
    CHECK(c.pairs == std::vector<i64>{4, 6, 2});
    CHECK(render_dt(c) == "4 6 2");
    CHECK(parse_dt(render_dt(c)) == c);
    CHECK(parse_dt("-12 -10 -14 18 16 -2 -6 -4 8").crossings() == 9);
}

TEST_CASE("dt parse rejects malformed pairings") {
    CHECK_THROWS_AS(parse_dt(""), Error);
    CHECK_THROWS_AS(parse_dt("4 6 3"), Error);    // odd entry
    CHECK_THROWS_AS(parse_dt("4 6 4"), Error);    // duplicate
    CHECK_THROWS_AS(parse_dt("4 6 10"), Error);   // out of range
    CHECK_THROWS_AS(parse_dt("4 x 2"), Error);
    try {
        parse_dt("4 6 3");
    } catch (const Error& e) {
        CHECK(e.code() == errc::malformed_dt);
    }
}

TEST_CASE("braid parse and render round-trip") {
    BraidWord b = parse_braid("B3: 1 -2 1 -2");
    CHECK(b.strands == 3);
    CHECK(b.letters == std::vector<int>{1, -2, 1, -2});
    CHECK(render_braid(b) == "B3: 1 -2 1 -2");
    CHECK(parse_braid(render_braid(b)) == b);
}

TEST_CASE("braid parse rejects malformed words") {
    CHECK_THROWS_AS(parse_braid("B3: 3"), Error);   // letter out of range
    CHECK_THROWS_AS(parse_braid("B3: 0"), Error);
    CHECK_THROWS_AS(parse_braid("B1: 1"), Error);
    CHECK_THROWS_AS(parse_braid("3: 1"), Error);
    try {
        parse_braid("B3: 3");
    } catch (const Error& e) {
        CHECK(e.code() == errc::malformed_braid);
    }
}

TEST_CASE("braid closure must be a single component") {
    try {
        parse_braid("B3: 1");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_knot);
    }
    CHECK_THROWS_AS(parse_braid("B2: 1 1"), Error);  // torus(2,2) link
}

TEST_CASE("knot expression grammar round-trips") {
    const char* exprs[] = {
        "torus(2,3)",
        "torus(3,-5)",
        "cable(2,3;torus(2,3))",
        "cable(2,-1;cable(3,2;torus(2,5)))",
        "sum(torus(2,3),torus(2,5))",
        "sum(torus(2,3),torus(2,3),torus(3,4))",
        "dt[4 6 2]",
        "braid[B3: 1 -2 1 -2]",
    };
    for (const char* e : exprs) {
        KnotExprPtr k = parse_knot_expr(e);
        CHECK(render_knot_expr(*k) == e);
        CHECK(render_knot_expr(*parse_knot_expr(render_knot_expr(*k))) == e);
    }
}

TEST_CASE("torus parameter validation") {
    CHECK(code_of("torus(2,4)") == errc::gcd_violation);
    CHECK(code_of("torus(1,3)") == errc::trivial_knot_rejected);
    CHECK(code_of("torus(2,-1)") == errc::trivial_knot_rejected);
    CHECK(code_of("torus(0,3)") == errc::gcd_violation);
    CHECK(code_of("torus(2,3)").empty());
    CHECK(code_of("torus(-2,3)").empty());
}

TEST_CASE("cable parameter validation") {
    CHECK(code_of("cable(2,4;torus(2,3))") == errc::gcd_violation);
    CHECK(code_of("cable(1,3;torus(2,3))") == errc::trivial_knot_rejected);
    CHECK(code_of("cable(2,0;torus(2,3))") == errc::gcd_violation);
    CHECK(code_of("cable(2,1;torus(2,3))").empty());
    CHECK(code_of("cable(2,-7;torus(2,3))").empty());
}

TEST_CASE("sum arity and syntax errors") {
    CHECK(code_of("sum(torus(2,3))") == errc::parse_error);
    CHECK(code_of("torus(2,3") == errc::parse_error);
    CHECK(code_of("") == errc::parse_error);
    CHECK(code_of("knot(2,3)") == errc::parse_error);
    CHECK(code_of("torus(2,3) junk") == errc::parse_error);
}

TEST_CASE("table requires a census") {
    CHECK(code_of("table(4_1)") == errc::unknown_table_name);
}

TEST_CASE("expression constructors mirror the grammar") {
    KnotExprPtr k = make_cable(2, 3, make_torus(2, 3));
    CHECK(render_knot_expr(*k) == "cable(2,3;torus(2,3))");
    KnotExprPtr s = make_sum({make_torus(2, 3), make_torus(2, 5)});
    CHECK(render_knot_expr(*s) == "sum(torus(2,3),torus(2,5))");
    KnotExprPtr d = make_diagram(parse_dt("4 6 2"));
    CHECK(render_knot_expr(*d) == "dt[4 6 2]");
}
