#include <doctest.h>

#include <map>
#include <set>

#include "perimal/diagram.hpp"
#include "perimal/notation.hpp"
#include "perimal/quotient.hpp"

using namespace perimal;

TEST_CASE("presentation hash is stable and text-sensitive") {
    auto [g, p] = torus_presentation(2, 3);
    (void)p;
    CHECK(presentation_hash(g) == presentation_hash(g));
    PresentedGroup g2 = g;
    g2.relators[0] = wmul(g2.relators[0], Word{{"x", 1}});
    CHECK(presentation_hash(g) != presentation_hash(g2));
}

TEST_CASE("quotients kill every relator and tag their source") {
    auto [g, p] = torus_presentation(2, 5);
    (void)p;
    auto qs = find_quotients(g, 5, 200, 0);
    CHECK(!qs.empty());
    uint64_t h = presentation_hash(g);
    for (const auto& q : qs) {
        CHECK(q.source == h);
        for (const Word& rel : g.relators) CHECK(quotient_eval(q, rel).is_identity());
    }
}

TEST_CASE("quotient_eval respects the group operation") {
    auto [g, p] = torus_presentation(2, 3);
    auto qs = find_quotients(g, 5, 50, 0);
    REQUIRE(!qs.empty());
    Word a = parse_word("x y^-1 x");
    Word b = wmul(p.mu, p.lambda);
    for (const auto& q : qs) {
        CHECK(quotient_eval(q, wmul(a, b)) == quotient_eval(q, a) * quotient_eval(q, b));
        CHECK(quotient_eval(q, winv(a)) == quotient_eval(q, a).inverse());
    }
}

TEST_CASE("enumeration is canonical across calls and seeds") {
    auto [g, p] = torus_presentation(3, 4);
    (void)p;
    auto a = find_quotients(g, 5, 120, 0);
    auto b = find_quotients(g, 5, 120, 0);
    auto c = find_quotients(g, 5, 120, 1234567);
    CHECK(a == b);
    CHECK(a == c);
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].degree <= a[i].degree);
}

TEST_CASE("isomorphic presentations of one group get matching quotient counts") {
    // trefoil: torus form and Wirtinger form present the same group, so the
    // number of transitive-plus-intransitive images per degree need not match
    // generator-by-generator, but homomorphism counts up to conjugation do.
    auto t = torus_presentation(2, 3);
    auto w = wirtinger(dt_to_diagram(parse_dt("4 6 2")));
    std::map<int, size_t> per_degree_t, per_degree_w;
    for (const auto& q : find_quotients(t.first, 5, 4000, 0)) per_degree_t[q.degree]++;
    for (const auto& q : find_quotients(w.first, 5, 4000, 0)) per_degree_w[q.degree]++;
    CHECK(per_degree_t == per_degree_w);
}

TEST_CASE("cable quotient lists are complete per degree and deterministic") {
    Presentation pres = cable_presentation(2, 1, torus_presentation(2, 3));
    auto a = cable_quotients(pres.first, 7, 4000);
    auto b = cable_quotients(pres.first, 7, 4000);
    CHECK(a == b);
    std::map<int, size_t> per_degree;
    for (const auto& q : a) {
        per_degree[q.degree]++;
        for (const Word& rel : pres.first.relators)
            CHECK(quotient_eval(q, rel).is_identity());
    }
    CHECK(a.size() == 36);
    CHECK(per_degree[2] == 1);
    CHECK(per_degree[3] == 1);
    CHECK(per_degree[4] == 3);
    CHECK(per_degree[5] == 5);
    CHECK(per_degree[6] == 12);
    CHECK(per_degree[7] == 14);
}

TEST_CASE("subgroup closure sizes match known groups") {
    Perm r = Perm::cycle(3, {0, 1, 2});
    Perm s = Perm::cycle(3, {0, 1});
    CHECK(subgroup_closure({r}, 3).size() == 3);
    CHECK(subgroup_closure({r, s}, 3).size() == 6);
    CHECK(subgroup_closure({}, 4).size() == 1);
    auto cl = subgroup_closure({Perm::cycle(4, {0, 1}), Perm::cycle(4, {2, 3})}, 4);
    CHECK(cl.size() == 4);
    std::set<uint64_t> uniq(cl.begin(), cl.end());
    CHECK(uniq.size() == cl.size());
    for (size_t i = 1; i < cl.size(); ++i) CHECK(cl[i - 1] < cl[i]);
}
