#include <doctest.h>

#include "perimal/cable_nf.hpp"
#include "perimal/error.hpp"
#include "perimal/presentation.hpp"
#include "perimal/word.hpp"

using namespace perimal;

namespace {

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
};

Word random_qch_word(Rng& rng, int len) {
    static const char* gens[] = {"q", "c", "h"};
    Word out;
    for (int i = 0; i < len; ++i) {
        i64 e = (i64)(rng.next() % 5) - 2;
        if (e == 0) e = 2;
        out = wmul(out, {{gens[rng.next() % 3], e}});
    }
    return out;
}

} // namespace

TEST_CASE("cable-space relators normalize to the identity") {
    for (auto [a, b] : {std::pair<i64, i64>{2, 3}, {3, 2}, {2, -1}, {3, -5}}) {
        // q = t^-b and h = t^a commute with each other and satisfy q^a h^b = 1
        CHECK(cable_normal_form(a, b, parse_word("q h q^-1 h^-1")) == CableNormalForm{});
        CHECK(cable_normal_form(a, b, parse_word("c h c^-1 h^-1")) == CableNormalForm{});
        Word qa_hb = wmul(wpow(parse_word("q"), a), wpow(parse_word("h"), b));
        CHECK(cable_normal_form(a, b, qa_hb) == CableNormalForm{});
        // z = t^a = h
        CHECK(cable_normal_form(a, b, parse_word("h")) == CableNormalForm{1, {}});
    }
}

TEST_CASE("normal form syllables alternate with t-exponents in range") {
    Rng rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        Word w = random_qch_word(rng, 4);
        CableNormalForm nf = cable_normal_form(3, 2, w);
        char prev = 0;
        for (auto& [gen, exp] : nf.syllables) {
            CHECK((gen == 'c' || gen == 't'));
            CHECK(gen != prev);
            CHECK(exp != 0);
            if (gen == 't') {
                CHECK(exp > 0);
                CHECK(exp < 3);
            }
            prev = gen;
        }
    }
}

TEST_CASE("normal form equality is stable under relator insertion") {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        Word a = random_qch_word(rng, 3), b = random_qch_word(rng, 3);
        CHECK(cable_normal_form(2, 3, wmul(a, winv(a))) == CableNormalForm{});
        CableNormalForm ab = cable_normal_form(2, 3, wmul(a, b));
        Word with_rel = wmul(wmul(a, parse_word("q^2 h^3")), b);
        CHECK(cable_normal_form(2, 3, with_rel) == ab);
        Word with_comm = wmul(wmul(a, parse_word("c h c^-1 h^-1")), b);
        CHECK(cable_normal_form(2, 3, with_comm) == ab);
    }
}

TEST_CASE("peripheral membership in the cable group") {
    Presentation pres = cable_presentation(2, 3, torus_presentation(2, 3));
    const auto* meta = std::get_if<CableMeta>(&pres.first.structure);
    REQUIRE(meta != nullptr);
    // mu and lambda themselves are peripheral; lambda = h mu^-ab
    auto mu_res = cable_peripheral_membership(*meta, pres.second.mu);
    REQUIRE(mu_res.has_value());
    CHECK(mu_res->first == 1);
    CHECK(mu_res->second == 0);
    auto la_res = cable_peripheral_membership(*meta, pres.second.lambda);
    REQUIRE(la_res.has_value());
    CHECK(la_res->first == -meta->a * meta->b);
    CHECK(la_res->second == 1);
    // powers and mixed products stay inside with additive coordinates
    Word w = wmul(wpow(pres.second.mu, 3), wpow(pres.second.lambda, 2));
    auto mix = cable_peripheral_membership(*meta, w);
    REQUIRE(mix.has_value());
    CHECK(mix->first == 3 - 2 * meta->a * meta->b);
    CHECK(mix->second == 2);
    // the cable-space section generator c is not peripheral
    CHECK(!cable_peripheral_membership(*meta, parse_word("c")).has_value());
}

TEST_CASE("cable normal form rejects bad parameters and alphabets") {
    CHECK_THROWS_AS(cable_normal_form(2, 4, parse_word("q")), Error);
    CHECK_THROWS_AS(cable_normal_form(1, 3, parse_word("q")), Error);
    CHECK_THROWS_AS(cable_normal_form(2, 0, parse_word("q")), Error);
    CHECK_THROWS_AS(cable_normal_form(2, 3, parse_word("x")), Error);
}
