#include <doctest.h>

#include "perimal/error.hpp"
#include "perimal/presentation.hpp"
#include "perimal/quotient.hpp"
#include "perimal/torus_nf.hpp"
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

Word random_xy_word(Rng& rng, int len) {
    Word out;
    for (int i = 0; i < len; ++i) {
        i64 e = (i64)(rng.next() % 7) - 3;
        if (e == 0) e = 3;
        out = wmul(out, {{rng.next() % 2 ? "x" : "y", e}});
    }
    return out;
}

} // namespace

TEST_CASE("normal form invariants hold in torus(2,3) and torus(3,5)") {
    for (auto [p, q] : {std::pair<i64, i64>{2, 3}, {3, 5}}) {
        Rng rng(11 * (uint64_t)p + (uint64_t)q);
        for (int trial = 0; trial < 100; ++trial) {
            Word w = random_xy_word(rng, 4);
            NormalForm nf = torus_normal_form(p, q, w);
            char prev = 0;
            for (auto& [gen, exp] : nf.syllables) {
                CHECK((gen == 'x' || gen == 'y'));
                CHECK(gen != prev);
                if (gen == 'x') {
                    CHECK(exp > 0);
                    CHECK(exp < p);
                } else {
                    CHECK(exp > 0);
                    CHECK(exp < q);
                }
                prev = gen;
            }
        }
    }
}

TEST_CASE("relator and central powers normalize to the center coordinate") {
    // x^p y^-q = 1 and z = x^p is central
    CHECK(torus_normal_form(2, 3, parse_word("x^2 y^-3")) == NormalForm{});
    CHECK(torus_normal_form(2, 3, parse_word("x^2")) == NormalForm{1, {}});
    CHECK(torus_normal_form(2, 3, parse_word("y^3")) == NormalForm{1, {}});
    CHECK(torus_normal_form(2, 3, parse_word("y^-6 x^2")) == NormalForm{-1, {}});
    CHECK(torus_normal_form(3, 5, parse_word("y^5 x^-3")) == NormalForm{});
    // z commutes past everything
    Word w = parse_word("x y x y^2");
    CHECK(torus_normal_form(3, 5, wmul(parse_word("x^3"), w)) ==
          torus_normal_form(3, 5, wmul(w, parse_word("y^5"))));
}

TEST_CASE("normal form equality is a congruence certificate") {
    // products of equal words stay equal; inverses cancel exactly
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Word a = random_xy_word(rng, 3), b = random_xy_word(rng, 3);
        CHECK(torus_normal_form(2, 3, wmul(a, winv(a))) == NormalForm{});
        NormalForm ab = torus_normal_form(2, 3, wmul(a, b));
        Word a_rel = wmul(a, parse_word("x^2 y^-3"));  // insert a relator
        CHECK(torus_normal_form(2, 3, wmul(a_rel, b)) == ab);
    }
}

TEST_CASE("no quotient separates words with equal normal forms") {
    // unit-scale rehearsal of the engine cross-validation gate
    auto [g, peripheral] = torus_presentation(2, 3);
    (void)peripheral;
    auto quotients = find_quotients(g, 5, 40, 0);
    REQUIRE(!quotients.empty());
    Rng rng(23);
    int equal_pairs = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Word a = random_xy_word(rng, 3);
        Word b = wmul(a, parse_word("x^2 y^-3"));
        if (torus_normal_form(2, 3, a) == torus_normal_form(2, 3, b)) {
            ++equal_pairs;
            for (const auto& q : quotients) CHECK(quotient_eval(q, a) == quotient_eval(q, b));
        }
    }
    CHECK(equal_pairs == 60);
}

TEST_CASE("peripheral membership recovers mu and z coordinates") {
    for (auto [p, q] : {std::pair<i64, i64>{2, 3}, {3, 5}}) {
        auto [a, b] = torus_mu_exponents(p, q);
        Word mu = {{std::string("x"), a}, {std::string("y"), b}};
        Word z = {{std::string("x"), p}};
        for (i64 m = -3; m <= 3; ++m) {
            for (i64 k = -2; k <= 2; ++k) {
                Word w = wmul(wpow(z, k), wpow(mu, m));
                auto res = torus_peripheral_membership(p, q, w);
                REQUIRE(res.has_value());
                CHECK(res->first == m);
                CHECK(res->second == k);
            }
        }
        // generators themselves lie outside <mu, z> unless they equal it
        CHECK(!torus_peripheral_membership(p, q, parse_word("x")).has_value());
        CHECK(!torus_peripheral_membership(p, q, parse_word("x y")).has_value());
    }
}

TEST_CASE("torus normal form rejects bad parameters and alphabets") {
    CHECK_THROWS_AS(torus_normal_form(2, 4, parse_word("x")), Error);
    CHECK_THROWS_AS(torus_normal_form(1, 3, parse_word("x")), Error);
    CHECK_THROWS_AS(torus_normal_form(2, 3, parse_word("x w")), Error);
}
