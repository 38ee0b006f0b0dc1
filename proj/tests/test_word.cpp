#include <doctest.h>

#include "perimal/error.hpp"
#include "perimal/word.hpp"

using namespace perimal;

namespace {

Word w(const std::string& text) { return parse_word(text); }

// Deterministic LCG; a fixed stream keeps the property samples reproducible.
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
};

Word random_word(Rng& rng, int len) {
    static const char* gens[] = {"a", "b", "c"};
    Word out;
    for (int i = 0; i < len; ++i) {
        i64 e = (i64)(rng.next() % 5) - 2;
        if (e == 0) e = 1;
        out = wmul(out, {{gens[rng.next() % 3], e}});
    }
    return out;
}

} // namespace

TEST_CASE("free reduction collapses adjacent syllables and zero exponents") {
    Word raw = {{"a", 2}, {"a", -2}, {"b", 1}};
    Word r = reduced(raw);
    CHECK(r == w("b"));
    CHECK(is_reduced(r));
    CHECK(!is_reduced(raw));
    CHECK(reduced({}) == Word{});
}

TEST_CASE("wmul joins at the seam only") {
    CHECK(wmul(w("a^2 b"), w("b^-1 a")) == w("a^3"));
    CHECK(wmul(w("a"), w("a^-1")) == Word{});
    CHECK(wmul(Word{}, w("b^3")) == w("b^3"));
}

TEST_CASE("group identities hold on random words") {
    Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        Word a = random_word(rng, 4), b = random_word(rng, 4), c = random_word(rng, 3);
        CHECK(wmul(wmul(a, b), c) == wmul(a, wmul(b, c)));
        CHECK(wmul(a, winv(a)) == Word{});
        CHECK(winv(winv(a)) == a);
        CHECK(winv(wmul(a, b)) == wmul(winv(b), winv(a)));
        CHECK(wpow(a, 3) == wmul(a, wmul(a, a)));
        CHECK(wpow(a, -2) == winv(wmul(a, a)));
        CHECK(wpow(a, 0) == Word{});
        CHECK(wconj(b, a) == wmul(b, wmul(a, winv(b))));
        CHECK(word_length(winv(a)) == word_length(a));
    }
}

TEST_CASE("render and parse round-trip bit-exactly") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Word a = random_word(rng, 5);
        CHECK(parse_word(render_word(a)) == a);
    }
    CHECK(render_word(Word{}) == "1");
    CHECK(parse_word("1") == Word{});
    CHECK(render_word(w("a^-2 b")) == "a^-2 b");
}

TEST_CASE("parse rejects malformed tokens") {
    CHECK_THROWS_AS(parse_word("a^0"), Error);
    CHECK_THROWS_AS(parse_word("a^"), Error);
    CHECK_THROWS_AS(parse_word("^2"), Error);
    CHECK_THROWS_AS(parse_word("a^x"), Error);
}

TEST_CASE("alphabet-checked parse rejects foreign generators") {
    CHECK(parse_word("x y^-1", {"x", "y"}) == w("x y^-1"));
    CHECK_THROWS_AS(parse_word("x z", {"x", "y"}), Error);
    try {
        parse_word("z", {"x"});
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_generator);
    }
}

TEST_CASE("wsubst rewrites through a dictionary and is total") {
    std::map<std::string, Word> images = {{"a", w("x y")}, {"b", w("y^-1")}};
    CHECK(wsubst(w("a b"), images) == w("x"));
    CHECK(wsubst(w("a^-1"), images) == w("y^-1 x^-1"));
    CHECK_THROWS_AS(wsubst(w("c"), images), Error);
}

TEST_CASE("word_length counts letters with multiplicity") {
    CHECK(word_length(Word{}) == 0);
    CHECK(word_length(w("a^3 b^-2")) == 5);
}
