#include <doctest.h>

#include "perimal/laurent.hpp"

using namespace perimal;

namespace {

Laurent trefoil_delta() {
    // 1 - t + t^2
    return Laurent::constant(1) - Laurent::t_power(1) + Laurent::t_power(2);
}

} // namespace

TEST_CASE("zero and monomial basics") {
    Laurent z;
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");
    Laurent m = Laurent::monomial(-3, -2);
    CHECK(m.low() == -2);
    CHECK(m.high() == -2);
    CHECK(m.coeff(-2) == -3);
    CHECK(m.coeff(0) == 0);
    CHECK(Laurent::constant(0).is_zero());
}

TEST_CASE("ring identities") {
    Laurent a = trefoil_delta();
    Laurent b = Laurent::monomial(2, -1) + Laurent::constant(5);
    Laurent c = Laurent::t_power(3) - Laurent::constant(7);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Laurent());
    CHECK(-a == Laurent() - a);
    CHECK(a * Laurent::constant(1) == a);
    CHECK(a * Laurent() == Laurent());
}

TEST_CASE("evaluate and substitute_power") {
    Laurent a = trefoil_delta();
    CHECK(a.evaluate(-1) == 3);
    CHECK(a.evaluate(1) == 1);
    CHECK(a.substitute_power(2) == Laurent::constant(1) - Laurent::t_power(2) + Laurent::t_power(4));
    // t -> t^-1 mirrors the exponent range
    Laurent s = a.substitute_power(-1);
    CHECK(s.low() == -2);
    CHECK(s.normalized() == a.normalized());
}

TEST_CASE("content and primitive") {
    Laurent a = Laurent::monomial(4, 1) + Laurent::monomial(-6, 3);
    CHECK(a.content() == 2);
    CHECK(a.primitive() * Laurent::constant(2) == a);
    CHECK(Laurent().content() == 0);
}

TEST_CASE("normalized picks lowest exponent zero and positive lead") {
    Laurent a = Laurent::monomial(-1, 2) + Laurent::monomial(1, 5);
    Laurent n = a.normalized();
    CHECK(n.low() == 0);
    CHECK(n.leading() > 0);
    // units do not change the class
    CHECK((a * Laurent::monomial(-1, 7)).normalized() == n);
    CHECK(Laurent().normalized() == Laurent());
}

TEST_CASE("divide_exact inverts multiplication and rejects non-divisors") {
    Laurent a = trefoil_delta();
    Laurent b = Laurent::monomial(2, -1) + Laurent::constant(3);
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    CHECK(!a.divide_exact(Laurent::constant(2)).has_value());
    CHECK(!(a + Laurent::constant(1)).divide_exact(a).has_value());
}

TEST_CASE("gcd is normalized and commutative") {
    Laurent a = trefoil_delta();
    Laurent b = Laurent::constant(1) - Laurent::monomial(3, 1) + Laurent::t_power(2);
    Laurent g1 = Laurent::gcd(a * b, a * a);
    CHECK(g1 == a.normalized());
    CHECK(Laurent::gcd(a, b) == Laurent::gcd(b, a));
    CHECK(Laurent::gcd(a, Laurent()) == a.normalized());
}

TEST_CASE("to_string formats ascending exponents") {
    CHECK(trefoil_delta().to_string() == "1 - t + t^2");
    CHECK((Laurent::monomial(1, -2) + Laurent::constant(3)).to_string() == "t^-2 + 3");
    CHECK(trefoil_delta().to_string("x") == "1 - x + x^2");
}
