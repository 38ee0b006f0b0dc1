#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "perimal/word.hpp"

namespace perimal {

// Canonical form z^k s1 s2 ... in <x,y | x^p = y^q>, z = x^p = y^q central.
// Syllables alternate between the generators; x-exponents lie in (0,p) and
// y-exponents in (0,q).  Two words are equal in the group iff their normal
// forms are identical.
struct NormalForm {
    i64 k = 0;
    std::vector<std::pair<char, i64>> syllables;  // ('x' or 'y', exponent)

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Requires gcd(p,q) = 1 and p,q >= 2; w over generators named x, y.
NormalForm torus_normal_form(i64 p, i64 q, const Word& w);

// Some(m,k) iff w = z^k mu^m with mu = x^a y^b from torus_mu_exponents(p,q);
// the peripheral subgroup is <mu, z> since lambda = z mu^{-pq}.
std::optional<std::pair<i64, i64>> torus_peripheral_membership(i64 p, i64 q, const Word& w);

} // namespace perimal
