#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "perimal/presentation.hpp"
#include "perimal/word.hpp"

namespace perimal {

// Canonical form z^k s1 s2 ... in <c,t | [c,t^a]>, z = t^a central.  Words in
// the cable-space generators q, c, h embed via q = t^{-b}, h = t^a.  Syllables
// alternate between c and t; t-exponents lie in (0,a).  Two cable-space words
// are equal in the group iff their normal forms are identical.
struct CableNormalForm {
    i64 k = 0;
    std::vector<std::pair<char, i64>> syllables;  // ('c' or 't', exponent)

    friend bool operator==(const CableNormalForm&, const CableNormalForm&) = default;
};

// Requires gcd(a,b) = 1, a >= 2, b != 0; w over generators named q, c, h.
CableNormalForm cable_normal_form(i64 a, i64 b, const Word& w);

// Some(m,k) iff w = z^k mu^m with mu the cable-knot meridian and z = h; the
// peripheral subgroup is <mu, h> since lambda = h mu^{-ab}.
std::optional<std::pair<i64, i64>> cable_peripheral_membership(const CableMeta& meta,
                                                               const Word& w);

} // namespace perimal
