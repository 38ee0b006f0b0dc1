#pragma once

#include "perimal/laurent.hpp"
#include "perimal/presentation.hpp"

namespace perimal {

// Alexander polynomial via Fox calculus: gcd of the (n-1)x(n-1) minors of
// the Jacobian pushed through the abelianization map, normalized to lowest
// exponent 0 and positive leading coefficient.  Requires at least n-1
// relators (NotDeficiencyOne otherwise); extra relators are admitted, with
// the gcd running over all row and column selections.
Laurent alexander_polynomial(const PresentedGroup& g);

// Closed torus-knot formula (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)), normalized.
// Signs of p, q do not matter.  Independent oracle for the Fox route.
Laurent torus_alexander(i64 p, i64 q);

} // namespace perimal
