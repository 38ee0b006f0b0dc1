#pragma once

#include <vector>

#include "perimal/presentation.hpp"
#include "perimal/word.hpp"

namespace perimal {

struct AmalgamSyllable {
    size_t factor = 0;
    Word rep;  // factor element outside <mu>, in the global generators

    friend bool operator==(const AmalgamSyllable&, const AmalgamSyllable&) = default;
};

// w = mu^e s1 s2 ... with syllables from alternating factors, none in <mu>.
// w = 1 in the amalgam iff the decomposition is trivial.
struct AmalgamDecomposition {
    i64 e = 0;
    std::vector<AmalgamSyllable> syllables;

    bool trivial() const { return e == 0 && syllables.empty(); }
    friend bool operator==(const AmalgamDecomposition&, const AmalgamDecomposition&) = default;
};

// Requires a sum presentation whose factors all carry torus metadata (the
// membership oracle); otherwise UnsupportedFactor.
AmalgamDecomposition amalgam_normal_form(const PresentedGroup& g, const Word& w);

// Some(m) iff w = mu^m inside the factor's group, decided by the factor's
// torus normal form.  Exposed for peripheral-membership search.
std::optional<i64> factor_mu_power(const PresentedGroup& g, size_t factor, const Word& w);

} // namespace perimal
