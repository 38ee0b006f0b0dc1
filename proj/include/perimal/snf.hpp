#pragma once

#include <vector>

#include "perimal/intmath.hpp"

namespace perimal {

using IntMatrix = std::vector<std::vector<i64>>;  // row major, rectangular

struct SmithDecomposition {
    std::vector<i64> invariant_factors;  // positive, each divides the next
    size_t rank = 0;
    // Unimodular column transform V with A*V in column form: the last
    // (cols - rank) columns of V span the integer right kernel of A.
    IntMatrix v;
};

SmithDecomposition smith_normal_form(IntMatrix a);

} // namespace perimal
