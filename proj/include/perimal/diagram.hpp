#pragma once

#include <utility>
#include <vector>

#include "perimal/notation.hpp"

namespace perimal {

// Arc indices refer to the maximal over-strands between undercrossings,
// numbered along the traversal; arc 0 contains the traversal basepoint.
struct Crossing {
    int under_in = -1;   // arc arriving at the undercrossing
    int under_out = -1;  // arc leaving it
    int over = -1;       // arc passing over
    int sign = 0;        // +1 right-handed, -1 left-handed
};

struct Diagram {
    std::vector<Crossing> crossings;
    int arcs = 0;  // equals crossing count for a knot diagram
    // Knot traversal: visits[t] = (crossing index, passes over?), 2n entries.
    std::vector<std::pair<int, bool>> visits;
};

int writhe(const Diagram& d);

// Brute-force planar realization over per-crossing rotation choices; the
// lexicographically first embedding with sphere face count n+2 wins.
Diagram dt_to_diagram(const DTCode& code);

Diagram braid_to_diagram(const BraidWord& b);

// DT code read off from the stored traversal, basepoint at visit 0.
DTCode extract_dt(const Diagram& d);

// Codes for every basepoint and both directions; the set is the relabeling
// class of the diagram's DT code.
std::vector<DTCode> extract_dt_all(const Diagram& d);

} // namespace perimal
