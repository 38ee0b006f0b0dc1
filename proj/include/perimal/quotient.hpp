#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "perimal/perm.hpp"
#include "perimal/presentation.hpp"
#include "perimal/word.hpp"

namespace perimal {

// Homomorphism onto a permutation group: every relator maps to the identity.
struct FiniteQuotient {
    int degree = 0;
    std::map<std::string, Perm> images;
    uint64_t source = 0;  // presentation identity hash

    friend bool operator==(const FiniteQuotient&, const FiniteQuotient&) = default;
};

// FNV-1a over the generator and relator text; stable across runs.
uint64_t presentation_hash(const PresentedGroup& g);

Perm quotient_eval(const FiniteQuotient& q, const Word& w);

// Backtracking search over generator images in S_2 .. S_max_degree, pruning
// on fully assigned relators, deduplicated up to simultaneous conjugation.
// Output is deterministic: degrees ascending, images in lexicographic order.
// The seed is recorded for reproducibility bookkeeping; the enumeration
// itself is canonical, so any fixed seed yields the same list.
std::vector<FiniteQuotient> find_quotients(const PresentedGroup& g, int max_degree,
                                           size_t count, uint64_t seed);

// Quotients of a cable presentation, built by lifting companion quotients
// through qbar^a = hbar^-b with qbar centralizing hbar, padded across target
// degrees, plus a trivial-companion layer.  Complete at every degree, so a
// homomorphism absent from the full list does not exist within the degree
// bound.  Dedup and ordering match find_quotients; companion searches are
// cached per presentation for the lifetime of the process.
std::vector<FiniteQuotient> cable_quotients(const PresentedGroup& g, int max_degree,
                                            size_t count);

// Closure of the subgroup generated by the given permutations, as packed
// images (Perm::pack), sorted.  Degree <= MAX_DEGREE keeps this finite.
std::vector<uint64_t> subgroup_closure(const std::vector<Perm>& gens, int degree);

} // namespace perimal
