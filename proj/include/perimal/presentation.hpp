#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "perimal/diagram.hpp"
#include "perimal/notation.hpp"
#include "perimal/word.hpp"

namespace perimal {

// Structure tags carry exactly the metadata the symbolic engines need to pick
// their algorithms: torus parameters enable normal forms, factor ranges and
// peripheral words enable amalgam reduction.

struct WirtingerMeta {
    friend bool operator==(const WirtingerMeta&, const WirtingerMeta&) = default;
};

// Relator x^p y^-q; mu = x^a y^b with a*q + b*p = 1.
struct TorusMeta {
    i64 p = 0, q = 0, a = 0, b = 0;
    friend bool operator==(const TorusMeta&, const TorusMeta&) = default;
};

struct FactorMeta {
    size_t gen_begin = 0, gen_end = 0;  // [begin, end) into generators
    Word mu, lambda;                     // in the renamed global generators
    std::optional<TorusMeta> torus;      // membership oracle available when set
    friend bool operator==(const FactorMeta&, const FactorMeta&) = default;
};

struct SumMeta {
    std::vector<FactorMeta> factors;
    friend bool operator==(const SumMeta&, const SumMeta&) = default;
};

// Cable-space relators [q,h], [c,h], q^a h^b glued to the companion along
// h = mu_c^b lambda_c^a and c = mu_c^s lambda_c^r with a*s - b*r = 1.  The
// core t = q^-alpha h^beta satisfies t^a = h, where alpha*b + beta*a = 1 with
// minimal alpha > 0; mu is the pattern meridian mu_V^beta lambda_V^-alpha
// t^alpha written in the section coordinates mu_V = c^a h^-r,
// lambda_V = c^-b h^s.
struct CableMeta {
    i64 a = 0, b = 0, s = 0, r = 0, alpha = 0, beta = 0;
    Word t;
    FactorMeta companion;
    friend bool operator==(const CableMeta&, const CableMeta&) = default;
};

using Structure = std::variant<WirtingerMeta, TorusMeta, SumMeta, CableMeta>;

struct PresentedGroup {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    Structure structure;
    std::map<std::string, i64> abelianization;  // generator -> image in H1 = Z

    friend bool operator==(const PresentedGroup&, const PresentedGroup&) = default;
};

struct PeripheralPair {
    Word mu, lambda;
    friend bool operator==(const PeripheralPair&, const PeripheralPair&) = default;
};

using Presentation = std::pair<PresentedGroup, PeripheralPair>;

// Canonical torus meridian exponents: a*q + b*p = 1 with minimal a > 0.
std::pair<i64, i64> torus_mu_exponents(i64 p, i64 q);

Presentation wirtinger(const Diagram& d);
Presentation torus_presentation(i64 p, i64 q);
Presentation sum_presentation(std::vector<Presentation> factors);
Presentation cable_presentation(i64 a, i64 b, Presentation companion);

// Renames every generator with the given prefix, rewriting relators,
// peripheral words, and structure metadata.
Presentation rename_with_prefix(const Presentation& pres, const std::string& prefix);

struct AbelianizationReport {
    std::vector<i64> invariant_factors;
    size_t matrix_rank = 0;
    i64 mu_image = 0;
    i64 lambda_image = 0;
    std::string summary;
};

// Recomputes H1 from the relator matrix; throws H1NotZ unless H1 is infinite
// cyclic with mu mapping to a generator and lambda to 0.
AbelianizationReport abelianization_check(const PresentedGroup& g, const PeripheralPair& p);

// Full pipeline from a knot expression; FromDiagram goes through Wirtinger.
Presentation presentation_of(const KnotExpr& k);

// Text format: `gen:` line, `rel:` lines, `mu:`, `lambda:`, `structure:`.
// Round-trips bit-exactly through parse_presentation.
std::string serialize_presentation(const PresentedGroup& g, const PeripheralPair& p);
Presentation parse_presentation(const std::string& text);

std::string render_structure(const Structure& s);

} // namespace perimal
