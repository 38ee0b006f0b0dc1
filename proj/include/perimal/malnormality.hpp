#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "perimal/census.hpp"
#include "perimal/intmath.hpp"
#include "perimal/notation.hpp"
#include "perimal/presentation.hpp"

namespace perimal {

// Isotopy class of an essential simple closed curve on the peripheral torus,
// written in the (meridian, longitude) basis.  Canonical form: gcd(|m|,|l|)=1
// and l > 0, or l = 0 and m > 0.
struct Slope {
    i64 m = 0;
    i64 l = 0;

    friend bool operator==(const Slope&, const Slope&) = default;
};

Slope canonical_slope(i64 m, i64 l);

// Geometric intersection number |m1*l2 - m2*l1|; zero exactly on equal
// canonical slopes, one exactly on basis pairs.
i64 slope_distance(const Slope& s1, const Slope& s2);

struct TorusClass {
    i64 p, q;
};
struct CableClass {
    i64 a, b;
};
struct CompositeClass {
    int count;
};
struct NoObstructionClass {
    std::string evidence;
};
using StructuralClass =
    std::variant<TorusClass, CableClass, CompositeClass, NoObstructionClass>;

std::string render_class(const StructuralClass& c);

// True for the three classes that carry an essential annulus.
bool is_structural(const StructuralClass& c);

// Structural trichotomy: sums are composite, torus and cable expressions name
// themselves, and diagram inputs fall back on the census geometric type.
StructuralClass classify(const KnotExpr& k, const Census* census = nullptr);

struct CheckResult {
    std::string name;    // conjugation-identity | p0-nontrivial | g-outside-peripheral
    std::string method;  // symbolic | quotient
    bool pass = false;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Witness against malnormality: g p0 g^-1 = p1 with p0, p1 in P \ {1} and
// g outside P.  p0 and p1 are words over the literal generators mu and
// lambda; g is a word over the presentation's own generators.
struct WitnessCertificate {
    Word g;
    Word p0;
    Word p1;
    StructuralClass cls;
    Slope annulus_slope;
    std::vector<CheckResult> checks;
};

struct ProbeBounds {
    int g_length = 6;
    int p_exp = 6;
    int quotients = 50;
    int degree_cap = 7;
    uint64_t seed = 0;
    int max_survivors = 200;
};

// Candidate triple: p0 = mu^i lambda^j and p1 = mu^i' lambda^j' as exponent
// pairs, g as a word over the presentation's generators.
struct ProbeTriple {
    Word g;
    std::pair<i64, i64> p0;
    std::pair<i64, i64> p1;

    friend bool operator==(const ProbeTriple&, const ProbeTriple&) = default;
};

struct ProbeReport {
    ProbeBounds bounds;
    std::vector<ProbeTriple> survivors;
    int quotients_used = 0;
    bool truncated = false;
};

enum class Verdict { Yes, No, NoWithWitness, EvidenceOnly };

std::string render_verdict(Verdict v);

struct Decision {
    Verdict malnormal = Verdict::EvidenceOnly;
    std::string rationale;
    std::optional<WitnessCertificate> certificate;
    std::optional<ProbeReport> probe;
};

// Declared JSJ data for the boundary piece of a compact orientable
// irreducible manifold with incompressible torus boundary.  The exclusion
// flags mark the two manifolds the boundary-piece criterion does not cover.
struct JsjSummary {
    bool boundary_piece_is_seifert = false;
    std::string piece_description;
    bool solid_torus = false;
    bool thickened_torus = false;
};

// The canonical presentation a structural witness certifies against; nullopt
// when the class is NoObstruction.  Census-typed torus knots get the
// two-generator torus presentation, not their Wirtinger one.
std::optional<Presentation> structural_presentation(const KnotExpr& k,
                                                    const Census* census = nullptr);

// Per class: Torus(p,q) g=x, p0=p1=lambda mu^{pq}, slope (pq,1);
// Composite g=first factor's longitude, p0=p1=mu, slope (1,0);
// Cable(a,b) g=c, p0=p1=lambda mu^{ab}, slope (ab,1).
// NotApplicable when the class is NoObstruction.
WitnessCertificate synthesize_witness(const KnotExpr& k, const Census* census = nullptr);

// Runs the three checks and returns them all passing, or raises
// CheckFailed naming the first check that does not hold.  Torus and
// sum-of-torus structures are checked symbolically; anything else by
// quotient unanimity plus a one-quotient subgroup certificate for g, using
// at most quotient_budget quotients.
std::vector<CheckResult> verify_witness(const PresentedGroup& g, const PeripheralPair& p,
                                        const WitnessCertificate& w, int quotient_budget = 50);

// Bounded search for witness patterns.  Enumerates g by (length, lex) and
// p0, p1 over the exponent grid; discards g whose image lies in the
// peripheral image of every quotient, then discards triples whose
// conjugation identity fails in some quotient.  Injected triples join the
// stream ahead of enumeration and face only the identity filter.  With a
// zero quotient budget nothing is filtered and the report is flagged.
ProbeReport probe_malnormality(const PresentedGroup& g, const PeripheralPair& p,
                               const ProbeBounds& bounds,
                               const std::vector<ProbeTriple>& injected = {});

// Trichotomy decision: structural classes get a verified witness, census
// hyperbolic knots a yes, everything else probe evidence.
Decision decide_malnormality(const KnotExpr& k, const Census* census = nullptr,
                             const ProbeBounds& bounds = {});

// Boundary-piece criterion: not malnormal exactly when the piece carrying
// the boundary torus is Seifert fibered.  ExcludedManifold for the solid
// and thickened torus.
Decision decide_peripheral_malnormality_jsj(const JsjSummary& j);

// Exact membership in P = <mu, lambda> for sums of torus knots: returns
// (i, j) with w = mu^i lambda^j, or nullopt.
std::optional<std::pair<i64, i64>> sum_peripheral_membership(const PresentedGroup& g,
                                                             const Word& w);

} // namespace perimal
