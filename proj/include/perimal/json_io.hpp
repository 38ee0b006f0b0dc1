#pragma once

#include <optional>
#include <string>

#include "perimal/malnormality.hpp"
#include "perimal/presentation.hpp"

namespace perimal {

// JSON documents share an envelope (knot, class, generators, relators, mu,
// lambda) and add per-kind fields: witness documents carry g, p0, p1,
// annulus_slope {m, l} and checks [{name, method, status}]; probe documents
// carry bounds and survivors.  Key order is fixed, so equal inputs serialize
// to identical bytes.

std::string witness_document(const std::string& knot, const PresentedGroup& g,
                             const PeripheralPair& p, const WitnessCertificate& w);

std::string probe_document(const std::string& knot, const StructuralClass& cls,
                           const PresentedGroup& g, const PeripheralPair& p,
                           const ProbeReport& r);

// Decision envelope embedding the certificate or probe document object.  The
// presentation is required exactly when the decision carries one of those.
std::string decision_document(const std::string& knot, const StructuralClass& cls,
                              const Decision& d,
                              const std::optional<Presentation>& pres);

std::string jsj_document(const JsjSummary& j, const Decision& d);

// Parsed witness document, for re-verification of emitted certificates.
struct WitnessDocument {
    std::string knot;
    std::vector<std::string> generators;
    std::vector<Word> relators;
    Word mu, lambda;
    WitnessCertificate witness;
};

WitnessDocument parse_witness_document(const std::string& text);

} // namespace perimal
