#include "perimal/json_io.hpp"

#include <json.hpp>

#include "perimal/error.hpp"
#include "perimal/word.hpp"

namespace perimal {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json words_array(const std::vector<Word>& ws) {
    ordered_json arr = ordered_json::array();
    for (const Word& w : ws) arr.push_back(render_word(w));
    return arr;
}

ordered_json envelope(const std::string& knot, const std::string& cls,
                      const PresentedGroup& g, const PeripheralPair& p) {
    ordered_json doc;
    doc["knot"] = knot;
    doc["class"] = cls;
    doc["generators"] = g.generators;
    doc["relators"] = words_array(g.relators);
    doc["mu"] = render_word(p.mu);
    doc["lambda"] = render_word(p.lambda);
    return doc;
}

ordered_json witness_object(const std::string& knot, const PresentedGroup& g,
                            const PeripheralPair& p, const WitnessCertificate& w) {
    ordered_json doc = envelope(knot, render_class(w.cls), g, p);
    doc["g"] = render_word(w.g);
    doc["p0"] = render_word(w.p0);
    doc["p1"] = render_word(w.p1);
    doc["annulus_slope"] = {{"m", w.annulus_slope.m}, {"l", w.annulus_slope.l}};
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : w.checks)
        checks.push_back({{"name", c.name}, {"method", c.method},
                          {"status", c.pass ? "pass" : "fail"}});
    doc["checks"] = std::move(checks);
    return doc;
}

ordered_json exponent_pair(const std::pair<i64, i64>& e) {
    return {{"mu", e.first}, {"lambda", e.second}};
}

ordered_json probe_object(const std::string& knot, const StructuralClass& cls,
                          const PresentedGroup& g, const PeripheralPair& p,
                          const ProbeReport& r) {
    ordered_json doc = envelope(knot, render_class(cls), g, p);
    doc["bounds"] = {{"g_length", r.bounds.g_length},
                     {"p_exp", r.bounds.p_exp},
                     {"quotients", r.bounds.quotients},
                     {"degree_cap", r.bounds.degree_cap},
                     {"seed", r.bounds.seed},
                     {"max_survivors", r.bounds.max_survivors}};
    doc["quotients_used"] = r.quotients_used;
    doc["no_refutation_power"] = r.quotients_used == 0;
    doc["truncated"] = r.truncated;
    ordered_json survivors = ordered_json::array();
    for (const ProbeTriple& t : r.survivors)
        survivors.push_back({{"g", render_word(t.g)},
                             {"p0", exponent_pair(t.p0)},
                             {"p1", exponent_pair(t.p1)}});
    doc["survivors"] = std::move(survivors);
    return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

const ordered_json& field(const ordered_json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        fail(errc::parse_error, std::string("witness document lacks field '") + name + "'");
    return *it;
}

StructuralClass parse_class(const std::string& text) {
    auto params = [&](size_t at) {
        std::string inner = text.substr(at + 1, text.size() - at - 2);
        size_t comma = inner.find(',');
        if (comma == std::string::npos)
            fail(errc::parse_error, "malformed class parameters: " + text);
        return std::pair<i64, i64>{std::stoll(inner.substr(0, comma)),
                                   std::stoll(inner.substr(comma + 1))};
    };
    if (text.rfind("torus(", 0) == 0 && text.back() == ')') {
        auto [p, q] = params(5);
        return TorusClass{p, q};
    }
    if (text.rfind("cable(", 0) == 0 && text.back() == ')') {
        auto [a, b] = params(5);
        return CableClass{a, b};
    }
    if (text.rfind("composite(", 0) == 0 && text.back() == ')')
        return CompositeClass{std::stoi(text.substr(10, text.size() - 11))};
    if (text.rfind("no-obstruction(", 0) == 0 && text.back() == ')')
        return NoObstructionClass{text.substr(15, text.size() - 16)};
    fail(errc::parse_error, "unknown class: " + text);
}

} // namespace

std::string witness_document(const std::string& knot, const PresentedGroup& g,
                             const PeripheralPair& p, const WitnessCertificate& w) {
    return dump(witness_object(knot, g, p, w));
}

std::string probe_document(const std::string& knot, const StructuralClass& cls,
                           const PresentedGroup& g, const PeripheralPair& p,
                           const ProbeReport& r) {
    return dump(probe_object(knot, cls, g, p, r));
}

std::string decision_document(const std::string& knot, const StructuralClass& cls,
                              const Decision& d,
                              const std::optional<Presentation>& pres) {
    ordered_json doc;
    doc["knot"] = knot;
    doc["class"] = render_class(cls);
    doc["malnormal"] = render_verdict(d.malnormal);
    doc["rationale"] = d.rationale;
    if (d.certificate) {
        if (!pres)
            fail(errc::internal, "decision certificate needs its presentation");
        doc["certificate"] =
            witness_object(knot, pres->first, pres->second, *d.certificate);
    }
    if (d.probe) {
        if (!pres)
            fail(errc::internal, "decision probe needs its presentation");
        doc["probe"] = probe_object(knot, cls, pres->first, pres->second, *d.probe);
    }
    return dump(doc);
}

std::string jsj_document(const JsjSummary& j, const Decision& d) {
    ordered_json doc;
    doc["boundary_piece_is_seifert"] = j.boundary_piece_is_seifert;
    doc["piece_description"] = j.piece_description;
    doc["solid_torus"] = j.solid_torus;
    doc["thickened_torus"] = j.thickened_torus;
    doc["malnormal"] = render_verdict(d.malnormal);
    doc["rationale"] = d.rationale;
    return dump(doc);
}

WitnessDocument parse_witness_document(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("witness document is not JSON: ") + e.what());
    }
    WitnessDocument out;
    out.knot = field(doc, "knot").get<std::string>();
    for (const auto& gen : field(doc, "generators"))
        out.generators.push_back(gen.get<std::string>());
    for (const auto& r : field(doc, "relators"))
        out.relators.push_back(parse_word(r.get<std::string>()));
    out.mu = parse_word(field(doc, "mu").get<std::string>());
    out.lambda = parse_word(field(doc, "lambda").get<std::string>());
    out.witness.cls = parse_class(field(doc, "class").get<std::string>());
    out.witness.g = parse_word(field(doc, "g").get<std::string>());
    out.witness.p0 = parse_word(field(doc, "p0").get<std::string>());
    out.witness.p1 = parse_word(field(doc, "p1").get<std::string>());
    const ordered_json& slope = field(doc, "annulus_slope");
    out.witness.annulus_slope = {field(slope, "m").get<i64>(), field(slope, "l").get<i64>()};
    for (const auto& c : field(doc, "checks"))
        out.witness.checks.push_back({field(c, "name").get<std::string>(),
                                      field(c, "method").get<std::string>(),
                                      field(c, "status").get<std::string>() == "pass"});
    return out;
}

} // namespace perimal
