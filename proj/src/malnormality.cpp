#include "perimal/malnormality.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "perimal/amalgam.hpp"
#include "perimal/cable_nf.hpp"
#include "perimal/error.hpp"
#include "perimal/quotient.hpp"
#include "perimal/torus_nf.hpp"

namespace perimal {

namespace {

// Degree cap for quotient-method witness checks; probe callers tune their
// own cap through ProbeBounds.
constexpr int kVerifyDegreeCap = 7;

// Escalation cap for the g-outside-peripheral certificate on cables.  The
// cable enumeration is exhaustive per degree, so a miss at this cap proves no
// certificate exists within it and the check falls back to the exact
// cable-space membership decision.
constexpr int kCableCertDegreeCap = 8;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// <x,y | x^p = y^q> with a negative parameter is the (|p|,|q|) group after
// inverting the corresponding generator.
Word localize_torus(const TorusMeta& t, const Word& w) {
    i64 sp = t.p < 0 ? -1 : 1;
    i64 sq = t.q < 0 ? -1 : 1;
    Word out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (l.gen != "x" && l.gen != "y")
            fail(errc::unknown_generator, "torus word uses generator '" + l.gen + "'");
        out.push_back({l.gen, l.exp * (l.gen == "x" ? sp : sq)});
    }
    return out;
}

bool torus_trivial(const TorusMeta& t, const Word& w) {
    NormalForm nf = torus_normal_form(std::abs(t.p), std::abs(t.q), localize_torus(t, w));
    return nf.k == 0 && nf.syllables.empty();
}

bool sum_all_torus(const PresentedGroup& g) {
    const auto* s = std::get_if<SumMeta>(&g.structure);
    if (s == nullptr) return false;
    return std::all_of(s->factors.begin(), s->factors.end(),
                       [](const FactorMeta& f) { return f.torus.has_value(); });
}

std::map<std::string, Word> peripheral_dictionary(const PeripheralPair& p) {
    return {{"mu", p.mu}, {"lambda", p.lambda}};
}

void require(std::vector<CheckResult>& out, std::string name, std::string method, bool pass) {
    if (!pass)
        fail(errc::check_failed, name + " failed (method=" + method + ")");
    out.push_back({std::move(name), std::move(method), true});
}

// Witness words may mix peripheral aliases with presentation generators.
Word subst_peripheral(const Word& w, const std::map<std::string, Word>& dict) {
    Word out;
    for (const Letter& l : w) {
        auto it = dict.find(l.gen);
        if (it == dict.end())
            out = wmul(out, Word{l});
        else
            out = wmul(out, wpow(it->second, l.exp));
    }
    return out;
}

} // namespace

Slope canonical_slope(i64 m, i64 l) {
    if (m == 0 && l == 0) fail(errc::internal, "slope (0,0) is not a curve");
    i64 g = gcd_i64(m < 0 ? -m : m, l < 0 ? -l : l);
    m /= g;
    l /= g;
    if (l < 0 || (l == 0 && m < 0)) {
        m = -m;
        l = -l;
    }
    return {m, l};
}

i64 slope_distance(const Slope& s1, const Slope& s2) {
    i64 d = checked_mul(s1.m, s2.l) - checked_mul(s2.m, s1.l);
    return d < 0 ? -d : d;
}

std::string render_class(const StructuralClass& c) {
    return std::visit(
        overloaded{
            [](const TorusClass& t) {
                return "torus(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
            },
            [](const CableClass& cb) {
                return "cable(" + std::to_string(cb.a) + "," + std::to_string(cb.b) + ")";
            },
            [](const CompositeClass& s) { return "composite(" + std::to_string(s.count) + ")"; },
            [](const NoObstructionClass& n) { return "no-obstruction(" + n.evidence + ")"; },
        },
        c);
}

bool is_structural(const StructuralClass& c) {
    return !std::holds_alternative<NoObstructionClass>(c);
}

StructuralClass classify(const KnotExpr& k, const Census* census) {
    return std::visit(
        overloaded{
            [](const TorusKnot& t) -> StructuralClass { return TorusClass{t.p, t.q}; },
            [](const CableKnot& c) -> StructuralClass { return CableClass{c.a, c.b}; },
            [](const SumKnot& s) -> StructuralClass {
                return CompositeClass{static_cast<int>(s.factors.size())};
            },
            [census](const DiagramKnot& d) -> StructuralClass {
                if (d.name && census != nullptr) {
                    const CensusEntry& e = census->lookup(*d.name);
                    switch (e.geometric_type) {
                        case GeometricType::Torus:
                            return TorusClass{e.params->first, e.params->second};
                        case GeometricType::Hyperbolic:
                            return NoObstructionClass{"census: hyperbolic"};
                        case GeometricType::Satellite:
                            return NoObstructionClass{"satellite: cable status unknown"};
                    }
                }
                return NoObstructionClass{"probe pending"};
            },
        },
        k.node());
}

std::optional<Presentation> structural_presentation(const KnotExpr& k, const Census* census) {
    StructuralClass c = classify(k, census);
    if (!is_structural(c)) return std::nullopt;
    if (const auto* t = std::get_if<TorusClass>(&c);
        t != nullptr && std::holds_alternative<DiagramKnot>(k.node()))
        return torus_presentation(t->p, t->q);
    return presentation_of(k);
}

WitnessCertificate synthesize_witness(const KnotExpr& k, const Census* census) {
    StructuralClass c = classify(k, census);
    std::optional<Presentation> pres = structural_presentation(k, census);
    if (!pres)
        fail(errc::not_applicable, "no structural witness: class is " + render_class(c));

    WitnessCertificate w;
    w.cls = c;
    const PresentedGroup& g = pres->first;
    if (const auto* t = std::get_if<TorusMeta>(&g.structure)) {
        i64 pq = checked_mul(t->p, t->q);
        w.g = Word{{"x", 1}};
        w.p0 = reduced(Word{{"lambda", 1}, {"mu", pq}});
        w.annulus_slope = canonical_slope(pq, 1);
    } else if (const auto* s = std::get_if<SumMeta>(&g.structure)) {
        w.g = s->factors.front().lambda;
        w.p0 = Word{{"mu", 1}};
        w.annulus_slope = canonical_slope(1, 0);
    } else if (const auto* cb = std::get_if<CableMeta>(&g.structure)) {
        i64 ab = checked_mul(cb->a, cb->b);
        w.g = Word{{"c", 1}};
        w.p0 = reduced(Word{{"lambda", 1}, {"mu", ab}});
        w.annulus_slope = canonical_slope(ab, 1);
    } else {
        fail(errc::not_applicable, "witness synthesis requires a structural presentation");
    }
    w.p1 = w.p0;
    return w;
}

std::optional<std::pair<i64, i64>> sum_peripheral_membership(const PresentedGroup& g,
                                                             const Word& w) {
    const auto* s = std::get_if<SumMeta>(&g.structure);
    if (s == nullptr)
        fail(errc::unsupported_factor, "peripheral membership needs a sum presentation");
    AmalgamDecomposition d = amalgam_normal_form(g, w);
    if (d.syllables.empty()) return {{d.e, 0}};

    // mu^i lambda^j has exactly (factor count)*|j| syllables: the factor
    // longitudes lie outside <mu> and alternate.
    i64 k = static_cast<i64>(s->factors.size());
    i64 n = static_cast<i64>(d.syllables.size());
    if (n % k != 0) return std::nullopt;

    Word lambda;
    for (const FactorMeta& f : s->factors) lambda = wmul(lambda, f.lambda);
    for (i64 j : {n / k, -n / k}) {
        AmalgamDecomposition t = amalgam_normal_form(g, wmul(w, wpow(lambda, -j)));
        if (t.syllables.empty()) return {{t.e, j}};
    }
    return std::nullopt;
}

std::vector<CheckResult> verify_witness(const PresentedGroup& g, const PeripheralPair& p,
                                        const WitnessCertificate& w, int quotient_budget) {
    std::map<std::string, Word> dict = peripheral_dictionary(p);
    Word gw = subst_peripheral(w.g, dict);
    Word p0 = subst_peripheral(w.p0, dict);
    Word p1 = subst_peripheral(w.p1, dict);
    if (w.p0.empty() || w.p1.empty())
        fail(errc::check_failed, "p0-nontrivial failed (empty peripheral word)");
    Word conj = wmul(wconj(gw, p0), winv(p1));

    std::vector<CheckResult> out;
    if (const auto* t = std::get_if<TorusMeta>(&g.structure)) {
        require(out, "conjugation-identity", "symbolic", torus_trivial(*t, conj));
        require(out, "p0-nontrivial", "symbolic", !torus_trivial(*t, p0));
        auto member = torus_peripheral_membership(std::abs(t->p), std::abs(t->q),
                                                  localize_torus(*t, gw));
        require(out, "g-outside-peripheral", "symbolic", !member.has_value());
        return out;
    }
    if (sum_all_torus(g)) {
        require(out, "conjugation-identity", "symbolic", amalgam_normal_form(g, conj).trivial());
        require(out, "p0-nontrivial", "symbolic", !amalgam_normal_form(g, p0).trivial());
        require(out, "g-outside-peripheral", "symbolic",
                !sum_peripheral_membership(g, gw).has_value());
        return out;
    }

    const auto* cb = std::get_if<CableMeta>(&g.structure);
    if (quotient_budget <= 0)
        fail(errc::check_failed, "conjugation-identity failed (no quotients available)");
    std::vector<FiniteQuotient> qs =
        cb != nullptr ? cable_quotients(g, kVerifyDegreeCap, SIZE_MAX)
                      : find_quotients(g, kVerifyDegreeCap, quotient_budget, 0);
    if (qs.empty())
        fail(errc::check_failed, "conjugation-identity failed (no quotients available)");
    bool unanimous = std::all_of(qs.begin(), qs.end(), [&](const FiniteQuotient& q) {
        return quotient_eval(q, conj).is_identity();
    });
    require(out, "conjugation-identity", "quotient", unanimous);
    i64 phi = 0;
    for (const Letter& l : p0) phi += checked_mul(l.exp, g.abelianization.at(l.gen));
    if (phi != 0) {
        out.push_back({"p0-nontrivial", "symbolic", true});
    } else {
        bool nontrivial = std::any_of(qs.begin(), qs.end(), [&](const FiniteQuotient& q) {
            return !quotient_eval(q, p0).is_identity();
        });
        require(out, "p0-nontrivial", "quotient", nontrivial);
    }
    auto certifies = [&](const FiniteQuotient& q) {
        std::vector<uint64_t> closure =
            subgroup_closure({quotient_eval(q, p.mu), quotient_eval(q, p.lambda)}, q.degree);
        return !std::binary_search(closure.begin(), closure.end(),
                                   quotient_eval(q, gw).pack());
    };
    bool outside = std::any_of(qs.begin(), qs.end(), certifies);
    if (cb != nullptr && !outside) {
        std::vector<FiniteQuotient> deeper = cable_quotients(g, kCableCertDegreeCap, SIZE_MAX);
        outside = std::any_of(deeper.begin() + static_cast<long>(qs.size()), deeper.end(),
                              certifies);
        if (!outside) {
            // No certificate exists within the escalation cap; decide exactly
            // in the cable-space factor, which contains the whole peripheral
            // subgroup.
            bool cable_word = std::all_of(gw.begin(), gw.end(), [](const Letter& l) {
                return l.gen == "q" || l.gen == "c" || l.gen == "h";
            });
            if (!cable_word)
                fail(errc::check_failed,
                     "g-outside-peripheral failed (no quotient certificate within degree " +
                         std::to_string(kCableCertDegreeCap) + ")");
            require(out, "g-outside-peripheral", "symbolic",
                    !cable_peripheral_membership(*cb, gw).has_value());
            return out;
        }
    }
    require(out, "g-outside-peripheral", "quotient", outside);
    return out;
}

namespace {

// Per-quotient tables for the probe: peripheral grid images, a reverse map
// for p1 lookup, and the peripheral subgroup closure.
struct QuotientTables {
    const FiniteQuotient* q = nullptr;
    std::vector<Perm> grid;
    std::unordered_map<uint64_t, std::vector<int>> reverse;
    std::vector<uint64_t> peripheral;
    Perm mu, lambda;
};

int grid_index(i64 i, i64 j, i64 e) {
    return static_cast<int>((i + e) * (2 * e + 1) + (j + e));
}

// Reduced words over the generator alphabet in (length, lex) order; letter
// order is generator index ascending, positive exponent first.
std::vector<Word> candidate_words(const std::vector<std::string>& gens, int max_len) {
    struct Raw {
        std::vector<std::pair<int, int>> letters;
    };
    std::vector<Word> out;
    std::vector<Raw> level;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Raw> next;
        auto extend = [&](const Raw& base) {
            for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi)
                for (int sign : {1, -1}) {
                    if (!base.letters.empty() && base.letters.back().first == gi &&
                        base.letters.back().second == -sign)
                        continue;
                    Raw r = base;
                    r.letters.emplace_back(gi, sign);
                    next.push_back(std::move(r));
                }
        };
        if (len == 1) {
            extend(Raw{});
        } else {
            for (const Raw& base : level) extend(base);
        }
        for (const Raw& r : next) {
            Word w;
            for (auto [gi, sign] : r.letters) w = wmul(w, Word{{gens[gi], sign}});
            out.push_back(std::move(w));
        }
        level = std::move(next);
    }
    return out;
}

} // namespace

ProbeReport probe_malnormality(const PresentedGroup& g, const PeripheralPair& p,
                               const ProbeBounds& bounds,
                               const std::vector<ProbeTriple>& injected) {
    ProbeReport rep;
    rep.bounds = bounds;
    std::vector<FiniteQuotient> qs;
    if (bounds.quotients > 0)
        qs = find_quotients(g, bounds.degree_cap, bounds.quotients, bounds.seed);
    rep.quotients_used = static_cast<int>(qs.size());

    const i64 e = bounds.p_exp;
    std::vector<QuotientTables> tables(qs.size());
    for (size_t qi = 0; qi < qs.size(); ++qi) {
        QuotientTables& t = tables[qi];
        t.q = &qs[qi];
        t.mu = quotient_eval(qs[qi], p.mu);
        t.lambda = quotient_eval(qs[qi], p.lambda);
        t.grid.resize(static_cast<size_t>((2 * e + 1) * (2 * e + 1)));
        for (i64 i = -e; i <= e; ++i)
            for (i64 j = -e; j <= e; ++j) {
                int idx = grid_index(i, j, e);
                t.grid[idx] = t.mu.pow(i) * t.lambda.pow(j);
                if (i != 0 || j != 0) t.reverse[t.grid[idx].pack()].push_back(idx);
            }
        t.peripheral = subgroup_closure({t.mu, t.lambda}, qs[qi].degree);
    }

    auto identity_holds = [](const Perm& img_g, const Perm& img_p0, const Perm& img_p1) {
        return img_g * img_p0 * img_g.inverse() == img_p1;
    };

    auto push_survivor = [&](ProbeTriple triple, bool capped) {
        if (capped && static_cast<int>(rep.survivors.size()) >= bounds.max_survivors) {
            rep.truncated = true;
            return false;
        }
        rep.survivors.push_back(std::move(triple));
        return true;
    };

    // Injected candidates face only the identity filter and are never
    // truncated; their exponents may lie outside the grid.
    for (const ProbeTriple& cand : injected) {
        bool keep = true;
        for (const QuotientTables& t : tables) {
            Perm img_g = quotient_eval(*t.q, cand.g);
            Perm img_p0 = t.mu.pow(cand.p0.first) * t.lambda.pow(cand.p0.second);
            Perm img_p1 = t.mu.pow(cand.p1.first) * t.lambda.pow(cand.p1.second);
            if (!identity_holds(img_g, img_p0, img_p1)) {
                keep = false;
                break;
            }
        }
        if (keep) push_survivor(cand, false);
    }

    std::vector<Word> candidates = candidate_words(g.generators, bounds.g_length);
    auto already_injected = [&](const ProbeTriple& t) {
        return std::find(injected.begin(), injected.end(), t) != injected.end();
    };

    if (tables.empty()) {
        // No refutation power: every candidate survives, up to the cap.
        for (const Word& gw : candidates)
            for (i64 i = -e; i <= e; ++i)
                for (i64 j = -e; j <= e; ++j) {
                    if (i == 0 && j == 0) continue;
                    for (i64 i2 = -e; i2 <= e; ++i2)
                        for (i64 j2 = -e; j2 <= e; ++j2) {
                            if (i2 == 0 && j2 == 0) continue;
                            ProbeTriple t{gw, {i, j}, {i2, j2}};
                            if (already_injected(t)) continue;
                            if (!push_survivor(std::move(t), true)) return rep;
                        }
                }
        return rep;
    }

    for (const Word& gw : candidates) {
        std::vector<Perm> imgs(tables.size());
        for (size_t qi = 0; qi < tables.size(); ++qi)
            imgs[qi] = quotient_eval(qs[qi], gw);

        bool certified_outside = false;
        for (size_t qi = 0; qi < tables.size() && !certified_outside; ++qi)
            certified_outside = !std::binary_search(tables[qi].peripheral.begin(),
                                                    tables[qi].peripheral.end(),
                                                    imgs[qi].pack());
        if (!certified_outside) continue;

        const QuotientTables& t0 = tables.front();
        for (i64 i = -e; i <= e; ++i)
            for (i64 j = -e; j <= e; ++j) {
                if (i == 0 && j == 0) continue;
                int p0_idx = grid_index(i, j, e);
                Perm c0 = imgs[0] * t0.grid[p0_idx] * imgs[0].inverse();
                auto hit = t0.reverse.find(c0.pack());
                if (hit == t0.reverse.end()) continue;
                for (int p1_idx : hit->second) {
                    bool ok = true;
                    for (size_t qi = 1; qi < tables.size() && ok; ++qi)
                        ok = identity_holds(imgs[qi], tables[qi].grid[p0_idx],
                                            tables[qi].grid[p1_idx]);
                    if (!ok) continue;
                    i64 span = 2 * e + 1;
                    ProbeTriple triple{gw,
                                       {i, j},
                                       {p1_idx / span - e, p1_idx % span - e}};
                    if (already_injected(triple)) continue;
                    if (!push_survivor(std::move(triple), true)) return rep;
                }
            }
    }
    return rep;
}

std::string render_verdict(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::NoWithWitness: return "no-with-witness";
        case Verdict::EvidenceOnly: return "evidence-only";
    }
    fail(errc::internal, "unreachable verdict");
}

Decision decide_malnormality(const KnotExpr& k, const Census* census,
                             const ProbeBounds& bounds) {
    StructuralClass c = classify(k, census);
    if (is_structural(c)) {
        std::optional<Presentation> pres = structural_presentation(k, census);
        WitnessCertificate w = synthesize_witness(k, census);
        w.checks = verify_witness(pres->first, pres->second, w, bounds.quotients);
        Decision d;
        d.malnormal = Verdict::NoWithWitness;
        d.rationale = render_class(c) +
                      ": essential annulus at slope (" + std::to_string(w.annulus_slope.m) +
                      "," + std::to_string(w.annulus_slope.l) +
                      "); peripheral subgroup is not malnormal, witness verified";
        d.certificate = std::move(w);
        return d;
    }

    const auto& no = std::get<NoObstructionClass>(c);
    if (no.evidence == "census: hyperbolic") {
        Decision d;
        d.malnormal = Verdict::Yes;
        d.rationale =
            "census-certified hyperbolic: neither composite, torus, nor cable, "
            "so the peripheral subgroup is malnormal";
        return d;
    }

    Presentation pres = presentation_of(k);
    ProbeReport rep = probe_malnormality(pres.first, pres.second, bounds);
    Decision d;
    d.malnormal = Verdict::EvidenceOnly;
    d.rationale = no.evidence + "; " +
                  (rep.survivors.empty()
                       ? "probe found no witness pattern within bounds (evidence, not proof)"
                       : "probe retained candidate witness patterns for inspection");
    d.probe = std::move(rep);
    return d;
}

Decision decide_peripheral_malnormality_jsj(const JsjSummary& j) {
    if (j.solid_torus || j.thickened_torus)
        fail(errc::excluded_manifold,
             "solid or thickened torus: peripheral subgroup is the whole group "
             "and trivially malnormal");
    Decision d;
    if (j.boundary_piece_is_seifert) {
        d.malnormal = Verdict::No;
        d.rationale = "boundary JSJ piece is Seifert fibered" +
                      (j.piece_description.empty() ? std::string()
                                                   : " (" + j.piece_description + ")");
    } else {
        d.malnormal = Verdict::Yes;
        d.rationale = "boundary JSJ piece is not Seifert fibered" +
                      (j.piece_description.empty() ? std::string()
                                                   : " (" + j.piece_description + ")");
    }
    return d;
}

} // namespace perimal
