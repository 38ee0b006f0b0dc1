#include "perimal/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "perimal/error.hpp"
#include "perimal/snf.hpp"

namespace perimal {

namespace {

std::map<std::string, size_t> index_of(const std::vector<std::string>& gens) {
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!idx.emplace(gens[i], i).second)
            fail(errc::parse_error, "duplicate generator " + gens[i]);
    }
    return idx;
}

std::vector<i64> exponent_vector(const Word& w, const std::map<std::string, size_t>& idx) {
    std::vector<i64> v(idx.size(), 0);
    for (const auto& l : w) {
        auto it = idx.find(l.gen);
        if (it == idx.end())
            fail(errc::unknown_generator, "word uses generator " + l.gen + " outside the presentation");
        v[it->second] = checked_add(v[it->second], l.exp);
    }
    return v;
}

i64 eval_functional(const std::vector<i64>& phi, const Word& w,
                    const std::map<std::string, size_t>& idx) {
    i64 total = 0;
    for (const auto& l : w) {
        auto it = idx.find(l.gen);
        if (it == idx.end())
            fail(errc::unknown_generator, "word uses generator " + l.gen + " outside the presentation");
        total = checked_add(total, checked_mul(phi[it->second], l.exp));
    }
    return total;
}

// Primitive integer functional spanning the right kernel of the relator
// matrix, sign arbitrary.  Throws H1NotZ unless H1 is infinite cyclic.
std::vector<i64> kernel_functional(const std::vector<std::string>& gens,
                                   const std::vector<Word>& relators,
                                   AbelianizationReport* report = nullptr) {
    auto idx = index_of(gens);
    const size_t n = gens.size();
    IntMatrix m;
    for (const auto& r : relators) m.push_back(exponent_vector(r, idx));
    if (m.empty()) m.push_back(std::vector<i64>(n, 0));
    auto snf = smith_normal_form(m);
    for (i64 f : snf.invariant_factors)
        if (f != 1)
            fail(errc::h1_not_z,
                 "abelianization has torsion, invariant factor " + std::to_string(f));
    if (snf.rank + 1 != n)
        fail(errc::h1_not_z, "abelianization has rank " + std::to_string(n - snf.rank) +
                                 ", expected rank 1");
    std::vector<i64> phi(n);
    for (size_t i = 0; i < n; ++i) phi[i] = snf.v[i][snf.rank];
    i64 g = 0;
    for (i64 x : phi) g = gcd_i64(g, x < 0 ? -x : x);
    if (g == 0) fail(errc::h1_not_z, "relator matrix has full rank");
    if (g > 1)
        for (i64& x : phi) x /= g;
    if (report) {
        report->invariant_factors = snf.invariant_factors;
        report->matrix_rank = snf.rank;
    }
    return phi;
}

// Computes the abelianization map, sign-fixed so mu maps to +1, and checks
// lambda maps to 0.  Called by every constructor and by parse_presentation.
void attach_abelianization(PresentedGroup& g, const PeripheralPair& p,
                           AbelianizationReport* report = nullptr) {
    auto phi = kernel_functional(g.generators, g.relators, report);
    auto idx = index_of(g.generators);
    i64 mu_image = eval_functional(phi, p.mu, idx);
    if (mu_image != 1 && mu_image != -1)
        fail(errc::h1_not_z, "meridian maps to " + std::to_string(mu_image) +
                                 " in H1, expected a generator");
    if (mu_image == -1)
        for (i64& x : phi) x = -x;
    i64 lambda_image = eval_functional(phi, p.lambda, idx);
    if (lambda_image != 0)
        fail(errc::h1_not_z, "longitude maps to " + std::to_string(lambda_image) +
                                 " in H1, expected 0");
    g.abelianization.clear();
    for (size_t i = 0; i < g.generators.size(); ++i)
        g.abelianization[g.generators[i]] = phi[i];
    if (report) {
        report->mu_image = 1;
        report->lambda_image = 0;
    }
}

// Factor ranges inside nested structure tags are indices into the factor's
// own generator list; shift them when embedding into a larger presentation.
void shift_structure(Structure& s, size_t off) {
    if (auto* sm = std::get_if<SumMeta>(&s)) {
        for (auto& f : sm->factors) {
            f.gen_begin += off;
            f.gen_end += off;
        }
    } else if (auto* cm = std::get_if<CableMeta>(&s)) {
        cm->companion.gen_begin += off;
        cm->companion.gen_end += off;
    }
}

Word commutator(const std::string& x, const std::string& y) {
    return Word{{x, 1}, {y, 1}, {x, -1}, {y, -1}};
}

} // namespace

std::pair<i64, i64> torus_mu_exponents(i64 p, i64 q) {
    const i64 ap = p < 0 ? -p : p;
    if (ap < 2) fail(errc::internal, "torus_mu_exponents needs |p| >= 2");
    const i64 qm = ((q % ap) + ap) % ap;
    if (gcd_i64(qm, ap) != 1) fail(errc::internal, "torus_mu_exponents needs coprime p, q");
    const i64 a = mod_inverse(qm, ap);
    const i64 b = (1 - checked_mul(a, q)) / p;
    if (checked_add(checked_mul(a, q), checked_mul(b, p)) != 1)
        fail(errc::internal, "torus_mu_exponents arithmetic broke");
    return {a, b};
}

Presentation wirtinger(const Diagram& d) {
    const size_t n = d.crossings.size();
    if (n < 2) fail(errc::trivial_knot_rejected, "diagram has fewer than 2 crossings");
    PresentedGroup g;
    g.generators.reserve(n);
    for (size_t i = 0; i < n; ++i) g.generators.push_back("x" + std::to_string(i + 1));
    auto arc_gen = [&](int arc) -> const std::string& { return g.generators[arc]; };

    // One relator per crossing, x_out = x_over^e x_in x_over^-e; the last is
    // a consequence of the others and is dropped.
    for (size_t c = 0; c + 1 < n; ++c) {
        const Crossing& cr = d.crossings[c];
        const i64 e = cr.sign;
        g.relators.push_back(reduced(Word{{arc_gen(cr.over), e},
                                          {arc_gen(cr.under_in), 1},
                                          {arc_gen(cr.over), -e},
                                          {arc_gen(cr.under_out), -1}}));
    }

    PeripheralPair p;
    p.mu = Word{{g.generators[0], 1}};
    Word lam;
    for (const auto& [ci, over] : d.visits) {
        if (over) continue;
        const Crossing& cr = d.crossings[ci];
        lam.push_back({arc_gen(cr.over), cr.sign});
    }
    p.lambda = wmul(reduced(std::move(lam)), wpow(p.mu, -writhe(d)));

    g.structure = WirtingerMeta{};
    attach_abelianization(g, p);
    return {std::move(g), std::move(p)};
}

Presentation torus_presentation(i64 p, i64 q) {
    const i64 ap = p < 0 ? -p : p, aq = q < 0 ? -q : q;
    if (gcd_i64(ap, aq) != 1)
        fail(errc::gcd_violation, "torus parameters must be coprime");
    if (ap < 2 || aq < 2)
        fail(errc::trivial_knot_rejected, "torus(p,q) with |p| or |q| < 2 is the unknot");

    PresentedGroup g;
    g.generators = {"x", "y"};
    g.relators.push_back(Word{{"x", p}, {"y", -q}});

    auto [a, b] = torus_mu_exponents(p, q);
    PeripheralPair pp;
    pp.mu = reduced(Word{{"x", a}, {"y", b}});
    pp.lambda = wmul(Word{{"x", p}}, wpow(pp.mu, -checked_mul(p, q)));

    g.structure = TorusMeta{p, q, a, b};
    attach_abelianization(g, pp);
    return {std::move(g), std::move(pp)};
}

Presentation rename_with_prefix(const Presentation& pres, const std::string& prefix) {
    const auto& [g, p] = pres;
    std::map<std::string, Word> dict;
    PresentedGroup out;
    out.generators.reserve(g.generators.size());
    for (const auto& name : g.generators) {
        out.generators.push_back(prefix + name);
        dict[name] = Word{{prefix + name, 1}};
    }
    for (const auto& r : g.relators) out.relators.push_back(wsubst(r, dict));
    PeripheralPair pp{wsubst(p.mu, dict), wsubst(p.lambda, dict)};
    out.structure = g.structure;
    if (auto* sm = std::get_if<SumMeta>(&out.structure)) {
        for (auto& f : sm->factors) {
            f.mu = wsubst(f.mu, dict);
            f.lambda = wsubst(f.lambda, dict);
        }
    } else if (auto* cm = std::get_if<CableMeta>(&out.structure)) {
        cm->companion.mu = wsubst(cm->companion.mu, dict);
        cm->companion.lambda = wsubst(cm->companion.lambda, dict);
    }
    for (const auto& [name, image] : g.abelianization) out.abelianization[prefix + name] = image;
    return {std::move(out), std::move(pp)};
}

Presentation sum_presentation(std::vector<Presentation> factors) {
    if (factors.size() < 2)
        fail(errc::trivial_knot_rejected, "connected sum needs at least 2 factors");

    PresentedGroup g;
    SumMeta meta;
    std::vector<Word> factor_mus;
    Word lambda_acc;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (std::holds_alternative<SumMeta>(factors[i].first.structure))
            fail(errc::unsupported_factor,
                 "nested sum factors are not flattened; list every prime summand in one sum");
        auto rf = rename_with_prefix(factors[i], "f" + std::to_string(i) + "_");
        const size_t off = g.generators.size();
        shift_structure(rf.first.structure, off);

        FactorMeta fm;
        fm.gen_begin = off;
        fm.gen_end = off + rf.first.generators.size();
        fm.mu = rf.second.mu;
        fm.lambda = rf.second.lambda;
        if (auto* tm = std::get_if<TorusMeta>(&rf.first.structure)) fm.torus = *tm;
        meta.factors.push_back(std::move(fm));

        for (auto& name : rf.first.generators) g.generators.push_back(std::move(name));
        for (auto& r : rf.first.relators) g.relators.push_back(std::move(r));
        factor_mus.push_back(meta.factors.back().mu);
        lambda_acc = wmul(lambda_acc, meta.factors.back().lambda);
    }
    for (size_t i = 1; i < factor_mus.size(); ++i)
        g.relators.push_back(wmul(factor_mus[0], winv(factor_mus[i])));

    PeripheralPair pp{factor_mus[0], std::move(lambda_acc)};
    g.structure = std::move(meta);
    attach_abelianization(g, pp);
    return {std::move(g), std::move(pp)};
}

Presentation cable_presentation(i64 a, i64 b, Presentation companion) {
    const i64 aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    if (gcd_i64(aa, ab) != 1)
        fail(errc::gcd_violation, "cable parameters must be coprime");
    if (aa < 2)
        fail(errc::trivial_knot_rejected,
             "cable(a,b) with |a| < 2 is isotopic to its companion");
    // The (a,b) and (-a,-b) cables are the same curve with reversed
    // orientation; canonicalize to longitudinal winding a >= 2.
    if (a < 0) {
        a = -a;
        b = -b;
    }

    auto rc = rename_with_prefix(companion, "f0_");

    // Companion generators first: quotient search enumerates in generator
    // order, and the gluing relators then force c and h from the companion
    // images instead of branching over them.
    PresentedGroup g;
    FactorMeta comp;
    comp.gen_begin = 0;
    comp.gen_end = rc.first.generators.size();
    comp.mu = rc.second.mu;
    comp.lambda = rc.second.lambda;
    if (auto* tm = std::get_if<TorusMeta>(&rc.first.structure)) comp.torus = *tm;
    for (auto& name : rc.first.generators) g.generators.push_back(std::move(name));
    g.generators.push_back("q");
    g.generators.push_back("c");
    g.generators.push_back("h");

    // a*s - b*r = 1 with minimal s > 0: the companion-boundary section slope.
    i64 s, r;
    if (ab >= 2) {
        s = mod_inverse(((a % ab) + ab) % ab, ab);
        r = (checked_mul(a, s) - 1) / b;
    } else {
        s = 1;
        r = (a - 1) / b;
    }
    // alpha*b + beta*a = 1 with minimal alpha > 0: meridian coefficients.
    const i64 alpha = mod_inverse(((b % a) + a) % a, a);
    const i64 beta = (1 - checked_mul(alpha, b)) / a;

    g.relators.push_back(commutator("q", "h"));
    g.relators.push_back(commutator("c", "h"));
    g.relators.push_back(Word{{"q", a}, {"h", b}});
    for (auto& rel : rc.first.relators) g.relators.push_back(std::move(rel));
    const Word h_slope = wmul(wpow(comp.mu, b), wpow(comp.lambda, a));
    const Word c_slope = wmul(wpow(comp.mu, s), wpow(comp.lambda, r));
    g.relators.push_back(wmul(Word{{"h", 1}}, winv(h_slope)));
    g.relators.push_back(wmul(Word{{"c", 1}}, winv(c_slope)));

    // Meridian c q^(-alpha^2) h^(alpha*beta - r*beta - s*alpha): the pattern
    // meridian mu_V^beta lambda_V^-alpha z^alpha pushed through the section
    // coordinates mu_V = c^a h^-r, lambda_V = c^-b h^s and the core
    // z = q^-alpha h^beta (which satisfies z^a = h by the q^a h^b relator).
    const i64 hexp = checked_mul(alpha, beta) - checked_mul(r, beta) - checked_mul(s, alpha);
    PeripheralPair pp;
    pp.mu = reduced(Word{{"c", 1}, {"q", -checked_mul(alpha, alpha)}, {"h", hexp}});
    pp.lambda = wmul(Word{{"h", 1}}, wpow(pp.mu, -checked_mul(a, b)));

    g.structure = CableMeta{a, b, s, r, alpha, beta,
                            reduced(Word{{"q", -alpha}, {"h", beta}}), std::move(comp)};
    attach_abelianization(g, pp);
    return {std::move(g), std::move(pp)};
}

AbelianizationReport abelianization_check(const PresentedGroup& g, const PeripheralPair& p) {
    AbelianizationReport report;
    PresentedGroup scratch = g;
    attach_abelianization(scratch, p, &report);
    if (scratch.abelianization != g.abelianization)
        fail(errc::cross_check_failed,
             "stored abelianization disagrees with the recomputed one");
    auto idx = index_of(g.generators);
    std::vector<i64> phi(g.generators.size());
    for (size_t i = 0; i < g.generators.size(); ++i)
        phi[i] = g.abelianization.at(g.generators[i]);
    for (const auto& rel : g.relators)
        if (eval_functional(phi, rel, idx) != 0)
            fail(errc::h1_not_z, "a relator does not abelianize to 0");
    std::ostringstream os;
    os << "H1 = Z (rank " << report.matrix_rank << " relator matrix over "
       << g.generators.size() << " generators); mu -> 1, lambda -> 0";
    report.summary = os.str();
    return report;
}

Presentation presentation_of(const KnotExpr& k) {
    return std::visit(
        [](const auto& node) -> Presentation {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TorusKnot>) {
                return torus_presentation(node.p, node.q);
            } else if constexpr (std::is_same_v<T, CableKnot>) {
                return cable_presentation(node.a, node.b, presentation_of(*node.companion));
            } else if constexpr (std::is_same_v<T, SumKnot>) {
                std::vector<Presentation> parts;
                parts.reserve(node.factors.size());
                for (const auto& f : node.factors) parts.push_back(presentation_of(*f));
                return sum_presentation(std::move(parts));
            } else {
                static_assert(std::is_same_v<T, DiagramKnot>);
                Diagram d = std::holds_alternative<DTCode>(node.source)
                                ? dt_to_diagram(std::get<DTCode>(node.source))
                                : braid_to_diagram(std::get<BraidWord>(node.source));
                return wirtinger(d);
            }
        },
        k.node());
}

namespace {

void render_factor(std::ostringstream& os, const FactorMeta& f) {
    os << "[gens=" << f.gen_begin << ".." << f.gen_end << " mu={" << render_word(f.mu)
       << "} lambda={" << render_word(f.lambda) << "} torus=";
    if (f.torus)
        os << f.torus->p << "," << f.torus->q << "," << f.torus->a << "," << f.torus->b;
    else
        os << "none";
    os << "]";
}

} // namespace

std::string render_structure(const Structure& s) {
    std::ostringstream os;
    if (std::holds_alternative<WirtingerMeta>(s)) {
        os << "wirtinger";
    } else if (const auto* tm = std::get_if<TorusMeta>(&s)) {
        os << "torus-amalgam p=" << tm->p << " q=" << tm->q << " a=" << tm->a
           << " b=" << tm->b;
    } else if (const auto* sm = std::get_if<SumMeta>(&s)) {
        os << "sum-amalgam";
        for (const auto& f : sm->factors) {
            os << " ";
            render_factor(os, f);
        }
    } else {
        const auto& cm = std::get<CableMeta>(s);
        os << "cable-graph a=" << cm.a << " b=" << cm.b << " s=" << cm.s << " r=" << cm.r
           << " alpha=" << cm.alpha << " beta=" << cm.beta << " core={" << render_word(cm.t)
           << "} companion=";
        render_factor(os, cm.companion);
    }
    return os.str();
}

std::string serialize_presentation(const PresentedGroup& g, const PeripheralPair& p) {
    std::ostringstream os;
    os << "gen:";
    for (const auto& name : g.generators) os << " " << name;
    os << "\n";
    for (const auto& r : g.relators) os << "rel: " << render_word(r) << "\n";
    os << "mu: " << render_word(p.mu) << "\n";
    os << "lambda: " << render_word(p.lambda) << "\n";
    os << "structure: " << render_structure(g.structure) << "\n";
    return os.str();
}

namespace {

// Cursor-based scanner for the structure tag grammar.
class StructScanner {
public:
    StructScanner(const std::string& text, const std::vector<std::string>& gens)
        : text_(text), gens_(gens) {}

    bool eat(const std::string& token) {
        skip_spaces();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& token) {
        if (!eat(token))
            fail(errc::parse_error, "structure tag: expected '" + token + "' at offset " +
                                        std::to_string(pos_));
    }

    i64 integer() {
        skip_spaces();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            fail(errc::parse_error, "structure tag: expected integer at offset " +
                                        std::to_string(start));
        return std::stoll(text_.substr(start, pos_ - start));
    }

    i64 keyed_integer(const std::string& key) {
        expect(key + "=");
        return integer();
    }

    // {word tokens}
    Word braced_word() {
        expect("{");
        size_t close = text_.find('}', pos_);
        if (close == std::string::npos)
            fail(errc::parse_error, "structure tag: unterminated word block");
        Word w = parse_word(text_.substr(pos_, close - pos_), gens_);
        pos_ = close + 1;
        return w;
    }

    FactorMeta factor() {
        expect("[gens=");
        FactorMeta f;
        i64 begin = integer();
        expect("..");
        i64 end = integer();
        if (begin < 0 || end < begin || static_cast<size_t>(end) > gens_.size())
            fail(errc::parse_error, "structure tag: factor range out of bounds");
        f.gen_begin = static_cast<size_t>(begin);
        f.gen_end = static_cast<size_t>(end);
        expect("mu=");
        f.mu = braced_word();
        expect("lambda=");
        f.lambda = braced_word();
        expect("torus=");
        if (eat("none")) {
            f.torus = std::nullopt;
        } else {
            TorusMeta tm;
            tm.p = integer();
            expect(",");
            tm.q = integer();
            expect(",");
            tm.a = integer();
            expect(",");
            tm.b = integer();
            f.torus = tm;
        }
        expect("]");
        return f;
    }

    bool at_end() {
        skip_spaces();
        return pos_ == text_.size();
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    const std::string& text_;
    const std::vector<std::string>& gens_;
    size_t pos_ = 0;
};

Structure parse_structure(const std::string& text, const std::vector<std::string>& gens) {
    StructScanner sc(text, gens);
    Structure out;
    if (sc.eat("wirtinger")) {
        out = WirtingerMeta{};
    } else if (sc.eat("torus-amalgam")) {
        TorusMeta tm;
        tm.p = sc.keyed_integer("p");
        tm.q = sc.keyed_integer("q");
        tm.a = sc.keyed_integer("a");
        tm.b = sc.keyed_integer("b");
        out = tm;
    } else if (sc.eat("sum-amalgam")) {
        SumMeta sm;
        while (!sc.at_end()) sm.factors.push_back(sc.factor());
        if (sm.factors.size() < 2)
            fail(errc::parse_error, "structure tag: sum-amalgam needs >= 2 factors");
        out = sm;
    } else if (sc.eat("cable-graph")) {
        CableMeta cm;
        cm.a = sc.keyed_integer("a");
        cm.b = sc.keyed_integer("b");
        cm.s = sc.keyed_integer("s");
        cm.r = sc.keyed_integer("r");
        cm.alpha = sc.keyed_integer("alpha");
        cm.beta = sc.keyed_integer("beta");
        sc.expect("core=");
        cm.t = sc.braced_word();
        sc.expect("companion=");
        cm.companion = sc.factor();
        out = cm;
    } else {
        fail(errc::parse_error, "structure tag: unknown kind in '" + text + "'");
    }
    if (!sc.at_end()) fail(errc::parse_error, "structure tag: trailing junk in '" + text + "'");
    return out;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty()) lines.push_back(line);
    }
    size_t at = 0;
    auto take = [&](const std::string& prefix) -> std::optional<std::string> {
        if (at < lines.size() && lines[at].compare(0, prefix.size(), prefix) == 0)
            return lines[at++].substr(prefix.size());
        return std::nullopt;
    };

    auto gen_line = take("gen:");
    if (!gen_line) fail(errc::parse_error, "presentation must start with a gen: line");
    PresentedGroup g;
    {
        std::istringstream is(*gen_line);
        std::string name;
        while (is >> name) g.generators.push_back(name);
    }
    if (g.generators.empty()) fail(errc::parse_error, "presentation has no generators");
    index_of(g.generators);

    while (auto rel = take("rel: ")) g.relators.push_back(parse_word(*rel, g.generators));

    auto mu_line = take("mu: ");
    if (!mu_line) fail(errc::parse_error, "presentation is missing the mu: line");
    auto lambda_line = take("lambda: ");
    if (!lambda_line) fail(errc::parse_error, "presentation is missing the lambda: line");
    auto structure_line = take("structure: ");
    if (!structure_line) fail(errc::parse_error, "presentation is missing the structure: line");
    if (at != lines.size())
        fail(errc::parse_error, "unrecognized line: " + lines[at]);

    PeripheralPair p{parse_word(*mu_line, g.generators), parse_word(*lambda_line, g.generators)};
    g.structure = parse_structure(*structure_line, g.generators);
    attach_abelianization(g, p);
    return {std::move(g), std::move(p)};
}

} // namespace perimal
