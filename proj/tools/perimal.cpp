#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "perimal/alexander.hpp"
#include "perimal/census.hpp"
#include "perimal/error.hpp"
#include "perimal/json_io.hpp"
#include "perimal/malnormality.hpp"
#include "perimal/notation.hpp"
#include "perimal/presentation.hpp"

using namespace perimal;

namespace {

struct Options {
    std::string input;
    std::string census_path;
    std::string format = "json";
    std::string out_path;
    ProbeBounds bounds;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--census", opt.census_path, "census CSV for table() names");
    cmd->add_option("--quotients", opt.bounds.quotients, "finite quotient budget");
    cmd->add_option("--degree-cap", opt.bounds.degree_cap, "max permutation degree");
    cmd->add_option("--g-length", opt.bounds.g_length, "probe conjugator length bound");
    cmd->add_option("--p-exp", opt.bounds.p_exp, "probe peripheral exponent bound");
    cmd->add_option("--seed", opt.bounds.seed, "recorded probe seed");
    cmd->add_option("--max-survivors", opt.bounds.max_survivors, "probe survivor cap");
    cmd->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opt.out_path, "write the report to a file");
}

std::optional<Census> load_optional_census(const Options& opt) {
    if (opt.census_path.empty()) return std::nullopt;
    return load_census(opt.census_path);
}

void emit(const Options& opt, const std::string& body) {
    if (opt.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot open output file " + opt.out_path);
    f << body;
}

std::string check_lines(const std::vector<CheckResult>& checks) {
    std::string out;
    for (const CheckResult& c : checks)
        out += c.name + ": " + (c.pass ? "pass" : "fail") + " (" + c.method + ")\n";
    return out;
}

int run_parse(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    std::string canonical = render_knot_expr(*k);
    if (opt.format == "text") {
        emit(opt, canonical + "\n");
    } else {
        emit(opt, std::string("{\n  \"input\": \"") + opt.input + "\",\n  \"canonical\": \"" +
                      canonical + "\"\n}\n");
    }
    return 0;
}

int run_present(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    Presentation pres = presentation_of(*k);
    emit(opt, serialize_presentation(pres.first, pres.second));
    return 0;
}

int run_classify(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    std::string cls = render_class(classify(*k, census));
    if (opt.format == "text")
        emit(opt, cls + "\n");
    else
        emit(opt, std::string("{\n  \"knot\": \"") + render_knot_expr(*k) +
                      "\",\n  \"class\": \"" + cls + "\"\n}\n");
    return 0;
}

int run_decide(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    StructuralClass cls = classify(*k, census);
    Decision d = decide_malnormality(*k, census, opt.bounds);
    std::optional<Presentation> pres;
    if (d.certificate) pres = structural_presentation(*k, census);
    else if (d.probe) pres = presentation_of(*k);
    if (opt.format == "text") {
        std::string body = "knot: " + render_knot_expr(*k) + "\nclass: " + render_class(cls) +
                           "\nmalnormal: " + render_verdict(d.malnormal) +
                           "\nrationale: " + d.rationale + "\n";
        if (d.certificate) body += check_lines(d.certificate->checks);
        emit(opt, body);
    } else {
        emit(opt, decision_document(render_knot_expr(*k), cls, d, pres));
    }
    return d.malnormal == Verdict::EvidenceOnly ? 2 : 0;
}

int run_witness(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    WitnessCertificate w = synthesize_witness(*k, census);
    std::optional<Presentation> pres = structural_presentation(*k, census);
    w.checks = verify_witness(pres->first, pres->second, w, opt.bounds.quotients);
    if (opt.format == "text")
        emit(opt, "knot: " + render_knot_expr(*k) + "\ng: " + render_word(w.g) +
                      "\np0: " + render_word(w.p0) + "\np1: " + render_word(w.p1) +
                      "\nannulus_slope: (" + std::to_string(w.annulus_slope.m) + "," +
                      std::to_string(w.annulus_slope.l) + ")\n" + check_lines(w.checks));
    else
        emit(opt, witness_document(render_knot_expr(*k), pres->first, pres->second, w));
    return 0;
}

int run_verify(const Options& opt, const Census* census) {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot open witness document " + opt.input);
    std::stringstream buf;
    buf << f.rdbuf();
    WitnessDocument doc = parse_witness_document(buf.str());

    KnotExprPtr k = parse_knot_expr(doc.knot, census);
    std::optional<Presentation> pres = structural_presentation(*k, census);
    if (!pres)
        fail(errc::not_applicable, "witness document names a non-structural knot");
    if (pres->first.generators != doc.generators || pres->first.relators != doc.relators ||
        pres->second.mu != doc.mu || pres->second.lambda != doc.lambda)
        fail(errc::cross_check_failed,
             "witness document presentation differs from the derived one");

    WitnessCertificate w = doc.witness;
    w.checks = verify_witness(pres->first, pres->second, w, opt.bounds.quotients);
    if (opt.format == "text")
        emit(opt, "knot: " + doc.knot + "\n" + check_lines(w.checks));
    else
        emit(opt, witness_document(doc.knot, pres->first, pres->second, w));
    return 0;
}

int run_probe(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    StructuralClass cls = classify(*k, census);
    Presentation pres = presentation_of(*k);
    ProbeReport rep = probe_malnormality(pres.first, pres.second, opt.bounds);
    if (opt.format == "text") {
        std::string body = "knot: " + render_knot_expr(*k) +
                           "\nsurvivors: " + std::to_string(rep.survivors.size()) +
                           "\nquotients_used: " + std::to_string(rep.quotients_used) + "\n";
        for (const ProbeTriple& t : rep.survivors)
            body += "  g = " + render_word(t.g) + ", p0 = mu^" + std::to_string(t.p0.first) +
                    " lambda^" + std::to_string(t.p0.second) + ", p1 = mu^" +
                    std::to_string(t.p1.first) + " lambda^" + std::to_string(t.p1.second) +
                    "\n";
        emit(opt, body);
    } else {
        emit(opt, probe_document(render_knot_expr(*k), cls, pres.first, pres.second, rep));
    }
    return 0;
}

int run_alexander(const Options& opt, const Census* census) {
    KnotExprPtr k = parse_knot_expr(opt.input, census);
    Presentation pres = presentation_of(*k);
    std::string poly = alexander_polynomial(pres.first).to_string();
    if (opt.format == "text")
        emit(opt, poly + "\n");
    else
        emit(opt, std::string("{\n  \"knot\": \"") + render_knot_expr(*k) +
                      "\",\n  \"alexander\": \"" + poly + "\"\n}\n");
    return 0;
}

int run_jsj(const Options& opt, const JsjSummary& j) {
    Decision d = decide_peripheral_malnormality_jsj(j);
    if (opt.format == "text")
        emit(opt, "malnormal: " + render_verdict(d.malnormal) + "\nrationale: " + d.rationale +
                      "\n");
    else
        emit(opt, jsj_document(j, d));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"peripheral malnormality decider"};
    app.require_subcommand(1);

    Options opt;
    JsjSummary jsj;

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse and canonicalize an expression");
    CLI::App* present_cmd = app.add_subcommand("present", "emit the group presentation");
    CLI::App* classify_cmd = app.add_subcommand("classify", "structural trichotomy class");
    CLI::App* decide_cmd = app.add_subcommand("decide", "decide peripheral malnormality");
    CLI::App* witness_cmd = app.add_subcommand("witness", "synthesize and verify a witness");
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-verify a witness document");
    CLI::App* probe_cmd = app.add_subcommand("probe", "bounded witness-pattern search");
    CLI::App* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial");
    CLI::App* jsj_cmd = app.add_subcommand("jsj-decide", "boundary-piece criterion");

    for (CLI::App* cmd : {parse_cmd, present_cmd, classify_cmd, decide_cmd, witness_cmd,
                          probe_cmd, alexander_cmd}) {
        cmd->add_option("expression", opt.input, "knot expression")->required();
        add_common(cmd, opt);
    }
    verify_cmd->add_option("document", opt.input, "witness JSON document path")->required();
    add_common(verify_cmd, opt);
    jsj_cmd->add_flag("--seifert", jsj.boundary_piece_is_seifert,
                      "boundary piece is Seifert fibered");
    jsj_cmd->add_option("--piece", jsj.piece_description, "piece description");
    jsj_cmd->add_flag("--solid-torus", jsj.solid_torus, "manifold is a solid torus");
    jsj_cmd->add_flag("--thickened-torus", jsj.thickened_torus, "manifold is T^2 x I");
    add_common(jsj_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<Census> census = load_optional_census(opt);
        const Census* cp = census ? &*census : nullptr;
        if (parse_cmd->parsed()) return run_parse(opt, cp);
        if (present_cmd->parsed()) return run_present(opt, cp);
        if (classify_cmd->parsed()) return run_classify(opt, cp);
        if (decide_cmd->parsed()) return run_decide(opt, cp);
        if (witness_cmd->parsed()) return run_witness(opt, cp);
        if (verify_cmd->parsed()) return run_verify(opt, cp);
        if (probe_cmd->parsed()) return run_probe(opt, cp);
        if (alexander_cmd->parsed()) return run_alexander(opt, cp);
        if (jsj_cmd->parsed()) return run_jsj(opt, jsj);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
