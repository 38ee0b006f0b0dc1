#include "perimal/notation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "perimal/census.hpp"
#include "perimal/error.hpp"

namespace perimal {

namespace {

std::vector<i64> parse_int_list(const std::string& text, const char* code) {
    std::string prepared = text;
    std::replace(prepared.begin(), prepared.end(), ',', ' ');
    std::istringstream is(prepared);
    std::vector<i64> values;
    std::string tok;
    while (is >> tok) {
        try {
            size_t used = 0;
            values.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail(code, "not an integer: '" + tok + "'");
        }
    }
    return values;
}

} // namespace

DTCode parse_dt(const std::string& text) {
    std::vector<i64> values = parse_int_list(text, errc::malformed_dt);
    int n = static_cast<int>(values.size());
    if (n < 2)
        fail(errc::trivial_knot_rejected,
             "a knot needs at least 2 crossings; got " + std::to_string(n) + " DT entries");
    std::set<i64> seen;
    for (i64 v : values) {
        i64 mag = v < 0 ? -v : v;
        if (mag % 2 != 0)
            fail(errc::malformed_dt, "odd DT entry " + std::to_string(v));
        if (mag < 2 || mag > 2 * n)
            fail(errc::malformed_dt, "DT entry " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (!seen.insert(mag).second)
            fail(errc::malformed_dt, "repeated DT label " + std::to_string(mag));
    }
    return DTCode{std::move(values)};
}

std::string render_dt(const DTCode& code) {
    std::ostringstream os;
    for (size_t i = 0; i < code.pairs.size(); ++i) {
        if (i) os << ' ';
        os << code.pairs[i];
    }
    return os.str();
}

BraidWord parse_braid(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        fail(errc::malformed_braid, "expected 'B<strands>: letters'");
    std::string head = text.substr(0, colon);
    size_t b = head.find_first_not_of(" \t");
    if (b == std::string::npos || (head[b] != 'B' && head[b] != 'b'))
        fail(errc::malformed_braid, "braid header must start with 'B'");
    i64 strands = 0;
    try {
        size_t used = 0;
        std::string count = head.substr(b + 1);
        strands = std::stoll(count, &used);
        while (used < count.size() && std::isspace(static_cast<unsigned char>(count[used]))) ++used;
        if (used != count.size()) throw std::invalid_argument(count);
    } catch (const std::exception&) {
        fail(errc::malformed_braid, "bad strand count in '" + head + "'");
    }
    if (strands < 2)
        fail(errc::malformed_braid, "need at least 2 strands");

    std::vector<i64> letters64 = parse_int_list(text.substr(colon + 1), errc::malformed_braid);
    if (letters64.empty())
        fail(errc::malformed_braid, "empty braid word");
    std::vector<int> letters;
    for (i64 v : letters64) {
        if (v == 0 || (v < 0 ? -v : v) >= strands)
            fail(errc::malformed_braid, "braid letter " + std::to_string(v) +
                                            " out of range for " + std::to_string(strands) + " strands");
        letters.push_back(static_cast<int>(v));
    }

    // Closure component count: the letter permutation must be one cycle.
    std::vector<int> perm(static_cast<size_t>(strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : letters) {
        int i = (l < 0 ? -l : l) - 1;
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i) + 1]);
    }
    std::vector<bool> visited(static_cast<size_t>(strands), false);
    int cycles = 0;
    for (int i = 0; i < strands; ++i) {
        if (visited[static_cast<size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !visited[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) visited[static_cast<size_t>(j)] = true;
    }
    if (cycles != 1)
        fail(errc::not_a_knot, "braid closure has " + std::to_string(cycles) + " components");

    return BraidWord{static_cast<int>(strands), std::move(letters)};
}

std::string render_braid(const BraidWord& braid) {
    std::ostringstream os;
    os << 'B' << braid.strands << ':';
    for (int l : braid.letters) os << ' ' << l;
    return os.str();
}

KnotExprPtr make_torus(i64 p, i64 q) {
    i64 ap = p < 0 ? -p : p, aq = q < 0 ? -q : q;
    if (std::gcd(ap, aq) != 1)
        fail(errc::gcd_violation,
             "torus(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot: gcd > 1");
    if (ap < 2 || aq < 2)
        fail(errc::trivial_knot_rejected,
             "torus(" + std::to_string(p) + "," + std::to_string(q) + ") is the trivial knot");
    return std::make_shared<KnotExpr>(TorusKnot{p, q});
}

KnotExprPtr make_cable(i64 a, i64 b, KnotExprPtr companion) {
    i64 aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    if (std::gcd(aa, ab) != 1)
        fail(errc::gcd_violation,
             "cable(" + std::to_string(a) + "," + std::to_string(b) + "; ...): gcd > 1");
    if (aa < 2)
        fail(errc::trivial_knot_rejected,
             "cable winding |a| must be at least 2; pattern otherwise follows the core");
    if (!companion)
        fail(errc::internal, "cable companion missing");
    return std::make_shared<KnotExpr>(CableKnot{a, b, std::move(companion)});
}

KnotExprPtr make_sum(std::vector<KnotExprPtr> factors) {
    if (factors.size() < 2)
        fail(errc::parse_error, "sum() needs at least 2 factors");
    for (const auto& f : factors)
        if (!f) fail(errc::internal, "sum factor missing");
    return std::make_shared<KnotExpr>(SumKnot{std::move(factors)});
}

KnotExprPtr make_diagram(std::variant<DTCode, BraidWord> source, std::optional<std::string> name) {
    return std::make_shared<KnotExpr>(DiagramKnot{std::move(source), std::move(name)});
}

namespace {

// Recursive-descent reader over the expression grammar.
class ExprReader {
public:
    ExprReader(const std::string& text, const Census* census)
        : text_(text), census_(census) {}

    KnotExprPtr read() {
        KnotExprPtr e = expr();
        skip_space();
        if (pos_ != text_.size())
            fail(errc::parse_error, "trailing input at '" + text_.substr(pos_) + "'");
        return e;
    }

private:
    const std::string& text_;
    const Census* census_;
    size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void consume(char c) {
        if (!try_consume(c))
            fail(errc::parse_error, std::string("expected '") + c + "' at position " + std::to_string(pos_));
    }

    std::string ident() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            fail(errc::parse_error, "expected a name at position " + std::to_string(start));
        return text_.substr(start, pos_ - start);
    }

    i64 integer() {
        skip_space();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            fail(errc::parse_error, "expected an integer at position " + std::to_string(start));
        return std::stoll(text_.substr(start, pos_ - start));
    }

    std::string bracketed() {
        consume('[');
        size_t start = pos_;
        size_t end = text_.find(']', start);
        if (end == std::string::npos)
            fail(errc::parse_error, "unclosed '['");
        pos_ = end + 1;
        return text_.substr(start, end - start);
    }

    KnotExprPtr expr() {
        std::string head = ident();
        if (head == "torus") {
            consume('(');
            i64 p = integer();
            consume(',');
            i64 q = integer();
            consume(')');
            return make_torus(p, q);
        }
        if (head == "cable") {
            consume('(');
            i64 a = integer();
            consume(',');
            i64 b = integer();
            consume(';');
            KnotExprPtr companion = expr();
            consume(')');
            return make_cable(a, b, std::move(companion));
        }
        if (head == "sum") {
            consume('(');
            std::vector<KnotExprPtr> factors;
            factors.push_back(expr());
            while (try_consume(',')) factors.push_back(expr());
            consume(')');
            return make_sum(std::move(factors));
        }
        if (head == "dt")
            return make_diagram(parse_dt(bracketed()));
        if (head == "braid")
            return make_diagram(parse_braid(bracketed()));
        if (head == "table") {
            consume('(');
            std::string name = ident();
            consume(')');
            if (!census_)
                fail(errc::unknown_table_name,
                     "table(" + name + ") needs a census; pass --census");
            const CensusEntry& entry = census_->lookup(name);
            return make_diagram(entry.dt, name);
        }
        fail(errc::parse_error, "unknown expression head '" + head + "'");
    }
};

} // namespace

KnotExprPtr parse_knot_expr(const std::string& text, const Census* census) {
    return ExprReader(text, census).read();
}

std::string render_knot_expr(const KnotExpr& k) {
    std::ostringstream os;
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TorusKnot>) {
                os << "torus(" << node.p << "," << node.q << ")";
            } else if constexpr (std::is_same_v<T, CableKnot>) {
                os << "cable(" << node.a << "," << node.b << "; "
                   << render_knot_expr(*node.companion) << ")";
            } else if constexpr (std::is_same_v<T, SumKnot>) {
                os << "sum(";
                for (size_t i = 0; i < node.factors.size(); ++i) {
                    if (i) os << ", ";
                    os << render_knot_expr(*node.factors[i]);
                }
                os << ")";
            } else {
                if (node.name) {
                    os << "table(" << *node.name << ")";
                } else if (std::holds_alternative<DTCode>(node.source)) {
                    os << "dt[" << render_dt(std::get<DTCode>(node.source)) << "]";
                } else {
                    os << "braid[" << render_braid(std::get<BraidWord>(node.source)) << "]";
                }
            }
        },
        k.node());
    return os.str();
}

} // namespace perimal
