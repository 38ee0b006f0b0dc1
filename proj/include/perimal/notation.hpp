#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perimal/intmath.hpp"

namespace perimal {

// Standard Dowker-Thistlethwaite pairing: pairs[i] is the signed even label
// met at the same crossing as odd label 2i+1.  Positive entry: the odd-label
// visit passes over; negative: under.
struct DTCode {
    std::vector<i64> pairs;

    int crossings() const { return static_cast<int>(pairs.size()); }
    friend bool operator==(const DTCode&, const DTCode&) = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<int> letters;  // nonzero, |letter| < strands

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

DTCode parse_dt(const std::string& text);
std::string render_dt(const DTCode& code);

// Syntax "B<strands>: i1 i2 ..."; the closure must be a single component.
BraidWord parse_braid(const std::string& text);
std::string render_braid(const BraidWord& braid);

class KnotExpr;
using KnotExprPtr = std::shared_ptr<const KnotExpr>;

struct TorusKnot {
    i64 p, q;
};
struct CableKnot {
    i64 a, b;
    KnotExprPtr companion;
};
struct SumKnot {
    std::vector<KnotExprPtr> factors;
};
struct DiagramKnot {
    std::variant<DTCode, BraidWord> source;
    std::optional<std::string> name;  // census name when built from table(...)
};

class KnotExpr {
public:
    using Node = std::variant<TorusKnot, CableKnot, SumKnot, DiagramKnot>;

    explicit KnotExpr(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

private:
    Node node_;
};

KnotExprPtr make_torus(i64 p, i64 q);
KnotExprPtr make_cable(i64 a, i64 b, KnotExprPtr companion);
KnotExprPtr make_sum(std::vector<KnotExprPtr> factors);
KnotExprPtr make_diagram(std::variant<DTCode, BraidWord> source,
                         std::optional<std::string> name = std::nullopt);

class Census;  // census.hpp; needed to resolve table(name) references

// Grammar:
//   expr := "torus(" int "," int ")"
//         | "cable(" int "," int ";" expr ")"
//         | "sum(" expr ("," expr)+ ")"
//         | "dt[" dt-text "]"
//         | "braid[" braid-text "]"
//         | "table(" name ")"
// table() requires a census; without one it raises UnknownTableName.
KnotExprPtr parse_knot_expr(const std::string& text, const Census* census = nullptr);

// Canonical text form; parse_knot_expr(render_knot_expr(k)) reproduces k
// (table() inputs render by name).
std::string render_knot_expr(const KnotExpr& k);

} // namespace perimal
