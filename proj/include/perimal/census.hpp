#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perimal/notation.hpp"

namespace perimal {

enum class GeometricType { Torus, Hyperbolic, Satellite };

std::string to_string(GeometricType t);

struct CensusEntry {
    std::string name;
    DTCode dt;
    GeometricType geometric_type = GeometricType::Hyperbolic;
    std::optional<std::pair<i64, i64>> params;  // (p,q) for torus entries

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

class Census {
public:
    Census(std::string provenance, std::map<std::string, CensusEntry> entries)
        : provenance_(std::move(provenance)), entries_(std::move(entries)) {}

    const CensusEntry& lookup(const std::string& name) const;
    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    const std::map<std::string, CensusEntry>& entries() const { return entries_; }
    const std::string& provenance() const { return provenance_; }

    friend bool operator==(const Census& a, const Census& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::string provenance_;
    std::map<std::string, CensusEntry> entries_;  // keyed by name
};

// CSV with header `name,dt,type,params`; `#` comments; the first comment line
// records provenance.  Every torus row's DT code is cross-checked at load by
// comparing its Fox-calculus Alexander polynomial with the closed torus-knot
// formula; every row's DT code must be realizable.
Census load_census(const std::string& path);

} // namespace perimal
