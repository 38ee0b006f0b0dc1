#include "perimal/census.hpp"

#include <fstream>
#include <sstream>

#include "perimal/alexander.hpp"
#include "perimal/diagram.hpp"
#include "perimal/error.hpp"
#include "perimal/presentation.hpp"

namespace perimal {

std::string to_string(GeometricType t) {
    switch (t) {
        case GeometricType::Torus: return "torus";
        case GeometricType::Hyperbolic: return "hyperbolic";
        case GeometricType::Satellite: return "satellite";
    }
    fail(errc::internal, "unreachable geometric type");
}

const CensusEntry& Census::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        fail(errc::unknown_table_name, "no census entry named " + name);
    return it->second;
}

namespace {

// Splits one CSV record; double quotes delimit fields that could hold commas.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        const size_t a = f.find_first_not_of(" \t\r");
        const size_t b = f.find_last_not_of(" \t\r");
        f = a == std::string::npos ? std::string() : f.substr(a, b - a + 1);
    }
    return fields;
}

GeometricType parse_type(const std::string& s) {
    if (s == "torus") return GeometricType::Torus;
    if (s == "hyperbolic") return GeometricType::Hyperbolic;
    if (s == "satellite") return GeometricType::Satellite;
    fail(errc::parse_error, "unknown geometric type " + s);
}

void cross_check_torus(const CensusEntry& e) {
    const auto [p, q] = *e.params;
    const i64 ap = p < 0 ? -p : p, aq = q < 0 ? -q : q;
    if (ap < 2 || aq < 2 || gcd_i64(ap, aq) != 1)
        fail(errc::cross_check_failed,
             e.name + ": torus parameters " + std::to_string(p) + "," + std::to_string(q) +
                 " are not a coprime pair with |p|,|q| >= 2");
    auto pres = wirtinger(dt_to_diagram(e.dt));
    const Laurent fox = alexander_polynomial(pres.first).normalized();
    const Laurent closed = torus_alexander(p, q);
    if (!(fox == closed))
        fail(errc::cross_check_failed,
             e.name + ": Fox Alexander polynomial " + fox.to_string() +
                 " does not match the torus(" + std::to_string(p) + "," + std::to_string(q) +
                 ") formula " + closed.to_string());
}

} // namespace

Census load_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open census file " + path);

    std::string provenance;
    std::map<std::string, CensusEntry> entries;
    bool header_seen = false;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (provenance.empty()) {
                const size_t a = line.find_first_not_of("# \t");
                provenance = a == std::string::npos ? std::string() : line.substr(a);
            }
            continue;
        }
        if (!header_seen) {
            if (split_csv(line) != std::vector<std::string>{"name", "dt", "type", "params"})
                fail(errc::parse_error, "census header must be name,dt,type,params");
            header_seen = true;
            continue;
        }
        auto fields = split_csv(line);
        if (fields.size() != 4)
            fail(errc::parse_error, "census row needs 4 fields: " + line);
        CensusEntry e;
        e.name = fields[0];
        if (e.name.empty()) fail(errc::parse_error, "census row with empty name");
        e.dt = parse_dt(fields[1]);
        e.geometric_type = parse_type(fields[2]);
        if (!fields[3].empty()) {
            std::istringstream ps(fields[3]);
            i64 p = 0, q = 0;
            if (!(ps >> p >> q) || !(ps >> std::ws).eof())
                fail(errc::parse_error, e.name + ": params must be two integers");
            e.params = std::make_pair(p, q);
        }
        if (e.geometric_type == GeometricType::Torus) {
            if (!e.params)
                fail(errc::parse_error, e.name + ": torus entry needs (p,q) params");
            cross_check_torus(e);
        } else {
            dt_to_diagram(e.dt);  // realizability check
        }
        if (!entries.emplace(e.name, e).second)
            fail(errc::parse_error, "duplicate census name " + e.name);
    }
    if (!header_seen) fail(errc::parse_error, "census file has no header line");
    if (entries.empty()) fail(errc::parse_error, "census table is empty");
    if (provenance.empty())
        fail(errc::parse_error, "census file must open with a provenance comment");
    return Census(provenance, std::move(entries));
}

} // namespace perimal
