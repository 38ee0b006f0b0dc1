#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace perimal {

// Every failure the library reports carries a stable machine-readable code
// alongside the human message.  CLI and tests dispatch on code(), never on
// message text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* malformed_dt = "MalformedDT";
inline constexpr const char* non_realizable = "NonRealizable";
inline constexpr const char* not_a_knot = "NotAKnot";
inline constexpr const char* malformed_braid = "MalformedBraid";
inline constexpr const char* gcd_violation = "GcdViolation";
inline constexpr const char* trivial_knot_rejected = "TrivialKnotRejected";
inline constexpr const char* unknown_table_name = "UnknownTableName";
inline constexpr const char* parse_error = "ParseError";
inline constexpr const char* unknown_generator = "UnknownGenerator";
inline constexpr const char* unsupported_factor = "UnsupportedFactor";
inline constexpr const char* not_deficiency_one = "NotDeficiencyOne";
inline constexpr const char* h1_not_z = "H1NotZ";
inline constexpr const char* cross_check_failed = "CrossCheckFailed";
inline constexpr const char* excluded_manifold = "ExcludedManifold";
inline constexpr const char* not_applicable = "NotApplicable";
inline constexpr const char* check_failed = "CheckFailed";
inline constexpr const char* io_error = "IoError";
inline constexpr const char* internal = "Internal";
} // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

} // namespace perimal
