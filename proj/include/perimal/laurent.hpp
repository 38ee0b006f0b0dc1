#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perimal/intmath.hpp"

namespace perimal {

// Laurent polynomial in one variable t with integer coefficients.
// Invariant: zero is the empty coefficient vector; otherwise both the first
// and last stored coefficients are nonzero.
class Laurent {
public:
    Laurent() = default;
    static Laurent constant(i64 c);
    static Laurent t_power(i64 k);            // t^k
    static Laurent monomial(i64 c, i64 k);    // c * t^k

    bool is_zero() const { return coef_.empty(); }
    i64 low() const;   // exponent of lowest term; requires nonzero
    i64 high() const;  // exponent of highest term; requires nonzero
    i64 coeff(i64 exp) const;
    i64 leading() const;  // coefficient of t^high()

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const = default;

    Laurent substitute_power(i64 a) const;  // t -> t^a, a != 0
    i64 evaluate(i64 t) const;

    i64 content() const;     // gcd of coefficients, >= 0; 0 for the zero poly
    Laurent primitive() const;

    // Equivalence class representative under multiplication by units +-t^k:
    // lowest exponent 0 and positive leading coefficient.
    Laurent normalized() const;

    // Exact division; nullopt when the divisor does not divide exactly over Z.
    std::optional<Laurent> divide_exact(const Laurent& divisor) const;

    static Laurent gcd(Laurent a, Laurent b);  // result is normalized

    // Ascending exponents, e.g. "1 - t + t^2" or "t^-2 + 3".  Zero is "0".
    std::string to_string(const std::string& var = "t") const;

private:
    // coef_[i] is the coefficient of t^(low_ + i).
    i64 low_ = 0;
    std::vector<i64> coef_;

    void trim();
};

} // namespace perimal
