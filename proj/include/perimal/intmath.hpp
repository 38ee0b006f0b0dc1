#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "perimal/error.hpp"

namespace perimal {

using i64 = long long;

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

// Returns (g, s, t) with s*a + t*b == g == gcd(a, b), g >= 0.
struct ExtGcd {
    i64 g, s, t;
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

// Inverse of a modulo m, reduced into [1, m-1].  Requires m >= 2, gcd(a,m) == 1.
inline i64 mod_inverse(i64 a, i64 m) {
    auto [g, s, t] = ext_gcd(a, m);
    (void)t;
    if (g != 1) fail(errc::internal, "mod_inverse: arguments not coprime");
    i64 r = s % m;
    if (r < 0) r += m;
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::internal, "integer overflow in multiplication");
    return r;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        fail(errc::internal, "integer overflow in addition");
    return r;
}

} // namespace perimal
