#include "perimal/cable_nf.hpp"

#include "perimal/error.hpp"
#include "perimal/intmath.hpp"

namespace perimal {

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

void check_params(i64 a, i64 b) {
    if (a < 2 || b == 0 || gcd_i64(a, b) != 1)
        fail(errc::internal, "cable normal form needs coprime a >= 2, b != 0");
}

} // namespace

CableNormalForm cable_normal_form(i64 a, i64 b, const Word& w) {
    check_params(a, b);
    CableNormalForm nf;
    auto push = [&](char gen, i64 exp) {
        if (!nf.syllables.empty() && nf.syllables.back().first == gen) {
            exp = checked_add(exp, nf.syllables.back().second);
            nf.syllables.pop_back();
        }
        if (gen == 't') {
            const i64 d = floor_div(exp, a);
            nf.k = checked_add(nf.k, d);
            exp -= d * a;
        }
        if (exp != 0) nf.syllables.push_back({gen, exp});
    };
    for (const auto& l : w) {
        if (l.gen == "c")
            push('c', l.exp);
        else if (l.gen == "q")
            push('t', checked_mul(-b, l.exp));
        else if (l.gen == "h")
            push('t', checked_mul(a, l.exp));
        else
            fail(errc::unknown_generator, "cable-space word uses generator " + l.gen);
    }
    return nf;
}

std::optional<std::pair<i64, i64>> cable_peripheral_membership(const CableMeta& meta,
                                                               const Word& w) {
    const i64 a = meta.a, b = meta.b;
    check_params(a, b);
    const Word mu = reduced(Word{{"c", 1},
                                 {"q", -meta.alpha * meta.alpha},
                                 {"h", meta.alpha * meta.beta - meta.r * meta.beta -
                                           meta.s * meta.alpha}});
    const CableNormalForm base = cable_normal_form(a, b, w);
    // mu projects to a cyclically reduced 2-syllable element of Z * Z_a, so
    // z^k mu^m carries exactly 2|m| syllables.
    const i64 limit = static_cast<i64>(base.syllables.size()) / 2 + 1;
    for (i64 t = 0; t <= 2 * limit; ++t) {
        const i64 m = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
        CableNormalForm nf = cable_normal_form(a, b, wmul(w, wpow(mu, -m)));
        if (nf.syllables.empty()) return std::make_pair(m, nf.k);
    }
    return std::nullopt;
}

} // namespace perimal
