#include "perimal/torus_nf.hpp"

#include "perimal/error.hpp"
#include "perimal/presentation.hpp"

namespace perimal {

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

void check_params(i64 p, i64 q) {
    if (p < 2 || q < 2 || gcd_i64(p, q) != 1)
        fail(errc::internal, "torus normal form needs coprime p, q >= 2");
}

} // namespace

NormalForm torus_normal_form(i64 p, i64 q, const Word& w) {
    check_params(p, q);
    NormalForm nf;
    auto push = [&](char gen, i64 exp) {
        if (!nf.syllables.empty() && nf.syllables.back().first == gen) {
            exp = checked_add(exp, nf.syllables.back().second);
            nf.syllables.pop_back();
        }
        const i64 m = gen == 'x' ? p : q;
        const i64 d = floor_div(exp, m);
        nf.k = checked_add(nf.k, d);
        exp -= d * m;
        if (exp != 0) nf.syllables.push_back({gen, exp});
    };
    for (const auto& l : w) {
        if (l.gen != "x" && l.gen != "y")
            fail(errc::unknown_generator, "torus word uses generator " + l.gen);
        push(l.gen[0], l.exp);
    }
    return nf;
}

std::optional<std::pair<i64, i64>> torus_peripheral_membership(i64 p, i64 q, const Word& w) {
    check_params(p, q);
    auto [a, b] = torus_mu_exponents(p, q);
    const Word mu = reduced(Word{{"x", a}, {"y", b}});
    const NormalForm base = torus_normal_form(p, q, w);
    // mu projects to a cyclically reduced 2-syllable element of Z_p * Z_q, so
    // z^k mu^m carries exactly 2|m| syllables.
    const i64 limit = static_cast<i64>(base.syllables.size()) / 2 + 1;
    for (i64 t = 0; t <= 2 * limit; ++t) {
        const i64 m = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
        NormalForm nf = torus_normal_form(p, q, wmul(w, wpow(mu, -m)));
        if (nf.syllables.empty()) return std::make_pair(m, nf.k);
    }
    return std::nullopt;
}

} // namespace perimal
