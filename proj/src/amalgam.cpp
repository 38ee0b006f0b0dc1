#include "perimal/amalgam.hpp"

#include "perimal/error.hpp"
#include "perimal/torus_nf.hpp"

namespace perimal {

namespace {

// Local view of one torus factor: generator names, orientation flips taking
// the relator to x^|p| y^-|q|, and the factor meridian in local letters.
struct FactorOracle {
    std::string xname, yname;
    i64 p = 0, q = 0;
    i64 xsign = 1, ysign = 1;
    Word mu_local;
};

struct SumView {
    const SumMeta* meta = nullptr;
    std::vector<FactorOracle> oracles;
    std::map<std::string, size_t> factor_of;
};

Word localize(const FactorOracle& o, const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (l.gen == o.xname)
            out.push_back({"x", checked_mul(l.exp, o.xsign)});
        else if (l.gen == o.yname)
            out.push_back({"y", checked_mul(l.exp, o.ysign)});
        else
            fail(errc::internal, "letter " + l.gen + " escaped its factor");
    }
    return reduced(std::move(out));
}

SumView build_view(const PresentedGroup& g) {
    const auto* meta = std::get_if<SumMeta>(&g.structure);
    if (!meta)
        fail(errc::unsupported_factor, "amalgam reduction needs a sum presentation");
    SumView view;
    view.meta = meta;
    for (size_t f = 0; f < meta->factors.size(); ++f) {
        const FactorMeta& fm = meta->factors[f];
        if (!fm.torus)
            fail(errc::unsupported_factor,
                 "factor " + std::to_string(f) + " has no torus membership oracle");
        if (fm.gen_end != fm.gen_begin + 2 || fm.gen_end > g.generators.size())
            fail(errc::internal, "torus factor range is not two generators");
        FactorOracle o;
        o.xname = g.generators[fm.gen_begin];
        o.yname = g.generators[fm.gen_begin + 1];
        o.xsign = fm.torus->p < 0 ? -1 : 1;
        o.ysign = fm.torus->q < 0 ? -1 : 1;
        o.p = fm.torus->p * o.xsign;
        o.q = fm.torus->q * o.ysign;
        o.mu_local = localize(o, fm.mu);
        view.oracles.push_back(std::move(o));
        view.factor_of[view.oracles[f].xname] = f;
        view.factor_of[view.oracles[f].yname] = f;
    }
    return view;
}

// Some(m) iff w = mu^m in the factor group: the normal form of w mu^-m must
// be fully trivial (central exponent included).
std::optional<i64> mu_power(const FactorOracle& o, const Word& local) {
    const NormalForm base = torus_normal_form(o.p, o.q, local);
    const i64 limit = static_cast<i64>(base.syllables.size()) / 2 + 1;
    for (i64 t = 0; t <= 2 * limit; ++t) {
        const i64 m = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
        NormalForm nf = torus_normal_form(o.p, o.q, wmul(local, wpow(o.mu_local, -m)));
        if (nf.k == 0 && nf.syllables.empty()) return m;
    }
    return std::nullopt;
}

} // namespace

std::optional<i64> factor_mu_power(const PresentedGroup& g, size_t factor, const Word& w) {
    SumView view = build_view(g);
    if (factor >= view.oracles.size()) fail(errc::internal, "factor index out of range");
    return mu_power(view.oracles[factor], localize(view.oracles[factor], w));
}

AmalgamDecomposition amalgam_normal_form(const PresentedGroup& g, const Word& w) {
    SumView view = build_view(g);
    AmalgamDecomposition out;
    std::vector<AmalgamSyllable>& st = out.syllables;

    auto collapse = [&]() {
        while (!st.empty()) {
            const size_t f = st.back().factor;
            auto m = mu_power(view.oracles[f], localize(view.oracles[f], st.back().rep));
            if (!m) break;
            st.pop_back();
            if (st.empty()) {
                out.e = checked_add(out.e, *m);
            } else if (*m != 0) {
                const size_t f2 = st.back().factor;
                st.back().rep = wmul(st.back().rep, wpow(view.meta->factors[f2].mu, *m));
            }
        }
    };

    for (const auto& l : reduced(w)) {
        auto it = view.factor_of.find(l.gen);
        if (it == view.factor_of.end())
            fail(errc::unknown_generator, "word uses generator " + l.gen +
                                              " outside the sum presentation");
        if (!st.empty() && st.back().factor == it->second)
            st.back().rep = wmul(st.back().rep, Word{{l.gen, l.exp}});
        else
            st.push_back({it->second, Word{{l.gen, l.exp}}});
        collapse();
    }
    return out;
}

} // namespace perimal
