#include "perimal/alexander.hpp"

#include <algorithm>

#include "perimal/error.hpp"

namespace perimal {

namespace {

// Abelianized Fox derivative d(w)/d(x) with t^phi substituted: for each
// occurrence of x^e the derivative contributes the prefix image times
// 1 + t^phi(x) + ... (e terms, negated geometric tail for e < 0).
Laurent fox_derivative(const Word& w, const std::string& x,
                       const std::map<std::string, i64>& phi) {
    Laurent out;
    i64 prefix = 0;
    for (const auto& l : w) {
        auto it = phi.find(l.gen);
        if (it == phi.end())
            fail(errc::h1_not_z, "no abelianization image for generator " + l.gen);
        const i64 step = it->second;
        if (l.gen == x) {
            if (l.exp > 0) {
                for (i64 i = 0; i < l.exp; ++i)
                    out = out + Laurent::t_power(prefix + checked_mul(step, i));
            } else {
                for (i64 i = 1; i <= -l.exp; ++i)
                    out = out - Laurent::t_power(prefix - checked_mul(step, i));
            }
        }
        prefix = checked_add(prefix, checked_mul(step, l.exp));
    }
    return out;
}

// Fraction-free Bareiss determinant over the Laurent ring.
Laurent determinant(std::vector<std::vector<Laurent>> a) {
    const size_t m = a.size();
    if (m == 0) return Laurent::constant(1);
    i64 sign = 1;
    Laurent prev = Laurent::constant(1);
    for (size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_with = m;
            for (size_t i = k + 1; i < m; ++i)
                if (!a[i][k].is_zero()) {
                    swap_with = i;
                    break;
                }
            if (swap_with == m) return Laurent();
            std::swap(a[k], a[swap_with]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m; ++i)
            for (size_t j = k + 1; j < m; ++j) {
                Laurent num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) fail(errc::internal, "Bareiss division failed over the Laurent ring");
                a[i][j] = std::move(*q);
            }
        prev = a[k][k];
    }
    Laurent det = a[m - 1][m - 1];
    return sign < 0 ? -det : det;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

Laurent alexander_polynomial(const PresentedGroup& g) {
    const size_t n = g.generators.size();
    if (n == 0) fail(errc::internal, "presentation has no generators");
    if (n == 1) return Laurent::constant(1);
    const size_t k = n - 1;
    if (g.relators.size() < k)
        fail(errc::not_deficiency_one,
             "need at least " + std::to_string(k) + " relators, have " +
                 std::to_string(g.relators.size()));
    if (g.abelianization.size() != n)
        fail(errc::h1_not_z, "presentation lacks abelianization data");

    std::vector<std::vector<Laurent>> jac(g.relators.size(), std::vector<Laurent>(n));
    for (size_t r = 0; r < g.relators.size(); ++r)
        for (size_t c = 0; c < n; ++c)
            jac[r][c] = fox_derivative(g.relators[r], g.generators[c], g.abelianization);

    const Laurent one = Laurent::constant(1);
    Laurent acc;
    for (const auto& rows : subsets(g.relators.size(), k)) {
        for (const auto& cols : subsets(n, k)) {
            std::vector<std::vector<Laurent>> minor(k, std::vector<Laurent>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) minor[i][j] = jac[rows[i]][cols[j]];
            Laurent det = determinant(std::move(minor));
            if (det.is_zero()) continue;
            acc = acc.is_zero() ? det.normalized() : Laurent::gcd(acc, det);
            if (acc == one) return acc;
        }
    }
    return acc.normalized();
}

Laurent torus_alexander(i64 p, i64 q) {
    const i64 P = p < 0 ? -p : p, Q = q < 0 ? -q : q;
    if (P < 2 || Q < 2 || gcd_i64(P, Q) != 1)
        fail(errc::internal, "torus_alexander needs coprime |p|, |q| >= 2");
    const Laurent one = Laurent::constant(1);
    auto cyc = [&](i64 k) { return Laurent::t_power(k) - one; };
    Laurent num = cyc(checked_mul(P, Q)) * cyc(1);
    auto d1 = num.divide_exact(cyc(P));
    if (!d1) fail(errc::internal, "torus Alexander division by t^p - 1 failed");
    auto d2 = d1->divide_exact(cyc(Q));
    if (!d2) fail(errc::internal, "torus Alexander division by t^q - 1 failed");
    return d2->normalized();
}

} // namespace perimal
