#include "perimal/snf.hpp"

#include <algorithm>
#include <cstdlib>

#include "perimal/error.hpp"

namespace perimal {

namespace {

void add_row(IntMatrix& m, size_t dst, size_t src, i64 factor) {
    for (size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = checked_add(m[dst][j], checked_mul(factor, m[src][j]));
}

void add_col(IntMatrix& m, size_t dst, size_t src, i64 factor) {
    for (auto& row : m)
        row[dst] = checked_add(row[dst], checked_mul(factor, row[src]));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_col(IntMatrix& m, size_t j) {
    for (auto& row : m) row[j] = -row[j];
}

} // namespace

SmithDecomposition smith_normal_form(IntMatrix a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) fail(errc::internal, "ragged matrix");

    IntMatrix v(cols, std::vector<i64>(cols, 0));
    for (size_t j = 0; j < cols; ++j) v[j][j] = 1;

    std::vector<i64> diag;
    size_t k = 0;
    while (k < rows && k < cols) {
        // Smallest nonzero entry in the trailing submatrix becomes the pivot.
        size_t pi = k, pj = k;
        i64 best = 0;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j) {
                i64 x = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (x != 0 && (best == 0 || x < best)) { best = x; pi = i; pj = j; }
            }
        if (best == 0) break;

        std::swap(a[pi], a[k]);
        if (pj != k) { swap_cols(a, pj, k); swap_cols(v, pj, k); }

        bool clean = true;
        for (size_t i = k + 1; i < rows; ++i) {
            if (a[i][k] == 0) continue;
            i64 q = a[i][k] / a[k][k];
            if (q != 0) add_row(a, i, k, -q);
            if (a[i][k] != 0) clean = false;
        }
        for (size_t j = k + 1; j < cols; ++j) {
            if (a[k][j] == 0) continue;
            i64 q = a[k][j] / a[k][k];
            if (q != 0) { add_col(a, j, k, -q); add_col(v, j, k, -q); }
            if (a[k][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick pivot

        // Pivot must divide every remaining entry for true invariant factors.
        bool divides_all = true;
        for (size_t i = k + 1; i < rows && divides_all; ++i)
            for (size_t j = k + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[k][k] != 0) {
                    add_row(a, k, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (a[k][k] < 0) { negate_col(a, k); negate_col(v, k); }
        diag.push_back(a[k][k]);
        ++k;
    }

    SmithDecomposition result;
    result.invariant_factors = std::move(diag);
    result.rank = result.invariant_factors.size();
    result.v = std::move(v);
    return result;
}

} // namespace perimal
