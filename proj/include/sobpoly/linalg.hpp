#pragma once

#include <optional>
#include <vector>

#include "sobpoly/rational.hpp"

namespace sobpoly {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan over the rationals. Solves A x = b for possibly rectangular A;
// returns nullopt when the system is inconsistent. Free variables, if any,
// are set to zero.
inline std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        const Rational inv = a[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Determinant by fraction-free-ish Gaussian elimination (exact anyway).
inline Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a[pr][c].is_zero()) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            std::swap(a[pr], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const Rational inv = a[c][c].inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            const Rational f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace sobpoly
