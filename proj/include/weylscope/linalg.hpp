#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace weylscope {

// Reduced row echelon form over Q.
struct Echelon {
    std::vector<Vec> rows;     // nonzero rows, pivot entries equal to 1
    std::vector<int> pivots;   // pivot column of each row
    int cols = 0;

    int rank() const { return static_cast<int>(rows.size()); }

    // Canonical representative of v modulo the row space.
    Vec reduce(Vec v) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Rational f = v[pivots[k]];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                if (rows[k][j] != 0) v[j] -= f * rows[k][j];
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    bool contains(const IVec& v) const { return contains(to_vec(v)); }
};

inline Echelon rref(std::vector<Vec> m, int cols) {
    Echelon e;
    e.cols = cols;
    int r = 0;
    const int nrows = static_cast<int>(m.size());
    for (int c = 0; c < cols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

inline Echelon rref(const std::vector<IVec>& m, int cols) {
    std::vector<Vec> q;
    q.reserve(m.size());
    for (const auto& row : m) q.push_back(to_vec(row));
    return rref(std::move(q), cols);
}

inline int rank_of(const std::vector<IVec>& m, int cols) { return rref(m, cols).rank(); }

// Basis of {u : row·u = 0 for all rows}, returned in reduced echelon form.
inline std::vector<Vec> nullspace(const Echelon& e) {
    std::vector<bool> is_pivot(e.cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < e.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(e.cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis), e.cols).rows;
}

// Some solution of A u = b, or nullopt.
inline std::optional<Vec> solve(const std::vector<Vec>& a, const Vec& b, int cols) {
    std::vector<Vec> aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Vec row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    Echelon e = rref(std::move(aug), cols + 1);
    Vec u(cols, 0);
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivots[k] == cols) return std::nullopt;
        u[e.pivots[k]] = e.rows[k][cols];
    }
    return u;
}

}  // namespace weylscope
