#pragma once

#include <algorithm>
#include <vector>

#include "linalg.hpp"

namespace weylscope::lp {

// maximize objective·x subject to le_rows·x <= le_rhs, eq_rows·x = eq_rhs, x free.
struct Program {
    int n = 0;
    std::vector<Vec> le_rows;
    Vec le_rhs;
    std::vector<Vec> eq_rows;
    Vec eq_rhs;
    Vec objective;

    void add_le(Vec a, Rational b) {
        le_rows.push_back(std::move(a));
        le_rhs.push_back(std::move(b));
    }
    void add_eq(Vec a, Rational b) {
        eq_rows.push_back(std::move(a));
        eq_rhs.push_back(std::move(b));
    }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value;
    Vec x;
};

namespace detail {

// Dictionary-form simplex with Bland's rule on: max c·x, A x <= b, x >= 0.
class Tableau {
public:
    Tableau(std::vector<Vec> a, Vec b, Vec c)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())),
          a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), v_(0) {
        for (int j = 0; j < n_; ++j) nonbasic_.push_back(j);
        for (int i = 0; i < m_; ++i) basic_.push_back(n_ + i);
    }

    Result run() {
        if (!initialize()) return {Status::Infeasible, 0, {}};
        if (!optimize()) return {Status::Unbounded, 0, {}};
        Result r;
        r.status = Status::Optimal;
        r.value = v_;
        r.x.assign(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basic_[i] < n_) r.x[basic_[i]] = b_[i];
        return r;
    }

private:
    void pivot(int r, int s) {
        const int cols = static_cast<int>(nonbasic_.size());
        Rational piv = a_[r][s];
        b_[r] /= piv;
        for (int j = 0; j < cols; ++j)
            if (j != s) a_[r][j] /= piv;
        a_[r][s] = 1 / piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r || a_[i][s] == 0) continue;
            Rational f = a_[i][s];
            b_[i] -= f * b_[r];
            for (int j = 0; j < cols; ++j)
                if (j != s && a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
            a_[i][s] = -f * a_[r][s];
        }
        if (c_[s] != 0) {
            Rational f = c_[s];
            v_ += f * b_[r];
            for (int j = 0; j < cols; ++j)
                if (j != s && a_[r][j] != 0) c_[j] -= f * a_[r][j];
            c_[s] = -f * a_[r][s];
        }
        std::swap(basic_[r], nonbasic_[s]);
    }

    // false when unbounded
    bool optimize() {
        for (;;) {
            int s = -1;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j)
                if (c_[j] > 0 && (s < 0 || nonbasic_[j] < nonbasic_[s])) s = static_cast<int>(j);
            if (s < 0) return true;
            int r = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][s] <= 0) continue;
                Rational ratio = b_[i] / a_[i][s];
                if (r < 0 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r < 0) return false;
            pivot(r, s);
        }
    }

    bool initialize() {
        int k = -1;
        for (int i = 0; i < m_; ++i)
            if (b_[i] < 0 && (k < 0 || b_[i] < b_[k])) k = i;
        if (k < 0) return true;

        const int aux = n_ + m_;
        Vec saved_c = c_;
        for (auto& row : a_) row.push_back(-1);
        nonbasic_.push_back(aux);
        c_.assign(nonbasic_.size(), 0);
        c_.back() = -1;
        v_ = 0;
        pivot(k, static_cast<int>(nonbasic_.size()) - 1);
        optimize();
        if (v_ < 0) return false;

        auto basic_pos = std::find(basic_.begin(), basic_.end(), aux);
        if (basic_pos != basic_.end()) {
            int r = static_cast<int>(basic_pos - basic_.begin());
            int s = -1;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j)
                if (a_[r][j] != 0) {
                    s = static_cast<int>(j);
                    break;
                }
            pivot(r, s);
        }
        int col = static_cast<int>(std::find(nonbasic_.begin(), nonbasic_.end(), aux) - nonbasic_.begin());
        for (auto& row : a_) row.erase(row.begin() + col);
        nonbasic_.erase(nonbasic_.begin() + col);

        // Re-express the original objective in the current nonbasic variables.
        c_.assign(nonbasic_.size(), 0);
        v_ = 0;
        for (std::size_t j = 0; j < nonbasic_.size(); ++j)
            if (nonbasic_[j] < n_) c_[j] += saved_c[nonbasic_[j]];
        for (int i = 0; i < m_; ++i) {
            int var = basic_[i];
            if (var >= n_ || saved_c[var] == 0) continue;
            const Rational& f = saved_c[var];
            v_ += f * b_[i];
            for (std::size_t j = 0; j < nonbasic_.size(); ++j)
                if (a_[i][j] != 0) c_[j] -= f * a_[i][j];
        }
        return true;
    }

    int m_, n_;
    std::vector<Vec> a_;
    Vec b_, c_;
    Rational v_;
    std::vector<int> basic_, nonbasic_;
};

}  // namespace detail

inline Result solve(const Program& p) {
    // Eliminate equalities: x = x0 + N z.
    Vec x0(p.n, 0);
    std::vector<Vec> basis;
    if (!p.eq_rows.empty()) {
        auto part = weylscope::solve(p.eq_rows, p.eq_rhs, p.n);
        if (!part) return {Status::Infeasible, 0, {}};
        x0 = *part;
        basis = nullspace(rref(p.eq_rows, p.n));
    } else {
        for (int i = 0; i < p.n; ++i) {
            Vec e(p.n, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
    }
    const int k = static_cast<int>(basis.size());
    auto project = [&](const Vec& a) {
        Vec r(k);
        for (int j = 0; j < k; ++j) r[j] = dot(a, basis[j]);
        return r;
    };

    // z = z+ - z-, both nonnegative.
    std::vector<Vec> a;
    Vec b;
    for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
        Vec r = project(p.le_rows[i]);
        Vec row(2 * k);
        for (int j = 0; j < k; ++j) {
            row[j] = r[j];
            row[k + j] = -r[j];
        }
        a.push_back(std::move(row));
        b.push_back(p.le_rhs[i] - dot(p.le_rows[i], x0));
    }
    Vec oc = project(p.objective);
    Vec c(2 * k);
    for (int j = 0; j < k; ++j) {
        c[j] = oc[j];
        c[k + j] = -oc[j];
    }
    Result r = detail::Tableau(std::move(a), std::move(b), std::move(c)).run();
    if (r.status != Status::Optimal) return r;
    Vec x = x0;
    for (int j = 0; j < k; ++j) {
        Rational zj = r.x[j] - r.x[k + j];
        if (zj == 0) continue;
        for (int i = 0; i < p.n; ++i) x[i] += zj * basis[j][i];
    }
    r.value += dot(p.objective, x0);
    r.x = std::move(x);
    return r;
}

}  // namespace weylscope::lp
