#include "irredpoly/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace irredpoly::lp {

namespace {

// Phase-1 simplex on A x = b, x >= 0, b >= 0 (rows pre-normalized).
// Column layout: [structural | slack/surplus | artificial], rhs kept separately.
struct Tableau {
    int rows = 0;
    int cols = 0;  // excluding rhs
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    std::vector<int> basis;      // basis[i] = column basic in row i
    std::vector<Rational> z;     // reduced costs, length cols
    Rational neg_obj = 0;        // -(current phase-1 objective)

    void pivot(int r, int e) {
        const Rational piv = a[r][e];
        for (auto& v : a[r]) v /= piv;
        rhs[r] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][e] == 0) continue;
            const Rational f = a[i][e];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (z[e] != 0) {
            const Rational f = z[e];
            for (int j = 0; j < cols; ++j) z[j] -= f * a[r][j];
            neg_obj -= f * rhs[r];
        }
        basis[r] = e;
    }

    // Bland's rule: smallest eligible indices. Terminates without cycling.
    bool solve() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (z[j] < 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows; ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / a[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded; cannot happen in phase 1
            pivot(leave, enter);
        }
    }
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible(int num_vars,
                                                   const std::vector<Constraint>& cons,
                                                   bool nonneg_vars) {
    if (!nonneg_vars) {
        // Split every free variable as x = u - w with u, w >= 0.
        std::vector<Constraint> split;
        split.reserve(cons.size());
        for (const auto& c : cons) {
            Constraint s;
            s.rel = c.rel;
            s.rhs = c.rhs;
            s.coeffs.reserve(2 * num_vars);
            for (int j = 0; j < num_vars; ++j) s.coeffs.push_back(c.coeffs[j]);
            for (int j = 0; j < num_vars; ++j) s.coeffs.push_back(-c.coeffs[j]);
            split.push_back(std::move(s));
        }
        auto sol = find_feasible(2 * num_vars, split, true);
        if (!sol) return std::nullopt;
        std::vector<Rational> x(num_vars);
        for (int j = 0; j < num_vars; ++j) x[j] = (*sol)[j] - (*sol)[num_vars + j];
        return x;
    }

    const int m = static_cast<int>(cons.size());
    // Normalize rows to rhs >= 0 and count helper columns.
    std::vector<std::vector<Rational>> rows(m);
    std::vector<Rel> rel(m);
    std::vector<Rational> rhs(m);
    for (int i = 0; i < m; ++i) {
        assert(static_cast<int>(cons[i].coeffs.size()) == num_vars);
        rows[i] = cons[i].coeffs;
        rel[i] = cons[i].rel;
        rhs[i] = cons[i].rhs;
        if (rhs[i] < 0) {
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            if (rel[i] == Rel::Le) rel[i] = Rel::Ge;
            else if (rel[i] == Rel::Ge) rel[i] = Rel::Le;
        }
    }
    int n_slack = 0, n_art = 0;
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Rel::Eq) ++n_slack;
        if (rel[i] != Rel::Le) ++n_art;  // Ge and Eq rows need an artificial
    }

    Tableau t;
    t.rows = m;
    t.cols = num_vars + n_slack + n_art;
    t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
    t.rhs = rhs;
    t.basis.assign(m, -1);
    t.z.assign(t.cols, Rational(0));

    int slack_at = num_vars;
    int art_at = num_vars + n_slack;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < num_vars; ++j) t.a[i][j] = rows[i][j];
        if (rel[i] == Rel::Le) {
            t.a[i][slack_at] = 1;
            t.basis[i] = slack_at++;
        } else if (rel[i] == Rel::Ge) {
            t.a[i][slack_at] = -1;
            ++slack_at;
            t.a[i][art_at] = 1;
            t.basis[i] = art_at++;
        } else {
            t.a[i][art_at] = 1;
            t.basis[i] = art_at++;
        }
    }

    // Phase-1 objective: minimize the sum of artificials.
    // Reduced costs: c_j - sum over artificial-basic rows of a[i][j].
    for (int j = num_vars + n_slack; j < t.cols; ++j) t.z[j] = 1;
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= num_vars + n_slack) {
            for (int j = 0; j < t.cols; ++j) t.z[j] -= t.a[i][j];
            t.neg_obj -= t.rhs[i];
        }
    }

    if (!t.solve()) return std::nullopt;
    if (t.neg_obj != 0) return std::nullopt;  // objective > 0: infeasible

    std::vector<Rational> x(num_vars, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < num_vars) x[t.basis[i]] = t.rhs[i];
    return x;
}

int rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (int j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& in,
                                             int ncols) {
    std::vector<std::vector<Rational>> rows = in;
    const int m = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        const Rational d = rows[r][c];
        for (auto& v : rows[r]) v /= d;
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (int j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace irredpoly::lp
