#pragma once

// Dense exact linear algebra at desk scale: reduced row echelon form,
// affine subspaces in parametric form, and a two-phase rational simplex
// used to decide strict feasibility (relative-interior witnesses).

#include "arrmorse/rational.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>

namespace arrmorse {

using Mat = std::vector<Vec>;

inline Rational dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vsub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vadd(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vscale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (auto& x : a)
        if (x != 0) return false;
    return true;
}

// In-place RREF. Returns pivot columns.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

inline int rank_of(Mat m) { return (int)rref(m).size(); }

// Basis of the nullspace of the row space of m (right nullspace).
inline Mat nullspace(Mat m, size_t cols) {
    if (m.empty()) {
        Mat basis;
        for (size_t i = 0; i < cols; ++i) {
            Vec e(cols, 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, 0);
        v[f] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m[pi][f];
        basis.push_back(v);
    }
    return basis;
}

struct LinearSolution {
    Vec particular;
    Mat nullbasis;
};

// Solve A x = b; nullopt when inconsistent.
inline std::optional<LinearSolution> solve_linear(const Mat& a, const Vec& b, size_t cols) {
    Mat aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == (int)cols) return std::nullopt;
    Vec x(cols, 0);
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug[pi][cols];
    Mat akern = a;
    return LinearSolution{std::move(x), nullspace(std::move(akern), cols)};
}

// Affine subspace in parametric form: point + row span of dirs.
struct AffineSubspace {
    Vec point;
    Mat dirs; // linearly independent direction rows

    int dim() const { return (int)dirs.size(); }
    size_t ambient() const { return point.size(); }

    bool contains(const Vec& p) const {
        Mat m = dirs;
        m.push_back(vsub(p, point));
        return rank_of(std::move(m)) == (int)dirs.size();
    }
};

inline AffineSubspace full_space(size_t n) {
    Mat dirs;
    for (size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        dirs.push_back(e);
    }
    return AffineSubspace{Vec(n, 0), std::move(dirs)};
}

inline std::optional<AffineSubspace> subspace_from_equations(const Mat& a, const Vec& b, size_t n) {
    auto sol = solve_linear(a, b, n);
    if (!sol) return std::nullopt;
    return AffineSubspace{std::move(sol->particular), std::move(sol->nullbasis)};
}

// Rows spanning {v : v orthogonal to all dirs of s} plus the matching rhs;
// gives an equation system A x = b cutting out s.
inline std::pair<Mat, Vec> subspace_equations(const AffineSubspace& s) {
    Mat normals = nullspace(s.dirs, s.ambient());
    Vec rhs;
    rhs.reserve(normals.size());
    for (auto& row : normals) rhs.push_back(dot(row, s.point));
    return {std::move(normals), std::move(rhs)};
}

inline std::optional<AffineSubspace> intersect(const AffineSubspace& s1, const AffineSubspace& s2) {
    auto [a1, b1] = subspace_equations(s1);
    auto [a2, b2] = subspace_equations(s2);
    for (size_t i = 0; i < a2.size(); ++i) {
        a1.push_back(a2[i]);
        b1.push_back(b2[i]);
    }
    return subspace_from_equations(a1, b1, s1.ambient());
}

// Intersection with a single hyperplane normal.x = off.
// Returns nullopt when empty, otherwise the (possibly unchanged) subspace.
inline std::optional<AffineSubspace> intersect_hyperplane(const AffineSubspace& s,
                                                          const Vec& normal,
                                                          const Rational& off) {
    Vec coeff; // normal restricted to the parameter space
    coeff.reserve(s.dirs.size());
    bool all_zero = true;
    for (auto& d : s.dirs) {
        coeff.push_back(dot(normal, d));
        if (coeff.back() != 0) all_zero = false;
    }
    Rational gap = off - dot(normal, s.point);
    if (all_zero) {
        if (gap == 0) return s;
        return std::nullopt;
    }
    size_t piv = 0;
    while (coeff[piv] == 0) ++piv;
    Vec new_point = vadd(s.point, vscale(gap / coeff[piv], s.dirs[piv]));
    Mat new_dirs;
    for (size_t i = 0; i < s.dirs.size(); ++i) {
        if (i == piv) continue;
        new_dirs.push_back(vsub(s.dirs[i], vscale(coeff[i] / coeff[piv], s.dirs[piv])));
    }
    return AffineSubspace{std::move(new_point), std::move(new_dirs)};
}

// ---------------------------------------------------------------------------
// Rational simplex (Bland's rule), used only through strict_feasible_point.

namespace detail {

struct Tableau {
    Mat rows;            // m x (n+1), last column = rhs
    std::vector<int> basis;
    size_t nvars;

    void pivot(size_t r, size_t c) {
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (size_t j = 0; j <= nvars; ++j) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = (int)c;
    }

    // min cost.x over current feasible tableau; Bland anti-cycling.
    void optimize(Vec& cost_row) {
        for (;;) {
            size_t enter = nvars;
            for (size_t j = 0; j < nvars; ++j) {
                if (cost_row[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == nvars) return;
            size_t leave = rows.size();
            Rational best;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][nvars] / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows.size()) throw std::runtime_error("simplex: unbounded objective");
            pivot(leave, enter);
            Rational f = cost_row[enter];
            for (size_t j = 0; j <= nvars; ++j) cost_row[j] -= f * rows[leave][j];
        }
    }
};

} // namespace detail

// min c.x subject to A x = b, x >= 0. Returns nullopt when infeasible.
inline std::optional<Vec> simplex_min(const Mat& a, const Vec& b, const Vec& c) {
    size_t m = a.size(), n = c.size();
    detail::Tableau t;
    t.nvars = n + m; // artificials appended
    t.basis.resize(m);
    t.rows.assign(m, Vec(t.nvars + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        int s = (b[i] < 0) ? -1 : 1;
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = s * a[i][j];
        t.rows[i][t.nvars] = s * b[i];
        t.rows[i][n + i] = 1;
        t.basis[i] = (int)(n + i);
    }
    // Phase 1: min sum of artificials.
    Vec cost(t.nvars + 1, 0);
    for (size_t j = n; j < t.nvars; ++j) cost[j] = 1;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= t.nvars; ++j) cost[j] -= t.rows[i][j];
    t.optimize(cost);
    if (-cost[t.nvars] != 0) return std::nullopt;
    // Drive leftover artificials out of the basis; rows that cannot be
    // pivoted are redundant (all structural coefficients zero) and dropped.
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] < (int)n) continue;
        for (size_t j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) {
                t.pivot(i, j);
                break;
            }
    }
    detail::Tableau t2;
    t2.nvars = n;
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= (int)n) continue;
        Vec row(t.rows[i].begin(), t.rows[i].begin() + n);
        row.push_back(t.rows[i][t.nvars]);
        t2.rows.push_back(std::move(row));
        t2.basis.push_back(t.basis[i]);
    }
    // Phase 2.
    Vec cost2(n + 1, 0);
    for (size_t j = 0; j < n; ++j) cost2[j] = c[j];
    for (size_t i = 0; i < t2.rows.size(); ++i) {
        if (cost2[t2.basis[i]] == 0) continue;
        Rational f = cost2[t2.basis[i]];
        for (size_t j = 0; j <= n; ++j) cost2[j] -= f * t2.rows[i][j];
    }
    t2.optimize(cost2);
    Vec x(n, 0);
    for (size_t i = 0; i < t2.rows.size(); ++i) x[t2.basis[i]] = t2.rows[i][n];
    return x;
}

// A point satisfying eq_a.x = eq_b and strict_a.x > strict_b (all rows), or
// nullopt. The strict system is solved by maximizing a margin eps in [0,1].
inline std::optional<Vec> strict_feasible_point(const Mat& eq_a, const Vec& eq_b,
                                                const Mat& strict_a, const Vec& strict_b,
                                                size_t n) {
    // Variables: x = u - v (u,v >= 0), eps >= 0, surplus s_i >= 0, slack t >= 0.
    size_t m_eq = eq_a.size(), m_st = strict_a.size();
    size_t nv = 2 * n + 1 + m_st + 1;
    size_t eps_col = 2 * n;
    Mat a;
    Vec b;
    for (size_t i = 0; i < m_eq; ++i) {
        Vec row(nv, 0);
        for (size_t j = 0; j < n; ++j) {
            row[j] = eq_a[i][j];
            row[n + j] = -eq_a[i][j];
        }
        a.push_back(std::move(row));
        b.push_back(eq_b[i]);
    }
    for (size_t i = 0; i < m_st; ++i) {
        Vec row(nv, 0);
        for (size_t j = 0; j < n; ++j) {
            row[j] = strict_a[i][j];
            row[n + j] = -strict_a[i][j];
        }
        row[eps_col] = -1;
        row[2 * n + 1 + i] = -1; // surplus
        a.push_back(std::move(row));
        b.push_back(strict_b[i]);
    }
    {
        Vec row(nv, 0);
        row[eps_col] = 1;
        row[nv - 1] = 1; // eps + slack = 1
        a.push_back(std::move(row));
        b.push_back(Rational(1));
    }
    Vec cost(nv, 0);
    cost[eps_col] = -1; // maximize eps
    auto sol = simplex_min(a, b, cost);
    if (!sol) return std::nullopt;
    if ((*sol)[eps_col] <= 0) return std::nullopt;
    Vec x(n);
    for (size_t j = 0; j < n; ++j) x[j] = (*sol)[j] - (*sol)[n + j];
    return x;
}

} // namespace arrmorse
