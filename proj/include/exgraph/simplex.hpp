#ifndef EXGRAPH_SIMPLEX_HPP
#define EXGRAPH_SIMPLEX_HPP

#include <stdexcept>
#include <vector>

#include "exgraph/rational.hpp"

namespace exgraph {

struct LpResult {
    Rational objective;
    std::vector<Rational> x;     // primal solution
    std::vector<Rational> dual;  // one multiplier per row, >= 0 at optimum
};

/// Exact rational simplex for  max c'x  s.t.  Ax <= b, x >= 0  with b >= 0,
/// so the slack basis is feasible and no phase 1 is needed. Bland's rule
/// (lowest index enters, lowest-index basic variable leaves on ties) keeps
/// the pivot sequence finite and deterministic.
inline LpResult simplex_max(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("b size mismatch");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("A row size mismatch");
    for (const auto& bi : b)
        if (bi < 0) throw std::invalid_argument("simplex_max requires b >= 0");

    const int cols = n + m;  // structural variables then slacks
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> rhs(b);
    std::vector<Rational> red(cols, Rational(0));  // reduced costs
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) red[j] = c[j];
    Rational objective = 0;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (red[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / T[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::runtime_error("LP unbounded");

        // pivot on (leave, enter)
        const Rational piv = T[leave][enter];
        for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rational f = T[i][enter];
            for (int j = 0; j < cols; ++j)
                if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (red[enter] != 0) {
            const Rational f = red[enter];
            for (int j = 0; j < cols; ++j)
                if (T[leave][j] != 0) red[j] -= f * T[leave][j];
            objective += f * rhs[leave];
        }
        basis[leave] = enter;
    }

    LpResult r;
    r.objective = objective;
    r.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) r.x[basis[i]] = rhs[i];
    r.dual.resize(m);
    for (int i = 0; i < m; ++i) r.dual[i] = -red[n + i];
    return r;
}

}  // namespace exgraph

#endif
