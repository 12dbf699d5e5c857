#include "simplex.hpp"

#include "polyspace/errors.hpp"

namespace polyspace::detail {

std::optional<LpSolution> maximize(const LinearProgram& lp) {
    const std::size_t m = lp.rows.size();
    const std::size_t nv = lp.objective.size();
    const std::size_t width = nv + m;  // structural + slack columns

    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.rows[i].size() != nv) throw Error(Errc::DimensionMismatch, "LP row width");
        if (sgn(lp.rhs[i]) < 0) throw Error(Errc::InvalidArgument, "LP needs a feasible slack basis");
        for (std::size_t j = 0; j < nv; ++j) t[i][j] = lp.rows[i][j];
        t[i][nv + i] = 1;
        t[i][width] = lp.rhs[i];
        basis[i] = nv + i;
    }
    // reduced costs: cost[j] = c_j - c_B B^-1 A_j
    std::vector<Rational> cost(width + 1, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j)
            if (sgn(cost[j]) > 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rational ratio = t[i][width] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;

        Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
        }
        if (sgn(cost[enter]) != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution sol;
    sol.y.assign(nv, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nv) sol.y[basis[i]] = t[i][width];
    sol.value = 0;
    for (std::size_t j = 0; j < nv; ++j) sol.value += lp.objective[j] * sol.y[j];
    return sol;
}

}  // namespace polyspace::detail
