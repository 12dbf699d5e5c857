#pragma once

// Small dense exact simplex used to find interior points of chambers and
// facets. Not part of the public interface.

#include <optional>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace::detail {

struct LinearProgram {
    // maximize objective . y  subject to  rows[i] . y <= rhs[i],  y >= 0,
    // with every rhs[i] >= 0 so the slack basis is feasible.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

struct LpSolution {
    Rational value;
    std::vector<Rational> y;
};

/// Bland's rule, so degenerate pivots cannot cycle. nullopt when unbounded.
std::optional<LpSolution> maximize(const LinearProgram& lp);

}  // namespace polyspace::detail
