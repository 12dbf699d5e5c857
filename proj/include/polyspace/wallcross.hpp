#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyspace/apolar.hpp"
#include "polyspace/chambers.hpp"

namespace polyspace {

/// Change of b_0, b_2, ..., b_{2(n-3)} across a wall with |I_p| = p, q = n-p:
/// +1 at every even degree in [2p-2, 2q-4] when q >= p, -1 at every even
/// degree in [2q-2, 2p-4] when p > q.
std::vector<int> betti_delta(std::size_t p, std::size_t q, std::size_t n);

/// A submanifold M_J(r) of polygons whose edges in J are parallel; it is a
/// copy of CP^{cp_dimension} (empty when cp_dimension < 0).
struct Submanifold {
    IndexSet edges;
    int cp_dimension;
};

struct DecompositionClass {
    unsigned power;           ///< exponent of the normal-bundle Chern class
    CohomologyClass cls;
    bool zero_mod_ann;        ///< status in the chamber named by `in_target`
};

struct WallCrossingReport {
    Wall wall;
    Submanifold dies;  ///< M_{I_p^c}, present before the crossing only
    Submanifold born;  ///< M_{I_p}, present after the crossing only
    std::vector<int> betti_delta;
    /// PD class and normal Chern class of the born submanifold, base = min I_p.
    /// Absent when p < 2 (crossing out of an empty chamber).
    std::optional<CohomologyClass> pd_born;
    std::optional<CohomologyClass> normal_chern;
    bool pd_born_zero_after = false;
    /// q >= p: PD[M_{I_p}] c_1(N')^a, a = 0..q-p, checked after the crossing.
    /// p > q:  PD[M_{I_q}] c_1(N)^a, a = 0..p-q, checked before the crossing.
    std::vector<DecompositionClass> decomposition_classes;
    bool decomposition_in_target = true;
};

WallCrossingReport crossing_report(const ChamberSignature& from, const ChamberSignature& to);

struct BettiWalk {
    std::vector<std::size_t> betti;
    LengthVector anchor;
    LengthVector target;  ///< endpoint actually walked to (nudged if needed)
    std::vector<Crossing> crossings;
};

/// Starts from CP^{n-3} at an external anchor (index `anchor`, default the
/// longest side) and applies betti_delta at each wall met on the way to r.
BettiWalk betti_walk(const LengthVector& r, std::optional<std::size_t> anchor = std::nullopt);
std::vector<std::size_t> betti_via_path(const LengthVector& r, std::optional<std::size_t> anchor = std::nullopt);

struct ValidationCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    ChamberSignature chamber;
    std::vector<ValidationCheck> checks;
    bool passed() const;
};

/// Differential test of one nonempty chamber: wall-crossing Betti numbers
/// against catalecticant ranks, Poincare symmetry, and the wall-jump
/// identity across every facet.
ValidationReport validate_chamber(const ChamberSignature& sig);

}  // namespace polyspace
