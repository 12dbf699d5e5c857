#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

using Mask = std::uint32_t;

/// Largest number of sides supported by the bitmask representation.
inline constexpr std::size_t kMaxSides = 20;

inline Mask full_mask(std::size_t n) { return (Mask{1} << n) - 1; }

/// A subset of {1..n}, stored as a bitmask over 0-based positions.
class IndexSet {
public:
    IndexSet(std::size_t n, Mask mask);
    /// From 1-based element labels.
    static IndexSet from_elements(std::size_t n, std::span<const std::size_t> one_based);

    std::size_t n() const noexcept { return n_; }
    Mask mask() const noexcept { return mask_; }
    std::size_t size() const noexcept;
    std::size_t complement_size() const noexcept { return n_ - size(); }
    bool contains(std::size_t zero_based) const noexcept { return (mask_ >> zero_based) & 1u; }
    bool is_proper() const noexcept { return mask_ != 0 && mask_ != full_mask(n_); }
    IndexSet complement() const { return {n_, full_mask(n_) & ~mask_}; }
    /// Smallest 0-based element; requires a nonempty set.
    std::size_t min_element() const;

    /// Sorted 1-based labels.
    std::vector<std::size_t> elements() const;
    std::string to_string() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::size_t n_;
    Mask mask_;
};

/// Side lengths r_1..r_n, all strictly positive, n >= 3.
class LengthVector {
public:
    explicit LengthVector(std::vector<Rational> r);

    std::size_t n() const noexcept { return r_.size(); }
    const std::vector<Rational>& values() const noexcept { return r_; }
    const Rational& operator[](std::size_t i) const { return r_[i]; }
    Rational perimeter() const;
    Rational subset_sum(Mask mask) const;

    friend bool operator==(const LengthVector&, const LengthVector&) = default;

private:
    std::vector<Rational> r_;
};

/// A chamber encoded by its inclusion-maximal short sets.
class ChamberSignature {
public:
    /// Validates that the down-closure of `maximal_shorts` contains exactly
    /// one set of each complementary pair and that the list is an antichain.
    ChamberSignature(std::size_t n, std::vector<Mask> maximal_shorts);

    /// Builds the signature from a short/long indicator over all masks.
    static ChamberSignature from_short_family(std::size_t n, const std::vector<bool>& is_short);

    std::size_t n() const noexcept { return n_; }
    const std::vector<Mask>& maximal_shorts() const noexcept { return maximal_; }
    bool is_short(Mask mask) const;
    bool is_long(Mask mask) const { return !is_short(mask); }
    /// Indicator over all 2^n masks; the empty set is short, the full set long.
    std::vector<bool> short_family() const;
    /// Every nonempty long set, including the full set.
    std::vector<Mask> long_sets() const;
    bool is_maximal_short(Mask mask) const;

    /// Image under x_i -> x_{perm[i]} (0-based).
    ChamberSignature permuted(std::span<const std::size_t> perm) const;

    std::string to_string() const;

    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
    friend bool operator<(const ChamberSignature& a, const ChamberSignature& b);

private:
    std::size_t n_;
    std::vector<Mask> maximal_;
};

/// Orders masks by cardinality, then lexicographically by sorted elements.
bool canonical_mask_less(Mask a, Mask b);

/// A wall crossed in a definite direction: `index_set` is long before the
/// crossing and short after it.
struct Wall {
    IndexSet index_set;
    std::size_t p() const { return index_set.size(); }
    std::size_t q() const { return index_set.complement_size(); }
    friend bool operator==(const Wall&, const Wall&) = default;
};

Rational epsilon(const LengthVector& r, const IndexSet& set);

/// First proper nonempty set (in mask order) with epsilon = 0, if any.
std::optional<Mask> vanishing_set(const LengthVector& r);
bool is_generic(const LengthVector& r);
/// Throws SingularLength naming the vanishing set.
void require_generic(const LengthVector& r);

/// Proper nonempty long sets, in canonical order.
std::vector<IndexSet> long_sets(const LengthVector& r);
bool is_empty(const LengthVector& r);
ChamberSignature signature(const LengthVector& r);

bool is_external(const ChamberSignature& sig);
/// Polygon space is empty iff some singleton is long.
bool is_empty_chamber(const ChamberSignature& sig);

/// The signature obtained by making `long_set` short and its complement long.
ChamberSignature flip(const ChamberSignature& sig, Mask long_set);

/// Complementary pair flipped between two signatures, oriented long in
/// `from`. nullopt unless exactly one pair differs.
std::optional<Mask> differing_wall(const ChamberSignature& from, const ChamberSignature& to);

/// External representative: r_j = (1/2 - 1/(8n)) * perimeter, all other
/// entries equal. {j} is then a maximal short set.
LengthVector external_anchor(std::size_t n, std::size_t j, const Rational& perimeter);

/// Strictly interior point of the chamber with perimeter `perimeter`, found
/// by maximizing the smallest slack of its defining inequalities. nullopt if
/// the signature is not realized by any length vector.
std::optional<LengthVector> chamber_center(const ChamberSignature& sig, const Rational& perimeter);

/// Point in the relative interior of the facet of `sig` on the wall of
/// `long_set`; nullopt when that wall does not bound the chamber.
std::optional<LengthVector> facet_point(const ChamberSignature& sig, const IndexSet& long_set,
                                        const Rational& perimeter);

struct AdjacentStep {
    LengthVector wall_point;
    LengthVector r_after;
    Wall wall;
    bool target_empty = false;
};

/// Crosses the wall of `long_set` out of the chamber of r. With a `hint`
/// lying in the adjacent chamber the crossing point on the segment r->hint is
/// used; otherwise the wall point is an interior point of the facet.
AdjacentStep adjacent_representative(const LengthVector& r, const IndexSet& long_set,
                                     const std::optional<LengthVector>& hint = std::nullopt);

struct Crossing {
    Rational t;
    Wall wall;
};

/// Walls met by (1-t) from + t to, t in (0,1), in order of travel.
std::vector<Crossing> segment_crossings(const LengthVector& from, const LengthVector& to);

/// Point in the chamber of r used for the k-th retry of a non-generic
/// segment: r + k * delta * u_k with sum(u_k) = 0, delta shrunk until the
/// signature is unchanged.
LengthVector nudge_within_chamber(const LengthVector& r, unsigned k);

struct PathWalk {
    std::vector<Crossing> crossings;
    LengthVector target;  ///< the (possibly nudged) endpoint actually used
    unsigned retries = 0;
};

/// segment_crossings with the nudging retry policy applied to `to`.
PathWalk walk_segment(const LengthVector& from, const LengthVector& to, unsigned max_retries = 64);

struct ChamberNode {
    ChamberSignature signature;
    LengthVector representative;
    bool empty = false;
};

struct ChamberEdge {
    std::size_t from;
    std::size_t to;
    Wall wall;  ///< long in `from`, short in `to`
};

struct ChamberGraph {
    std::size_t n = 0;
    std::vector<ChamberNode> nodes;  ///< sorted by signature
    std::vector<ChamberEdge> edges;  ///< each undirected edge once, from < to
    std::optional<std::size_t> find(const ChamberSignature& sig) const;
};

inline constexpr std::size_t kMaxEnumerationSides = 9;

/// Breadth-first closure over facet crossings from an external chamber.
/// Representatives have perimeter 1. Throws BudgetExceeded past `max_nodes`.
ChamberGraph enumerate_chambers(std::size_t n, std::size_t max_nodes);

/// Lexicographically smallest relabelling of the signature over all
/// permutations of {1..n}.
ChamberSignature canonical_form_mod_symmetry(const ChamberSignature& sig);

}  // namespace polyspace
