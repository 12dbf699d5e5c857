#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "polyspace/chambers.hpp"
#include "polyspace/multipoly.hpp"

namespace polyspace {

/// Coordinates in which the volume polynomial is differentiated.
///
/// Homogeneous keeps v as a degree n-3 form in all n lengths. Affine(j)
/// substitutes r_j = 1 - sum_{i != j} r_i, which reproduces slice formulas
/// written on the perimeter-one simplex. The polynomial keeps n variables;
/// variable j simply no longer occurs.
struct Convention {
    enum class Mode { Homogeneous, Affine };

    Mode mode = Mode::Homogeneous;
    std::size_t eliminated = 0;  ///< 0-based, Affine only

    static Convention homogeneous() { return {}; }
    static Convention affine(std::size_t zero_based) { return {Mode::Affine, zero_based}; }

    bool is_affine() const noexcept { return mode == Mode::Affine; }

    /// "homogeneous" or "affine:<1-based index>".
    std::string to_string() const;
    static Convention parse(std::string_view text, std::size_t n);

    friend bool operator==(const Convention&, const Convention&) = default;
};

/// Normalized Duistermaat-Heckman volume of a chamber: the symplectic volume
/// of M(r) is (2 pi)^(n-3) * v(r) for every r in the chamber.
struct VolumePolynomial {
    ChamberSignature chamber;
    MultiPoly v;

    std::size_t n() const { return chamber.n(); }
    std::string scale_note() const { return "(2pi)^(" + std::to_string(n() - 3) + ")"; }
};

/// v = -1/(2 (n-3)!) * sum over long I of (-1)^(n-|I|) eps_I^(n-3), expanded
/// monomial by monomial with the multinomial theorem. Zero for empty chambers.
VolumePolynomial volume_polynomial(const ChamberSignature& sig);

/// eps_I as a linear form in r_1..r_n.
MultiPoly epsilon_form(const IndexSet& set);

/// The same sum evaluated numerically at r, using the sets long at r.
Rational volume_sum(const LengthVector& r);

/// v(r) for the chamber containing r.
Rational volume_value(const LengthVector& r);

MultiPoly apply_convention(const MultiPoly& v, const Convention& conv);

MultiPoly derivative_polynomial(const VolumePolynomial& vp, const MultiIndex& alpha, const Convention& conv);

/// Integral of c^alpha over M(r) for r in the chamber; |alpha| must be n-3.
Rational intersection_number(const ChamberSignature& sig, const MultiIndex& alpha, const Convention& conv);

struct WallJump {
    IndexSet wall;  ///< long in the source chamber
    MultiPoly jump; ///< v_target - v_source
};

/// Difference of the volume polynomials of two adjacent chambers.
WallJump wall_jump(const ChamberSignature& from, const ChamberSignature& to);

/// (-1)^q / (n-3)! * eps_I^(n-3), q = n - |I|: the jump when I goes from long
/// to short.
MultiPoly predicted_wall_jump(const IndexSet& long_before);

}  // namespace polyspace
