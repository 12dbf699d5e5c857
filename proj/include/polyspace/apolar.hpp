#pragma once

#include <cstddef>
#include <vector>

#include "polyspace/chambers.hpp"
#include "polyspace/linalg.hpp"
#include "polyspace/multipoly.hpp"
#include "polyspace/volume.hpp"

namespace polyspace {

/// Homogeneous polynomial in x_1..x_n standing for a class in H^{2d}(M(r)),
/// with x_i the first Chern class c_i. The classes z_i = -2 c_i used for
/// the line bundles L_ii are x_i scaled by -2; there is no separate type.
class CohomologyClass {
public:
    explicit CohomologyClass(MultiPoly poly);

    const MultiPoly& poly() const noexcept { return poly_; }
    /// Degree d of the polynomial (the class lives in H^{2d}); -1 for zero.
    int degree() const { return poly_.degree(); }
    std::size_t nvars() const { return poly_.nvars(); }

    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
        return CohomologyClass(a.poly_ * b.poly_);
    }
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

private:
    MultiPoly poly_;
};

/// Rows: degree-d differential monomials (x_j excluded under Affine(j)).
/// Columns: monomials occurring in the derivatives. Entry: coefficient.
struct Catalecticant {
    std::vector<MultiIndex> row_monomials;
    std::vector<MultiIndex> col_monomials;
    RationalMatrix matrix;
};

Catalecticant catalecticant(const VolumePolynomial& vp, unsigned d, const Convention& conv);

/// Rank of the degree-d catalecticant, i.e. b_{2d}.
std::size_t catalecticant_rank(const VolumePolynomial& vp, unsigned d, const Convention& conv);

/// [b_0, b_2, ..., b_{2(n-3)}]; odd Betti numbers vanish.
std::vector<std::size_t> betti_numbers(const ChamberSignature& sig, const Convention& conv);

/// Basis of the degree-d part of Ann(v) (every monomial when d > n-3).
std::vector<MultiPoly> annihilator_basis(const VolumePolynomial& vp, unsigned d, const Convention& conv);

struct AnnihilatorDegree {
    unsigned degree = 0;
    std::size_t dimension = 0;          ///< dim Ann_d
    std::vector<MultiPoly> generators;  ///< complement of x * Ann_{d-1} in Ann_d
};

/// New generators of Ann(v) in degrees 1..n-2. Candidates are scanned in
/// graded-lex order of their leading free monomial, so output is deterministic.
std::vector<AnnihilatorDegree> annihilator_generators(const ChamberSignature& sig, const Convention& conv);

/// True iff c(d/dr) v == 0.
bool is_zero_class(const CohomologyClass& c, const ChamberSignature& sig, const Convention& conv);

/// (a b)(d/dr) v; requires deg a + deg b = n-3.
Rational poincare_pairing(const CohomologyClass& a, const CohomologyClass& b, const ChamberSignature& sig,
                          const Convention& conv);

/// Rank of the pairing between degree-d and degree-(n-3-d) monomials.
std::size_t pairing_rank(const ChamberSignature& sig, unsigned d, const Convention& conv);

/// (-1)^(p-1) * prod_{j in I, j != base} (x_j + x_base); base is 0-based.
CohomologyClass pd_class(const IndexSet& set, std::size_t base);

/// -2 * sum_{j in I, j != base} x_j; base is 0-based.
CohomologyClass normal_bundle_chern(const IndexSet& set, std::size_t base);

/// Whether two base choices give the same class modulo Ann(v).
bool pd_bases_agree(const IndexSet& set, std::size_t base_a, std::size_t base_b, const ChamberSignature& sig,
                    const Convention& conv);

}  // namespace polyspace
