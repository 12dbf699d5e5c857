#include "polyspace/apolar.hpp"

#include <map>
#include <optional>

#include "polyspace/errors.hpp"

namespace polyspace {

CohomologyClass::CohomologyClass(MultiPoly poly) : poly_(std::move(poly)) {
    if (!poly_.is_homogeneous())
        throw Error(Errc::InvalidArgument, "cohomology classes must be homogeneous: " + poly_.to_string("x"));
}

namespace {

std::optional<std::size_t> skipped(const Convention& conv) {
    if (conv.is_affine()) return conv.eliminated;
    return std::nullopt;
}

void require_nonempty(const ChamberSignature& sig) {
    if (is_empty_chamber(sig))
        throw Error(Errc::EmptyChamber, "polygon space of chamber " + sig.to_string() + " is empty");
}

std::vector<Rational> coefficients_over(const MultiPoly& p, const std::vector<MultiIndex>& basis,
                                        const std::map<MultiIndex, std::size_t, GrlexGreater>& where) {
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) out.at(where.at(m)) = c;
    return out;
}

MultiPoly from_coefficients(std::size_t nvars, const std::vector<MultiIndex>& basis,
                            const std::vector<Rational>& coeffs) {
    MultiPoly p(nvars);
    for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k], coeffs[k]);
    return p;
}

}  // namespace

Catalecticant catalecticant(const VolumePolynomial& vp, unsigned d, const Convention& conv) {
    const std::size_t n = vp.n();
    if (d > n - 3)
        throw Error(Errc::DegreeOutOfRange,
                    "catalecticant degree " + std::to_string(d) + " outside 0.." + std::to_string(n - 3));
    const MultiPoly f = apply_convention(vp.v, conv);

    Catalecticant cat;
    cat.row_monomials = monomials_of_degree(n, d, skipped(conv));
    std::vector<MultiPoly> derivs;
    derivs.reserve(cat.row_monomials.size());
    std::map<MultiIndex, std::size_t, GrlexGreater> cols;
    for (const auto& alpha : cat.row_monomials) {
        derivs.push_back(differentiate(f, alpha));
        for (const auto& [m, c] : derivs.back().terms()) cols.emplace(m, 0);
    }
    for (auto& [m, idx] : cols) {
        idx = cat.col_monomials.size();
        cat.col_monomials.push_back(m);
    }
    cat.matrix = RationalMatrix(cat.row_monomials.size(), cat.col_monomials.size());
    for (std::size_t r = 0; r < derivs.size(); ++r)
        for (const auto& [m, c] : derivs[r].terms()) cat.matrix(r, cols.at(m)) = c;
    return cat;
}

std::size_t catalecticant_rank(const VolumePolynomial& vp, unsigned d, const Convention& conv) {
    return matrix_rank(catalecticant(vp, d, conv).matrix).rank;
}

std::vector<std::size_t> betti_numbers(const ChamberSignature& sig, const Convention& conv) {
    require_nonempty(sig);
    const auto vp = volume_polynomial(sig);
    std::vector<std::size_t> betti;
    for (unsigned d = 0; d <= sig.n() - 3; ++d) betti.push_back(catalecticant_rank(vp, d, conv));
    return betti;
}

std::vector<MultiPoly> annihilator_basis(const VolumePolynomial& vp, unsigned d, const Convention& conv) {
    const std::size_t n = vp.n();
    std::vector<MultiPoly> out;
    if (d > n - 3) {
        for (const auto& m : monomials_of_degree(n, d, skipped(conv))) {
            MultiPoly p(n);
            p.add_term(m, Rational(1));
            out.push_back(std::move(p));
        }
        return out;
    }
    const auto cat = catalecticant(vp, d, conv);
    // left kernel: combinations of rows (differential monomials) that vanish
    const auto result = matrix_rank(cat.matrix.transpose());
    for (const auto& k : result.kernel) out.push_back(from_coefficients(n, cat.row_monomials, k));
    return out;
}

std::vector<AnnihilatorDegree> annihilator_generators(const ChamberSignature& sig, const Convention& conv) {
    require_nonempty(sig);
    const std::size_t n = sig.n();
    const auto vp = volume_polynomial(sig);
    std::vector<AnnihilatorDegree> out;
    std::vector<MultiPoly> previous;  // basis of Ann_{d-1}; Ann_0 = 0 since v != 0

    for (unsigned d = 1; d <= n - 2; ++d) {
        const auto basis = monomials_of_degree(n, d, skipped(conv));
        std::map<MultiIndex, std::size_t, GrlexGreater> where;
        for (std::size_t k = 0; k < basis.size(); ++k) where.emplace(basis[k], k);

        IncrementalSpan span(basis.size());
        for (const auto& g : previous)
            for (std::size_t i = 0; i < n; ++i) {
                if (conv.is_affine() && i == conv.eliminated) continue;
                span.add(coefficients_over(g * MultiPoly::variable(n, i), basis, where));
            }

        auto ann = annihilator_basis(vp, d, conv);
        AnnihilatorDegree level;
        level.degree = d;
        level.dimension = ann.size();
        for (const auto& candidate : ann)
            if (span.add(coefficients_over(candidate, basis, where))) level.generators.push_back(candidate);
        out.push_back(std::move(level));
        previous = std::move(ann);
    }
    return out;
}

bool is_zero_class(const CohomologyClass& c, const ChamberSignature& sig, const Convention& conv) {
    if (c.nvars() != sig.n()) throw Error(Errc::DimensionMismatch, "class has wrong number of variables");
    if (c.degree() > static_cast<int>(sig.n()) - 3) return true;
    const MultiPoly f = apply_convention(volume_polynomial(sig).v, conv);
    return apply_operator(c.poly(), f).is_zero();
}

Rational poincare_pairing(const CohomologyClass& a, const CohomologyClass& b, const ChamberSignature& sig,
                          const Convention& conv) {
    if (a.nvars() != sig.n() || b.nvars() != sig.n())
        throw Error(Errc::DimensionMismatch, "class has wrong number of variables");
    const int top = static_cast<int>(sig.n()) - 3;
    // the zero polynomial pairs to zero in any degree
    if (a.poly().is_zero() || b.poly().is_zero()) return 0;
    if (a.degree() + b.degree() != top)
        throw Error(Errc::WrongTotalDegree, "pairing needs deg a + deg b = n-3 = " + std::to_string(top));
    const MultiPoly f = apply_convention(volume_polynomial(sig).v, conv);
    return apply_operator((a * b).poly(), f).constant_term();
}

std::size_t pairing_rank(const ChamberSignature& sig, unsigned d, const Convention& conv) {
    const std::size_t n = sig.n();
    if (d > n - 3) throw Error(Errc::DegreeOutOfRange, "pairing degree out of range");
    const MultiPoly f = apply_convention(volume_polynomial(sig).v, conv);
    const auto left = monomials_of_degree(n, d, skipped(conv));
    const auto right = monomials_of_degree(n, static_cast<unsigned>(n - 3 - d), skipped(conv));
    RationalMatrix m(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        const MultiPoly partial = differentiate(f, left[i]);
        for (std::size_t j = 0; j < right.size(); ++j)
            m(i, j) = differentiate(partial, right[j]).constant_term();
    }
    return matrix_rank(m).rank;
}

CohomologyClass pd_class(const IndexSet& set, std::size_t base) {
    const std::size_t n = set.n();
    if (set.size() < 2) throw Error(Errc::InvalidArgument, "pd_class needs |I| >= 2", set.mask());
    if (base >= n || !set.contains(base))
        throw Error(Errc::BaseNotInSet, "base " + std::to_string(base + 1) + " is not in " + set.to_string(),
                    set.mask());
    MultiPoly p = MultiPoly::constant(n, Rational(set.size() % 2 == 0 ? -1 : 1));
    const MultiPoly xb = MultiPoly::variable(n, base);
    for (std::size_t j = 0; j < n; ++j)
        if (j != base && set.contains(j)) p = p * (MultiPoly::variable(n, j) + xb);
    return CohomologyClass(std::move(p));
}

CohomologyClass normal_bundle_chern(const IndexSet& set, std::size_t base) {
    const std::size_t n = set.n();
    if (set.size() < 2) throw Error(Errc::InvalidArgument, "normal_bundle_chern needs |I| >= 2", set.mask());
    if (base >= n || !set.contains(base))
        throw Error(Errc::BaseNotInSet, "base " + std::to_string(base + 1) + " is not in " + set.to_string(),
                    set.mask());
    MultiPoly p(n);
    for (std::size_t j = 0; j < n; ++j)
        if (j != base && set.contains(j)) p += MultiPoly::variable(n, j) * Rational(-2);
    return CohomologyClass(std::move(p));
}

bool pd_bases_agree(const IndexSet& set, std::size_t base_a, std::size_t base_b, const ChamberSignature& sig,
                    const Convention& conv) {
    const auto a = pd_class(set, base_a);
    const auto b = pd_class(set, base_b);
    return is_zero_class(CohomologyClass(a.poly() - b.poly()), sig, conv);
}

}  // namespace polyspace
