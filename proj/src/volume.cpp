#include "polyspace/volume.hpp"

#include <bit>
#include <charconv>

#include "polyspace/errors.hpp"

namespace polyspace {

std::string Convention::to_string() const {
    if (!is_affine()) return "homogeneous";
    return "affine:" + std::to_string(eliminated + 1);
}

Convention Convention::parse(std::string_view text, std::size_t n) {
    if (text == "homogeneous" || text == "hom") return homogeneous();
    constexpr std::string_view prefix = "affine:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::size_t j = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), j);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && j >= 1 && j <= n)
            return affine(j - 1);
    }
    throw Error(Errc::ParseError, "convention must be 'homogeneous' or 'affine:<1.." + std::to_string(n) +
                                      ">', got '" + std::string(text) + "'");
}

VolumePolynomial volume_polynomial(const ChamberSignature& sig) {
    const std::size_t n = sig.n();
    const unsigned d = static_cast<unsigned>(n - 3);
    const auto longs = sig.long_sets();
    MultiPoly v(n);
    for (const auto& alpha : monomials_of_degree(n, d)) {
        // sum over long I of (-1)^(n-|I|) * prod_{i not in I} (-1)^alpha_i
        long signed_count = 0;
        for (Mask m : longs) {
            unsigned parity = static_cast<unsigned>(n - static_cast<std::size_t>(std::popcount(m)));
            for (std::size_t i = 0; i < n; ++i)
                if (!((m >> i) & 1u)) parity += alpha[i];
            signed_count += (parity % 2 == 0) ? 1 : -1;
        }
        if (signed_count == 0) continue;
        Rational alpha_factorial = 1;
        for (std::size_t i = 0; i < n; ++i) alpha_factorial *= factorial(alpha[i]);
        v.add_term(alpha, Rational(-signed_count) / (2 * alpha_factorial));
    }
    return {sig, std::move(v)};
}

MultiPoly epsilon_form(const IndexSet& set) {
    std::vector<Rational> coeffs(set.n());
    for (std::size_t i = 0; i < set.n(); ++i) coeffs[i] = set.contains(i) ? 1 : -1;
    return MultiPoly::linear_form(coeffs);
}

Rational volume_sum(const LengthVector& r) {
    require_generic(r);
    const std::size_t n = r.n();
    const unsigned d = static_cast<unsigned>(n - 3);
    const Rational perimeter = r.perimeter();
    Rational total = 0;
    for (Mask m = 1; m <= full_mask(n); ++m) {
        Rational eps = 2 * r.subset_sum(m) - perimeter;
        if (sgn(eps) <= 0) continue;
        Rational term;
        mpz_pow_ui(term.get_num_mpz_t(), eps.get_num_mpz_t(), d);
        mpz_pow_ui(term.get_den_mpz_t(), eps.get_den_mpz_t(), d);
        if ((n - static_cast<std::size_t>(std::popcount(m))) % 2 == 1) term = -term;
        total += term;
    }
    return -total / (2 * factorial(d));
}

Rational volume_value(const LengthVector& r) {
    return evaluate(volume_polynomial(signature(r)).v, r.values());
}

MultiPoly apply_convention(const MultiPoly& v, const Convention& conv) {
    if (!conv.is_affine()) return v;
    const std::size_t n = v.nvars();
    if (conv.eliminated >= n) throw Error(Errc::InvalidArgument, "eliminated variable out of range");
    std::vector<Rational> coeffs(n, Rational(-1));
    coeffs[conv.eliminated] = 0;
    MultiPoly repl = MultiPoly::linear_form(coeffs) + MultiPoly::constant(n, Rational(1));
    return substitute(v, conv.eliminated, repl);
}

MultiPoly derivative_polynomial(const VolumePolynomial& vp, const MultiIndex& alpha, const Convention& conv) {
    if (alpha.size() != vp.n())
        throw Error(Errc::DimensionMismatch, "multi-index length must equal n = " + std::to_string(vp.n()));
    if (conv.is_affine() && alpha[conv.eliminated] != 0)
        throw Error(Errc::AffineIndexUsed, "variable r" + std::to_string(conv.eliminated + 1) +
                                               " is eliminated in convention " + conv.to_string());
    return differentiate(apply_convention(vp.v, conv), alpha);
}

Rational intersection_number(const ChamberSignature& sig, const MultiIndex& alpha, const Convention& conv) {
    if (alpha.size() != sig.n())
        throw Error(Errc::DimensionMismatch, "multi-index length must equal n = " + std::to_string(sig.n()));
    if (alpha.total() != sig.n() - 3)
        throw Error(Errc::WrongTotalDegree, "intersection numbers need |alpha| = n-3 = " +
                                                std::to_string(sig.n() - 3) + ", got " +
                                                std::to_string(alpha.total()));
    return derivative_polynomial(volume_polynomial(sig), alpha, conv).constant_term();
}

WallJump wall_jump(const ChamberSignature& from, const ChamberSignature& to) {
    auto wall = differing_wall(from, to);
    if (!wall) throw Error(Errc::NotAdjacent, "chambers do not differ in exactly one complementary pair");
    return {IndexSet(from.n(), *wall), volume_polynomial(to).v - volume_polynomial(from).v};
}

MultiPoly predicted_wall_jump(const IndexSet& long_before) {
    const std::size_t n = long_before.n();
    const unsigned d = static_cast<unsigned>(n - 3);
    Rational scale = Rational(1) / factorial(d);
    if (long_before.complement_size() % 2 == 1) scale = -scale;
    return epsilon_form(long_before).pow(d) * scale;
}

}  // namespace polyspace
