#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// Exponent tuple of a monomial, also used as a differentiation order.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : exps_(nvars, 0) {}
    MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
    explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static MultiIndex unit(std::size_t nvars, std::size_t i);

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned total() const noexcept;
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic order, larger monomials first: higher total degree
/// wins, ties broken lexicographically with x1 > x2 > ... .
struct GrlexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All exponent tuples of total degree `degree` in `nvars` variables, in
/// GrlexGreater order. Variables listed in `skip` get exponent 0.
std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned degree,
                                            std::optional<std::size_t> skip = std::nullopt);

/// Sparse multivariate polynomial over Q with canonical (grlex) term order,
/// so two equal polynomials have identical term sequences.
class MultiPoly {
public:
    using TermMap = std::map<MultiIndex, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    /// sum_i coeffs[i] * x_i
    static MultiPoly linear_form(std::span<const Rational> coeffs);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;
    Rational coefficient(const MultiIndex& m) const;
    /// Constant term value; meaningful as "the value" of a constant polynomial.
    Rational constant_term() const;

    void add_term(const MultiIndex& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Human-readable form, e.g. "1/2*x1^2 - x2*x3"; "0" for zero.
    std::string to_string(std::string_view var = "r") const;

private:
    void check_same(const MultiPoly& o) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// d^alpha p / dr^alpha.
MultiPoly differentiate(const MultiPoly& p, const MultiIndex& alpha);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

/// Replaces variable `var` by the polynomial `replacement` (same nvars).
MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& replacement);

/// Result has x_{perm[i]} wherever p has x_i.
MultiPoly permute_variables(const MultiPoly& p, std::span<const std::size_t> perm);

/// Q(d/dr_1, ..., d/dr_n) applied to p.
MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& p);

/// Parses expressions like "-(x1+x3)*(x4+x1)^2 + 3/2*x2" over `nvars`
/// variables named <prefix>1..<prefix>n.
MultiPoly parse_polynomial(std::string_view text, std::size_t nvars, char prefix = 'x');

}  // namespace polyspace
