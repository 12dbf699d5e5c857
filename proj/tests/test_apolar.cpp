#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyspace/apolar.hpp"
#include "polyspace/errors.hpp"

using namespace polyspace;

namespace {

LengthVector lv(std::initializer_list<Rational> r) { return LengthVector(std::vector<Rational>(r)); }

const LengthVector kDelta0 = lv({Rational(3, 20), Rational(3, 20), Rational(2, 5), Rational(3, 20), Rational(3, 20)});
const LengthVector kDelta1 =
    lv({Rational(1, 20), Rational(11, 60), Rational(2, 5), Rational(11, 60), Rational(11, 60)});
const LengthVector kEquilateral =
    lv({Rational(1), Rational(1), Rational(1), Rational(1), Rational(11, 10)});

const Convention kHom = Convention::homogeneous();

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

/// Rank of {d^m v : |m| = d} as coefficient vectors over all monomials.
std::size_t derivative_span_rank(const MultiPoly& v, unsigned d) {
    const std::size_t n = v.nvars();
    const int deg = v.degree();
    if (deg < static_cast<int>(d)) return 0;
    auto cols = monomials_of_degree(n, static_cast<unsigned>(deg) - d);
    std::vector<std::vector<Rational>> rows;
    for (const auto& m : monomials_of_degree(n, d)) {
        auto dv = differentiate(v, m);
        std::vector<Rational> row;
        for (const auto& c : cols) row.push_back(dv.coefficient(c));
        rows.push_back(std::move(row));
    }
    return oracle::rank(rows);
}

bool has_nonzero_sum_linear_annihilator(const VolumePolynomial& vp) {
    for (const auto& q : annihilator_basis(vp, 1, kHom)) {
        Rational s = 0;
        for (const auto& [m, c] : q.terms()) s += c;
        if (s != 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("Betti numbers of the example chambers") {
    CHECK(betti_numbers(signature(kDelta0), kHom) == std::vector<std::size_t>{1, 1, 1});
    CHECK(betti_numbers(signature(kDelta1), kHom) == std::vector<std::size_t>{1, 2, 1});
    CHECK(betti_numbers(signature(kEquilateral), kHom) == std::vector<std::size_t>{1, 5, 1});
    CHECK(betti_numbers(signature(kDelta1), Convention::affine(4)) == std::vector<std::size_t>{1, 2, 1});
    CHECK_THROWS_AS(betti_numbers(signature(lv({1, 1, 5, 1, 1})), kHom), Error);
}

TEST_CASE("catalecticant rank equals the rank of the derivative span") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 4 + rng() % 3;
        const LengthVector r(oracle::random_generic(rng, n, true));
        auto vp = volume_polynomial(signature(r));
        for (unsigned d = 0; d <= n - 3; ++d) {
            CHECK(catalecticant_rank(vp, d, kHom) == derivative_span_rank(vp.v, d));
            CHECK(annihilator_basis(vp, d, kHom).size() + catalecticant_rank(vp, d, kHom) == binom(n + d - 1, d));
        }
        CHECK_THROWS_AS(catalecticant(vp, static_cast<unsigned>(n - 2), kHom), Error);
    }
}

TEST_CASE("external chambers are projective spaces") {
    for (std::size_t n = 4; n <= 8; ++n) {
        auto sig = signature(external_anchor(n, n - 1, Rational(1)));
        CHECK(betti_numbers(sig, kHom) == std::vector<std::size_t>(n - 2, 1));
        CHECK(annihilator_basis(volume_polynomial(sig), 1, kHom).size() == n - 1);
    }
}

TEST_CASE("affine Betti numbers can differ from homogeneous ones") {
    // v is a polynomial in eps_I forms only; eliminating r_5 drops rank in
    // degree 1 when no linear annihilator has a nonzero coefficient sum
    auto sig = signature(kEquilateral);
    CHECK(betti_numbers(sig, kHom) == std::vector<std::size_t>{1, 5, 1});
    CHECK(betti_numbers(sig, Convention::affine(4)) == std::vector<std::size_t>{1, 4, 1});
}

TEST_CASE("affine and homogeneous Betti agree iff a linear annihilator has nonzero sum") {
    for (std::size_t n = 4; n <= 6; ++n) {
        auto g = enumerate_chambers(n, 100000);
        std::size_t mismatched = 0;
        for (const auto& node : g.nodes) {
            if (node.empty) continue;
            auto vp = volume_polynomial(node.signature);
            const bool criterion = has_nonzero_sum_linear_annihilator(vp);
            auto hom = betti_numbers(node.signature, kHom);
            for (std::size_t j = 0; j < n; ++j) {
                const bool same = betti_numbers(node.signature, Convention::affine(j)) == hom;
                CHECK(same == criterion);
                mismatched += !same;
            }
        }
        if (n == 5) CHECK(mismatched > 0);
    }
}

TEST_CASE("Poincare pairing") {
    auto s1 = signature(kDelta1);
    auto x = [](std::size_t i) { return CohomologyClass(MultiPoly::variable(5, i)); };
    CHECK(poincare_pairing(x(0), x(4), s1, kHom) == 2);
    CHECK(poincare_pairing(x(0), x(2), s1, Convention::affine(4)) == -4);
    CHECK_THROWS_AS(poincare_pairing(x(0), x(0) * x(1), s1, kHom), Error);
    CHECK(poincare_pairing(CohomologyClass(MultiPoly(5)), x(0) * x(1), s1, kHom) == 0);
    for (unsigned d = 0; d <= 2; ++d)
        CHECK(pairing_rank(s1, d, kHom) == betti_numbers(s1, kHom)[d]);
    CHECK_THROWS_AS(CohomologyClass(parse_polynomial("x1 + x2^2", 5)), Error);
}

TEST_CASE("PD classes") {
    std::vector<std::size_t> e13{1, 3};
    auto set = IndexSet::from_elements(5, e13);
    CHECK(pd_class(set, 0).poly() == parse_polynomial("-(x3 + x1)", 5));
    CHECK(pd_class(set, 2).poly() == parse_polynomial("-(x1 + x3)", 5));
    std::vector<std::size_t> e124{1, 2, 4};
    CHECK(pd_class(IndexSet::from_elements(5, e124), 0).poly() == parse_polynomial("(x2+x1)*(x4+x1)", 5));
    CHECK(normal_bundle_chern(IndexSet::from_elements(5, e124), 1).poly() == parse_polynomial("-2*x1 - 2*x4", 5));
    CHECK_THROWS_AS(pd_class(set, 1), Error);
    CHECK_THROWS_AS(pd_class(IndexSet(5, 0b1), 0), Error);

    // in Delta^1 the set {1,3} is short: M_{13} is the born CP^1
    auto s1 = signature(kDelta1);
    CHECK_FALSE(is_zero_class(pd_class(set, 0), s1, kHom));
    CHECK(is_zero_class(pd_class(set, 0), signature(kDelta0), kHom));
    CHECK(is_zero_class(CohomologyClass(parse_polynomial("x1^3", 5)), s1, kHom));
}

TEST_CASE("PD classes vanish exactly on long sets for n = 5") {
    auto g = enumerate_chambers(5, 1000);
    for (const auto& node : g.nodes) {
        if (node.empty) continue;
        for (Mask m = 1; m < full_mask(5); ++m) {
            IndexSet set(5, m);
            if (set.size() < 2) continue;
            const bool zero = is_zero_class(pd_class(set, set.min_element()), node.signature, kHom);
            if (node.signature.is_long(m))
                CHECK(zero);
            else if (set.size() - 1 <= 2)
                CHECK_FALSE(zero);
        }
    }
}

TEST_CASE("annihilator generators") {
    for (const auto& r : {kDelta0, kDelta1, kEquilateral}) {
        auto sig = signature(r);
        auto vp = volume_polynomial(sig);
        auto gens = annihilator_generators(sig, kHom);
        REQUIRE(gens.size() == 3);
        std::size_t expected_dim[] = {0, 5 - betti_numbers(sig, kHom)[1], 15 - betti_numbers(sig, kHom)[2], 35};
        for (const auto& level : gens) {
            CHECK(level.dimension == expected_dim[level.degree]);
            for (const auto& q : level.generators) {
                CHECK(apply_operator(q, vp.v).is_zero());
                CHECK(q.degree() == static_cast<int>(level.degree));
            }
        }
    }
}
