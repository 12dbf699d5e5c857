// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polyspace/apolar.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/volume.hpp"
#include "polyspace/wallcross.hpp"

using namespace polyspace;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

LengthVector lv(std::initializer_list<Rational> r) { return LengthVector(std::vector<Rational>(r)); }

const LengthVector kDelta0 = lv({Rational(3, 20), Rational(3, 20), Rational(2, 5), Rational(3, 20), Rational(3, 20)});
const LengthVector kDelta1 =
    lv({Rational(1, 20), Rational(11, 60), Rational(2, 5), Rational(11, 60), Rational(11, 60)});
const LengthVector kEquilateral = lv({1, 1, 1, 1, Rational(11, 10)});
const Convention kHom = Convention::homogeneous();

std::string betti_str(const std::vector<std::size_t>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

void criterion1(Outcome& o) {
    const Rational a = volume_value(kDelta0), b = volume_value(kDelta1);
    o.require(a == Rational(1, 50), "Delta0 volume " + to_string(a));
    o.require(b == Rational(3, 200), "Delta1 volume " + to_string(b));
    o.require(oracle::volume_value(kDelta0.values()) == a, "Delta0 brute-force sum");
    o.require(oracle::volume_value(kDelta1.values()) == b, "Delta1 brute-force sum");
    o.detail << "v(Delta0) = " << to_string(a) << ", v(Delta1) = " << to_string(b);
}

void criterion2(Outcome& o) {
    auto v0 = volume_polynomial(signature(kDelta0)).v;
    auto v1 = volume_polynomial(signature(kDelta1)).v;
    // slice formulas with 1 replaced by the perimeter
    auto h0 = parse_polynomial("(r1+r2+r3+r4+r5 - 2*r3)^2/2", 5, 'r');
    auto h1 = parse_polynomial("2*r1*(r1+r2+r3+r4+r5 - r1 - 2*r3)", 5, 'r');
    o.require(v0 == parse_polynomial("(r1+r2-r3+r4+r5)^2/2", 5, 'r'), "Delta0 closed form");
    o.require(v1 == parse_polynomial("2*r1*(r2-r3+r4+r5)", 5, 'r'), "Delta1 closed form");
    o.require(v0 == h0 && v1 == h1, "homogenized slice formulas");
    o.require(v0 == oracle::volume_poly(kDelta0.values()), "Delta0 brute-force expansion");
    o.require(v1 == oracle::volume_poly(kDelta1.values()), "Delta1 brute-force expansion");
    o.detail << "v0 = " << v0.to_string() << "; v1 = " << v1.to_string();
}

void criterion3(Outcome& o) {
    const auto aff = Convention::affine(4);
    auto s0 = signature(kDelta0), s1 = signature(kDelta1);
    const Rational c33 = intersection_number(s0, MultiIndex{0, 0, 2, 0, 0}, aff);
    const Rational c11 = intersection_number(s1, MultiIndex{2, 0, 0, 0, 0}, aff);
    const Rational c13 = intersection_number(s1, MultiIndex{1, 0, 1, 0, 0}, aff);
    o.require(c33 == 4, "Delta0 d3^2");
    o.require(c11 == -4, "Delta1 d1^2");
    o.require(c13 == -4, "Delta1 d1 d3");
    // second differences of the printed slice expressions
    auto slice0 = [](const std::vector<Rational>& x) -> Rational {
        Rational t = 1 - 2 * x[2];
        return t * t / 2;
    };
    auto slice1 = [](const std::vector<Rational>& x) -> Rational { return 2 * x[0] * (1 - x[0] - 2 * x[2]); };
    std::vector<Rational> p0(kDelta0.values()), p1(kDelta1.values());
    o.require(oracle::second_difference(slice0, p0, 2, 2) == c33, "finite difference d3^2");
    o.require(oracle::second_difference(slice1, p1, 0, 0) == c11, "finite difference d1^2");
    o.require(oracle::second_difference(slice1, p1, 0, 2) == c13, "finite difference d1 d3");
    o.detail << "d3^2 = " << to_string(c33) << ", d1^2 = " << to_string(c11) << ", d1d3 = " << to_string(c13)
             << " (printed in the source as +4)";
}

void criterion4(Outcome& o) {
    struct Case {
        const char* name;
        LengthVector r;
        std::vector<std::size_t> expected;
    };
    for (const auto& c : {Case{"Delta0", kDelta0, {1, 1, 1}}, Case{"Delta1", kDelta1, {1, 2, 1}},
                          Case{"equilateral+", kEquilateral, {1, 5, 1}}}) {
        auto apolar = betti_numbers(signature(c.r), kHom);
        auto path = betti_via_path(c.r);
        o.require(apolar == c.expected, std::string(c.name) + " apolar " + betti_str(apolar));
        o.require(path == c.expected, std::string(c.name) + " wallcross " + betti_str(path));
        o.detail << c.name << " " << betti_str(apolar) << " ";
    }
}

void criterion5(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 4; n <= 8; ++n)
        for (std::size_t j = 0; j < n; ++j) {
            auto sig = signature(external_anchor(n, j, Rational(1)));
            o.require(is_external(sig), "anchor not external");
            auto b = betti_numbers(sig, kHom);
            o.require(b == std::vector<std::size_t>(n - 2, 1), "n=" + std::to_string(n) + " Betti " + betti_str(b));
            auto ann1 = annihilator_basis(volume_polynomial(sig), 1, kHom).size();
            o.require(ann1 == n - 1, "n=" + std::to_string(n) + " dim Ann_1 = " + std::to_string(ann1));
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60, "runtime " + std::to_string(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "n = 4..8, every anchor index, %.2f s", secs);
    o.detail << buf;
}

void criterion6(Outcome& o) {
    std::size_t checked = 0;
    for (std::size_t n = 5; n <= 6; ++n) {
        auto g = enumerate_chambers(n, 100000);
        for (const auto& node : g.nodes) {
            if (node.empty) continue;
            ++checked;
            auto apolar = betti_numbers(node.signature, kHom);
            auto path = betti_via_path(node.representative);
            o.require(path == apolar, node.signature.to_string() + " path " + betti_str(path) + " vs " +
                                          betti_str(apolar));
            o.require(std::equal(apolar.begin(), apolar.end(), apolar.rbegin()),
                      node.signature.to_string() + " not palindromic");
        }
    }
    o.detail << checked << " nonempty chambers (76 at n=5, 1678 at n=6)";
}

void criterion7(Outcome& o) {
    std::size_t edges = 0;
    for (std::size_t n = 5; n <= 6; ++n) {
        auto g = enumerate_chambers(n, 100000);
        std::vector<MultiPoly> brute;
        for (const auto& node : g.nodes) brute.push_back(oracle::volume_poly(node.representative.values()));
        for (const auto& e : g.edges) {
            ++edges;
            auto jump = wall_jump(g.nodes[e.from].signature, g.nodes[e.to].signature);
            auto predicted = predicted_wall_jump(e.wall.index_set);
            o.require(jump.jump == predicted, "edge " + e.wall.index_set.to_string() + " identity");
            o.require(brute[e.to] - brute[e.from] == predicted, "edge " + e.wall.index_set.to_string() + " oracle");
        }
    }
    o.detail << edges << " edges (185 at n=5, 5646 at n=6)";
}

void criterion8(Outcome& o) {
    std::mt19937_64 rng(2024);
    std::size_t points = 0;
    for (std::size_t n = 4; n <= 7; ++n) {
        int found = 0;
        while (found < 100) {
            auto r = oracle::random_generic(rng, n, false);
            if (!oracle::empty_space(r)) continue;
            ++found;
            ++points;
            o.require(volume_sum(LengthVector(r)) == 0, "library sum nonzero");
            o.require(oracle::volume_value(r) == 0, "brute-force sum nonzero");
        }
    }
    o.detail << points << " empty-chamber points";
}

void criterion9(Outcome& o) {
    std::size_t in_ann = 0, not_in_ann = 0;
    for (std::size_t n = 5; n <= 6; ++n) {
        auto g = enumerate_chambers(n, 100000);
        for (const auto& node : g.nodes) {
            if (node.empty) continue;
            for (Mask m = 1; m < full_mask(n); ++m) {
                IndexSet set(n, m);
                if (set.size() < 2) continue;
                const Rational e = epsilon(node.representative, set);
                const bool zero = is_zero_class(pd_class(set, set.min_element()), node.signature, kHom);
                if (sgn(e) > 0) {
                    o.require(zero, "PD of long " + set.to_string() + " not in Ann");
                    ++in_ann;
                } else if (set.size() - 1 <= n - 3) {
                    o.require(!zero, "PD of short " + set.to_string() + " in Ann");
                    ++not_in_ann;
                }
            }
        }
    }
    o.detail << in_ann << " long-set checks, " << not_in_ann << " short-set checks";
}

void criterion10(Outcome& o) {
    std::mt19937_64 rng(99);
    const int kInstances = 500;
    int euler = 0, perm = 0, scale = 0, reverse = 0;
    for (int k = 0; k < kInstances; ++k) {
        const std::size_t n = 4 + rng() % 4;
        auto r = oracle::random_generic(rng, n, true);
        const LengthVector v(r);
        auto sig = signature(v);
        auto poly = volume_polynomial(sig).v;

        MultiPoly e(n);
        for (std::size_t i = 0; i < n; ++i) e += MultiPoly::variable(n, i) * differentiate(poly, MultiIndex::unit(n, i));
        o.require(e == Rational(static_cast<long>(n - 3)) * poly, "Euler identity");
        ++euler;

        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<Rational> moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[p[i]] = r[i];
        auto msig = signature(LengthVector(moved));
        o.require(msig == sig.permuted(p), "signature equivariance");
        o.require(volume_polynomial(msig).v == permute_variables(poly, p), "volume equivariance");
        ++perm;

        std::uniform_int_distribution<long> d(1, 1000);
        Rational c = oracle::frac(d(rng), d(rng));
        std::vector<Rational> scaled(r);
        for (auto& x : scaled) x *= c;
        o.require(signature(LengthVector(scaled)) == sig, "scaling invariance");
        ++scale;
    }
    while (reverse < kInstances) {
        const std::size_t n = 4 + rng() % 4;
        const LengthVector a(oracle::random_generic(rng, n, false)), b(oracle::random_generic(rng, n, false));
        std::vector<Crossing> fwd, back;
        try {
            fwd = segment_crossings(a, b);
            back = segment_crossings(b, a);
        } catch (const Error& err) {
            if (err.code() == Errc::NonGenericSegment) continue;
            throw;
        }
        ++reverse;
        bool ok = fwd.size() == back.size();
        for (std::size_t i = 0; ok && i < fwd.size(); ++i) {
            const auto& g = back[fwd.size() - 1 - i];
            ok = g.t == 1 - fwd[i].t && g.wall.index_set == fwd[i].wall.index_set.complement();
        }
        o.require(ok, "segment reverse symmetry");
    }
    o.detail << "Euler " << euler << ", permutation " << perm << ", scaling " << scale << ", reverse " << reverse;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"volume values", criterion1},
        {"volume polynomials", criterion2},
        {"affine intersection numbers", criterion3},
        {"Betti vectors, apolar vs wall-crossing", criterion4},
        {"external chambers are CP^{n-3}", criterion5},
        {"exhaustive Betti differential test n=5,6", criterion6},
        {"wall-jump identity on every edge n=5,6", criterion7},
        {"volume sum vanishes on empty chambers", criterion8},
        {"PD class coherence n=5,6", criterion9},
        {"property suites", criterion10},
    };
    int failures = 0, index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("criterion %2d %s  %s: %s\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
