#include "polyspace/wallcross.hpp"

#include <algorithm>

#include "polyspace/errors.hpp"
#include "polyspace/volume.hpp"

namespace polyspace {

std::vector<int> betti_delta(std::size_t p, std::size_t q, std::size_t n) {
    if (n < 3 || p < 1 || q < 1 || p + q != n)
        throw Error(Errc::BadPartition, "need p + q = n with p, q >= 1 (got p=" + std::to_string(p) +
                                            ", q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
    std::vector<int> delta(n - 2, 0);
    // degree 2k sits at index k
    if (q >= p) {
        for (std::size_t k = p - 1; k + 2 <= q; ++k) delta[k] += 1;
    } else {
        for (std::size_t k = q - 1; k + 2 <= p; ++k) delta[k] -= 1;
    }
    return delta;
}

WallCrossingReport crossing_report(const ChamberSignature& from, const ChamberSignature& to) {
    auto wall_mask = differing_wall(from, to);
    if (!wall_mask) throw Error(Errc::NotAdjacent, "chambers do not differ in exactly one complementary pair");
    const std::size_t n = from.n();
    const IndexSet born_set(n, *wall_mask);
    const IndexSet dies_set = born_set.complement();
    const std::size_t p = born_set.size(), q = n - p;
    const Convention hom = Convention::homogeneous();

    WallCrossingReport rep{
        Wall{born_set},
        Submanifold{dies_set, static_cast<int>(p) - 2},
        Submanifold{born_set, static_cast<int>(q) - 2},
        betti_delta(p, q, n),
        std::nullopt,
        std::nullopt,
        false,
        {},
        q >= p,
    };

    if (p >= 2) {
        rep.pd_born = pd_class(born_set, born_set.min_element());
        rep.normal_chern = normal_bundle_chern(born_set, born_set.min_element());
        rep.pd_born_zero_after = is_zero_class(*rep.pd_born, to, hom);
    }

    const IndexSet& small = q >= p ? born_set : dies_set;
    const ChamberSignature& where = q >= p ? to : from;
    const std::size_t span = q >= p ? q - p : p - q;
    if (small.size() >= 2) {
        const auto pd = pd_class(small, small.min_element());
        const auto normal = normal_bundle_chern(small, small.min_element());
        CohomologyClass cls = pd;
        for (unsigned a = 0; a <= span; ++a) {
            rep.decomposition_classes.push_back({a, cls, is_zero_class(cls, where, hom)});
            cls = cls * normal;
        }
    }
    return rep;
}

BettiWalk betti_walk(const LengthVector& r, std::optional<std::size_t> anchor) {
    require_generic(r);
    if (is_empty(r)) throw Error(Errc::EmptyTarget, "polygon space M(r) is empty");
    const std::size_t n = r.n();
    std::size_t j = 0;
    if (anchor) {
        if (*anchor >= n) throw Error(Errc::InvalidArgument, "anchor index out of range");
        j = *anchor;
    } else {
        j = static_cast<std::size_t>(std::max_element(r.values().begin(), r.values().end()) - r.values().begin());
    }
    LengthVector start = external_anchor(n, j, r.perimeter());
    PathWalk walk = walk_segment(start, r);

    std::vector<long> betti(n - 2, 1);
    for (const auto& c : walk.crossings) {
        auto delta = betti_delta(c.wall.p(), c.wall.q(), n);
        for (std::size_t k = 0; k < delta.size(); ++k) betti[k] += delta[k];
    }
    BettiWalk out{{}, std::move(start), std::move(walk.target), std::move(walk.crossings)};
    for (long b : betti) {
        if (b < 0) throw Error(Errc::InvalidArgument, "wall-crossing walk produced a negative Betti number");
        out.betti.push_back(static_cast<std::size_t>(b));
    }
    return out;
}

std::vector<std::size_t> betti_via_path(const LengthVector& r, std::optional<std::size_t> anchor) {
    return betti_walk(r, anchor).betti;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

namespace {

std::string betti_string(const std::vector<std::size_t>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

}  // namespace

ValidationReport validate_chamber(const ChamberSignature& sig) {
    ValidationReport report{sig, {}};
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    if (is_empty_chamber(sig)) {
        check("nonempty", false, "chamber has a long side; nothing to validate");
        return report;
    }
    auto rep = chamber_center(sig, Rational(1));
    if (!rep) {
        check("realizable", false, "no length vector realizes " + sig.to_string());
        return report;
    }

    const auto apolar = betti_numbers(sig, Convention::homogeneous());
    try {
        const auto path = betti_via_path(*rep);
        check("betti_path_vs_apolar", path == apolar,
              "path " + betti_string(path) + " vs apolar " + betti_string(apolar));
    } catch (const Error& e) {
        check("betti_path_vs_apolar", false, e.what());
    }
    bool symmetric = std::equal(apolar.begin(), apolar.end(), apolar.rbegin());
    check("poincare_duality", symmetric, betti_string(apolar));

    const Mask full = full_mask(sig.n());
    for (Mask short_side : sig.maximal_shorts()) {
        const IndexSet wall(sig.n(), full & ~short_side);
        if (!facet_point(sig, wall, Rational(1))) continue;
        const std::string name = "wall_jump " + wall.to_string();
        const ChamberSignature next = flip(sig, wall.mask());
        const auto jump = wall_jump(sig, next);
        check(name, jump.jump == predicted_wall_jump(wall), jump.jump.to_string());
    }
    return report;
}

}  // namespace polyspace
