#include "polyspace/chambers.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "polyspace/errors.hpp"
#include "simplex.hpp"

namespace polyspace {

namespace {

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

std::string mask_string(std::size_t n, Mask m) { return IndexSet(n, m).to_string(); }

/// sums[m] = sum of r_i over i in m, for every mask.
std::vector<Rational> subset_sums(const LengthVector& r) {
    const std::size_t total = std::size_t{1} << r.n();
    std::vector<Rational> sums(total);
    sums[0] = 0;
    for (std::size_t m = 1; m < total; ++m) {
        auto low = static_cast<std::size_t>(std::countr_zero(static_cast<Mask>(m)));
        sums[m] = sums[m & (m - 1)] + r[low];
    }
    return sums;
}

}  // namespace

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::size_t n, Mask mask) : n_(n), mask_(mask) {
    if (n == 0 || n > kMaxSides) throw Error(Errc::InvalidArgument, "index set universe out of range");
    if ((mask & ~full_mask(n)) != 0) throw Error(Errc::InvalidArgument, "index set has elements beyond n");
}

IndexSet IndexSet::from_elements(std::size_t n, std::span<const std::size_t> one_based) {
    Mask m = 0;
    for (auto e : one_based) {
        if (e < 1 || e > n)
            throw Error(Errc::InvalidArgument,
                        "index " + std::to_string(e) + " outside 1.." + std::to_string(n));
        m |= Mask{1} << (e - 1);
    }
    return {n, m};
}

std::size_t IndexSet::size() const noexcept { return popcount(mask_); }

std::size_t IndexSet::min_element() const {
    if (mask_ == 0) throw Error(Errc::InvalidArgument, "empty index set has no minimum");
    return static_cast<std::size_t>(std::countr_zero(mask_));
}

std::vector<std::size_t> IndexSet::elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (contains(i)) out.push_back(i + 1);
    return out;
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto e : elements()) {
        if (!first) os << ',';
        first = false;
        os << e;
    }
    os << '}';
    return os.str();
}

// ------------------------------------------------------------ LengthVector

LengthVector::LengthVector(std::vector<Rational> r) : r_(std::move(r)) {
    if (r_.size() < 3) throw Error(Errc::InvalidArgument, "a polygon needs at least 3 sides");
    if (r_.size() > kMaxSides)
        throw Error(Errc::InvalidArgument, "at most " + std::to_string(kMaxSides) + " sides supported");
    for (auto& x : r_) x.canonicalize();
    for (std::size_t i = 0; i < r_.size(); ++i)
        if (sgn(r_[i]) <= 0)
            throw Error(Errc::InvalidArgument,
                        "side length r" + std::to_string(i + 1) + " = " + r_[i].get_str() + " is not positive");
}

Rational LengthVector::perimeter() const {
    return std::accumulate(r_.begin(), r_.end(), Rational(0));
}

Rational LengthVector::subset_sum(Mask mask) const {
    Rational s = 0;
    for (std::size_t i = 0; i < r_.size(); ++i)
        if ((mask >> i) & 1u) s += r_[i];
    return s;
}

// -------------------------------------------------------- ChamberSignature

bool canonical_mask_less(Mask a, Mask b) {
    auto pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on ascending element lists
    while (a && b) {
        auto ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

ChamberSignature::ChamberSignature(std::size_t n, std::vector<Mask> maximal_shorts)
    : n_(n), maximal_(std::move(maximal_shorts)) {
    if (n < 3 || n > kMaxSides) throw Error(Errc::InvalidArgument, "signature needs 3 <= n <= 20");
    const Mask full = full_mask(n);
    for (auto m : maximal_)
        if (m == 0 || m == full || (m & ~full) != 0)
            throw Error(Errc::InvalidArgument, "maximal short sets must be proper and nonempty");
    std::sort(maximal_.begin(), maximal_.end(), canonical_mask_less);
    maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
    for (std::size_t i = 0; i < maximal_.size(); ++i)
        for (std::size_t j = 0; j < maximal_.size(); ++j)
            if (i != j && (maximal_[i] & maximal_[j]) == maximal_[i])
                throw Error(Errc::InvalidArgument, "maximal short sets must form an antichain: " +
                                                       mask_string(n, maximal_[i]) + " inside " +
                                                       mask_string(n, maximal_[j]));
    for (Mask m = 1; m < full; ++m)
        if (is_short(m) == is_short(full & ~m))
            throw Error(Errc::InvalidArgument,
                        "exactly one of " + mask_string(n, m) + " and its complement must be short");
}

ChamberSignature ChamberSignature::from_short_family(std::size_t n, const std::vector<bool>& is_short) {
    const Mask full = full_mask(n);
    std::vector<Mask> maximal;
    for (Mask m = 1; m < full; ++m) {
        if (!is_short[m]) continue;
        bool max = true;
        for (std::size_t b = 0; b < n && max; ++b) {
            Mask bigger = m | (Mask{1} << b);
            if (bigger != m && bigger != full && is_short[bigger]) max = false;
        }
        if (max) maximal.push_back(m);
    }
    return {n, std::move(maximal)};
}

bool ChamberSignature::is_short(Mask mask) const {
    if (mask == 0) return true;
    if (mask == full_mask(n_)) return false;
    return std::any_of(maximal_.begin(), maximal_.end(), [&](Mask m) { return (mask & m) == mask; });
}

std::vector<bool> ChamberSignature::short_family() const {
    const std::size_t total = std::size_t{1} << n_;
    std::vector<bool> fam(total, false);
    for (std::size_t m = 0; m < total; ++m) fam[m] = is_short(static_cast<Mask>(m));
    return fam;
}

std::vector<Mask> ChamberSignature::long_sets() const {
    std::vector<Mask> out;
    const Mask full = full_mask(n_);
    for (Mask m = 1; m <= full; ++m)
        if (!is_short(m)) out.push_back(m);
    std::sort(out.begin(), out.end(), canonical_mask_less);
    return out;
}

bool ChamberSignature::is_maximal_short(Mask mask) const {
    return std::find(maximal_.begin(), maximal_.end(), mask) != maximal_.end();
}

ChamberSignature ChamberSignature::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw Error(Errc::DimensionMismatch, "permutation size mismatch");
    std::vector<Mask> out;
    out.reserve(maximal_.size());
    for (auto m : maximal_) {
        Mask img = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if ((m >> i) & 1u) img |= Mask{1} << perm[i];
        out.push_back(img);
    }
    return {n_, std::move(out)};
}

std::string ChamberSignature::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < maximal_.size(); ++k) {
        if (k) os << ',';
        os << '[';
        auto els = IndexSet(n_, maximal_[k]).elements();
        for (std::size_t i = 0; i < els.size(); ++i) os << (i ? "," : "") << els[i];
        os << ']';
    }
    os << ']';
    return os.str();
}

bool operator<(const ChamberSignature& a, const ChamberSignature& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.maximal_.begin(), a.maximal_.end(), b.maximal_.begin(),
                                        b.maximal_.end(), canonical_mask_less);
}

// ------------------------------------------------------- basic predicates

Rational epsilon(const LengthVector& r, const IndexSet& set) {
    if (set.n() != r.n()) throw Error(Errc::DimensionMismatch, "index set universe differs from n");
    if (!set.is_proper())
        throw Error(Errc::InvalidArgument, "epsilon needs a proper nonempty index set", set.mask());
    return 2 * r.subset_sum(set.mask()) - r.perimeter();
}

std::optional<Mask> vanishing_set(const LengthVector& r) {
    auto sums = subset_sums(r);
    const Mask full = full_mask(r.n());
    const Rational& p = sums[full];
    for (Mask m = 1; m < full; ++m)
        if (2 * sums[m] == p) return m;
    return std::nullopt;
}

bool is_generic(const LengthVector& r) { return !vanishing_set(r).has_value(); }

void require_generic(const LengthVector& r) {
    if (auto m = vanishing_set(r))
        throw Error(Errc::SingularLength,
                    "length vector is not generic: epsilon vanishes for I = " + mask_string(r.n(), *m), *m);
}

std::vector<IndexSet> long_sets(const LengthVector& r) {
    require_generic(r);
    auto sums = subset_sums(r);
    const Mask full = full_mask(r.n());
    std::vector<Mask> masks;
    for (Mask m = 1; m < full; ++m)
        if (2 * sums[m] > sums[full]) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), canonical_mask_less);
    std::vector<IndexSet> out;
    out.reserve(masks.size());
    for (auto m : masks) out.emplace_back(r.n(), m);
    return out;
}

bool is_empty(const LengthVector& r) {
    require_generic(r);
    const Rational p = r.perimeter();
    return std::any_of(r.values().begin(), r.values().end(), [&](const Rational& x) { return 2 * x > p; });
}

ChamberSignature signature(const LengthVector& r) {
    require_generic(r);
    auto sums = subset_sums(r);
    const Mask full = full_mask(r.n());
    std::vector<bool> fam(sums.size());
    for (std::size_t m = 0; m < sums.size(); ++m) fam[m] = 2 * sums[m] < sums[full];
    return ChamberSignature::from_short_family(r.n(), fam);
}

bool is_external(const ChamberSignature& sig) {
    return std::any_of(sig.maximal_shorts().begin(), sig.maximal_shorts().end(),
                       [](Mask m) { return popcount(m) == 1; });
}

bool is_empty_chamber(const ChamberSignature& sig) {
    for (std::size_t i = 0; i < sig.n(); ++i)
        if (sig.is_long(Mask{1} << i)) return true;
    return false;
}

ChamberSignature flip(const ChamberSignature& sig, Mask long_set) {
    const std::size_t n = sig.n();
    const Mask full = full_mask(n);
    const Mask short_side = full & ~long_set;
    if (long_set == 0 || long_set == full || !sig.is_long(long_set))
        throw Error(Errc::NotAFacet, mask_string(n, long_set) + " is not a long proper subset", long_set);
    if (!sig.is_maximal_short(short_side))
        throw Error(Errc::NotAFacet,
                    "complement " + mask_string(n, short_side) + " is not a maximal short set", long_set);
    auto fam = sig.short_family();
    fam[long_set] = true;
    fam[short_side] = false;
    return ChamberSignature::from_short_family(n, fam);
}

std::optional<Mask> differing_wall(const ChamberSignature& from, const ChamberSignature& to) {
    if (from.n() != to.n()) return std::nullopt;
    const std::size_t n = from.n();
    const Mask half = Mask{1} << (n - 1);
    std::optional<Mask> found;
    for (Mask m = 1; m < half; ++m) {
        if (from.is_short(m) == to.is_short(m)) continue;
        if (found) return std::nullopt;
        found = from.is_long(m) ? m : (full_mask(n) & ~m);
    }
    return found;
}

LengthVector external_anchor(std::size_t n, std::size_t j, const Rational& perimeter) {
    if (n < 3 || j >= n) throw Error(Errc::InvalidArgument, "anchor index out of range");
    if (sgn(perimeter) <= 0) throw Error(Errc::InvalidArgument, "perimeter must be positive");
    Rational big = (Rational(1, 2) - Rational(1, 8 * static_cast<long>(n))) * perimeter;
    Rational rest = (perimeter - big) / Rational(static_cast<long>(n - 1));
    std::vector<Rational> r(n, rest);
    r[j] = big;
    return LengthVector(std::move(r));
}

// ---------------------------------------------------- interior points (LP)

namespace {

/// Maximizes the common slack s of: x_i >= s, eps_J(x) <= -s for every
/// maximal short J other than `facet`, eps_facet(x) = 0, sum x <= 1.
std::optional<LengthVector> interior_point(const ChamberSignature& sig, const Rational& perimeter,
                                           std::optional<Mask> facet) {
    const std::size_t n = sig.n();
    const std::size_t nv = n + 1;  // x_0..x_{n-1}, s
    detail::LinearProgram lp;
    lp.objective.assign(nv, Rational(0));
    lp.objective[n] = 1;

    auto add_row = [&](std::vector<Rational> row) {
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(0);
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(nv, Rational(0));
        row[i] = -1;
        row[n] = 1;
        add_row(std::move(row));
    }
    auto eps_row = [&](Mask j, int sign, int slack) {
        std::vector<Rational> row(nv, Rational(0));
        for (std::size_t i = 0; i < n; ++i) row[i] = sign * (((j >> i) & 1u) ? 1 : -1);
        row[n] = slack;
        return row;
    };
    for (auto j : sig.maximal_shorts()) {
        if (facet && *facet == j) continue;
        add_row(eps_row(j, 1, 1));
    }
    if (facet) {
        add_row(eps_row(*facet, 1, 0));
        add_row(eps_row(*facet, -1, 0));
    }
    {
        std::vector<Rational> row(nv, Rational(1));
        row[n] = 0;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }

    auto sol = detail::maximize(lp);
    if (!sol || sgn(sol->value) <= 0) return std::nullopt;
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) total += sol->y[i];
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = sol->y[i] * perimeter / total;
    return LengthVector(std::move(x));
}

bool same_chamber(const LengthVector& r, const ChamberSignature& sig) {
    return is_generic(r) && signature(r) == sig;
}

std::optional<LengthVector> shifted(const LengthVector& base, const std::vector<Rational>& dir,
                                    const Rational& step) {
    std::vector<Rational> x(base.n());
    for (std::size_t i = 0; i < base.n(); ++i) {
        x[i] = base[i] + step * dir[i];
        if (sgn(x[i]) <= 0) return std::nullopt;
    }
    return LengthVector(std::move(x));
}

}  // namespace

std::optional<LengthVector> chamber_center(const ChamberSignature& sig, const Rational& perimeter) {
    if (sgn(perimeter) <= 0) throw Error(Errc::InvalidArgument, "perimeter must be positive");
    return interior_point(sig, perimeter, std::nullopt);
}

std::optional<LengthVector> facet_point(const ChamberSignature& sig, const IndexSet& long_set,
                                        const Rational& perimeter) {
    if (sgn(perimeter) <= 0) throw Error(Errc::InvalidArgument, "perimeter must be positive");
    const Mask short_side = long_set.complement().mask();
    if (!sig.is_maximal_short(short_side)) return std::nullopt;
    return interior_point(sig, perimeter, short_side);
}

AdjacentStep adjacent_representative(const LengthVector& r, const IndexSet& long_set,
                                     const std::optional<LengthVector>& hint) {
    const std::size_t n = r.n();
    if (long_set.n() != n) throw Error(Errc::DimensionMismatch, "index set universe differs from n");
    if (!long_set.is_proper())
        throw Error(Errc::NotAFacet, "wall needs a proper nonempty index set", long_set.mask());
    require_generic(r);
    if (sgn(epsilon(r, long_set)) < 0)
        throw Error(Errc::NotAFacet, long_set.to_string() + " is short at r", long_set.mask());

    const ChamberSignature sig = signature(r);
    const ChamberSignature target = flip(sig, long_set.mask());
    const Mask short_side = long_set.complement().mask();
    const Rational perimeter = r.perimeter();
    const Wall wall{long_set};

    if (hint && hint->n() == n && hint->perimeter() == perimeter && same_chamber(*hint, target)) {
        auto cr = segment_crossings(r, *hint);
        if (cr.size() == 1 && cr.front().wall == wall) {
            const Rational& t = cr.front().t;
            std::vector<Rational> w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = (1 - t) * r[i] + t * (*hint)[i];
            return {LengthVector(std::move(w)), *hint, wall, is_empty_chamber(target)};
        }
    }

    auto wp = interior_point(sig, perimeter, short_side);
    if (!wp)
        throw Error(Errc::DegenerateWall, "no interior point on the wall of " + long_set.to_string(),
                    long_set.mask());

    // u = -(1/p) chi_I + (1/q) chi_{I^c}: keeps the perimeter, lowers eps_I
    std::vector<Rational> u(n);
    const Rational p(static_cast<long>(long_set.size())), q(static_cast<long>(long_set.complement_size()));
    for (std::size_t i = 0; i < n; ++i) u[i] = long_set.contains(i) ? Rational(-1) / p : Rational(1) / q;

    Rational delta = perimeter;
    for (int attempt = 0; attempt < 256; ++attempt, delta /= 2) {
        auto cand = shifted(*wp, u, delta);
        if (cand && same_chamber(*cand, target))
            return {*wp, *cand, wall, is_empty_chamber(target)};
    }
    throw Error(Errc::DegenerateWall, "could not step off the wall of " + long_set.to_string(), long_set.mask());
}

// ------------------------------------------------------------ segments

std::vector<Crossing> segment_crossings(const LengthVector& from, const LengthVector& to) {
    const std::size_t n = from.n();
    if (to.n() != n) throw Error(Errc::DimensionMismatch, "segment endpoints have different n");
    require_generic(from);
    require_generic(to);

    auto s0 = subset_sums(from), s1 = subset_sums(to);
    const Mask full = full_mask(n);
    const Mask half = Mask{1} << (n - 1);

    std::vector<Crossing> out;
    for (Mask m = 1; m < half; ++m) {
        Rational e0 = 2 * s0[m] - s0[full];
        Rational e1 = 2 * s1[m] - s1[full];
        if (sgn(e0) == sgn(e1)) continue;
        Rational t = e0 / (e0 - e1);
        Mask oriented = sgn(e0) > 0 ? m : (full & ~m);
        out.push_back({t, Wall{IndexSet(n, oriented)}});
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.wall.index_set.mask() < b.wall.index_set.mask();
    });
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k].t == out[k - 1].t)
            throw Error(Errc::NonGenericSegment,
                        "walls " + out[k - 1].wall.index_set.to_string() + " and " +
                            out[k].wall.index_set.to_string() + " are crossed simultaneously at t = " +
                            out[k].t.get_str(),
                        out[k].wall.index_set.mask());
    return out;
}

LengthVector nudge_within_chamber(const LengthVector& r, unsigned k) {
    if (k == 0) return r;
    const std::size_t n = r.n();
    std::vector<Rational> w(n);
    Rational mean = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = Rational(static_cast<long>(((i + 1) * (2 * k + 1) * 7919 + 31 * k + i * i) % 97 + 1));
        mean += w[i];
    }
    mean /= Rational(static_cast<long>(n));
    bool all_zero = true;
    for (auto& x : w) {
        x -= mean;
        if (sgn(x) != 0) all_zero = false;
    }
    if (all_zero)
        for (std::size_t i = 0; i < n; ++i) w[i] = Rational(static_cast<long>(2 * i + 1 - n), 1);

    const ChamberSignature sig = signature(r);
    Rational delta = r.perimeter() * Rational(static_cast<long>(k), 1000003);
    for (int attempt = 0; attempt < 256; ++attempt, delta /= 2) {
        auto cand = shifted(r, w, delta);
        if (cand && same_chamber(*cand, sig)) return *cand;
    }
    return r;
}

PathWalk walk_segment(const LengthVector& from, const LengthVector& to, unsigned max_retries) {
    for (unsigned k = 0; k <= max_retries; ++k) {
        LengthVector target = nudge_within_chamber(to, k);
        try {
            return {segment_crossings(from, target), target, k};
        } catch (const Error& e) {
            if (e.code() != Errc::NonGenericSegment) throw;
        }
    }
    throw Error(Errc::NonGenericSegment,
                "segment stayed non-generic after " + std::to_string(max_retries) + " perturbations");
}

// ---------------------------------------------------------- enumeration

std::optional<std::size_t> ChamberGraph::find(const ChamberSignature& sig) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), sig,
                               [](const ChamberNode& node, const ChamberSignature& s) { return node.signature < s; });
    if (it == nodes.end() || !(it->signature == sig)) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

ChamberGraph enumerate_chambers(std::size_t n, std::size_t max_nodes) {
    if (n < 3 || n > kMaxEnumerationSides)
        throw Error(Errc::InvalidArgument,
                    "chamber enumeration supports 3 <= n <= " + std::to_string(kMaxEnumerationSides));
    const Mask full = full_mask(n);

    std::vector<ChamberNode> found;
    std::map<ChamberSignature, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, Mask> edges;  // wall long in .first

    auto add_node = [&](const LengthVector& rep) {
        if (found.size() >= max_nodes)
            throw Error(Errc::BudgetExceeded, "chamber budget of " + std::to_string(max_nodes) + " reached");
        ChamberSignature sig = signature(rep);
        bool empty = is_empty_chamber(sig);
        index.emplace(sig, found.size());
        found.push_back({std::move(sig), rep, empty});
        return found.size() - 1;
    };

    add_node(external_anchor(n, 0, Rational(1)));
    for (std::size_t cur = 0; cur < found.size(); ++cur) {
        const ChamberSignature sig = found[cur].signature;
        const LengthVector rep = found[cur].representative;
        for (Mask short_side : sig.maximal_shorts()) {
            const Mask long_side = full & ~short_side;
            ChamberSignature next = flip(sig, long_side);
            std::size_t other;
            if (auto it = index.find(next); it != index.end()) {
                other = it->second;
            } else {
                if (!facet_point(sig, IndexSet(n, long_side), rep.perimeter())) continue;
                auto step = adjacent_representative(rep, IndexSet(n, long_side));
                other = add_node(step.r_after);
            }
            auto key = std::minmax(cur, other);
            Mask oriented = key.first == cur ? long_side : short_side;
            edges.emplace(std::pair{key.first, key.second}, oriented);
        }
    }

    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return found[a].signature < found[b].signature; });
    std::vector<std::size_t> rank(found.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

    ChamberGraph graph;
    graph.n = n;
    graph.nodes.reserve(found.size());
    for (auto k : order) graph.nodes.push_back(found[k]);
    for (const auto& [key, long_side] : edges) {
        std::size_t a = rank[key.first], b = rank[key.second];
        Mask oriented = long_side;
        if (a > b) {
            std::swap(a, b);
            oriented = full & ~long_side;
        }
        graph.edges.push_back({a, b, Wall{IndexSet(n, oriented)}});
    }
    std::sort(graph.edges.begin(), graph.edges.end(), [](const ChamberEdge& x, const ChamberEdge& y) {
        return std::pair(x.from, x.to) < std::pair(y.from, y.to);
    });
    return graph;
}

ChamberSignature canonical_form_mod_symmetry(const ChamberSignature& sig) {
    std::vector<std::size_t> perm(sig.n());
    std::iota(perm.begin(), perm.end(), 0);
    ChamberSignature best = sig;
    do {
        ChamberSignature img = sig.permuted(perm);
        if (img < best) best = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace polyspace
