#include "polyspace/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "polyspace/apolar.hpp"
#include "polyspace/chambers.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/serialize.hpp"
#include "polyspace/volume.hpp"
#include "polyspace/wallcross.hpp"

namespace polyspace {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    int decimal = -1;
    std::string convention = "homogeneous";
    std::string lengths;
    std::string from, to;
    std::string alpha;
    std::string set;
    std::size_t base = 0;  // 1-based, 0 = min element
    std::size_t n = 0;
    std::size_t max_nodes = 200000;
    std::string method = "both";
    std::string class_a, class_b;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) parts.push_back(cur);
    return parts;
}

LengthVector parse_lengths(const std::string& text, const char* flag) {
    if (text.empty()) throw Error(Errc::ParseError, std::string("missing ") + flag);
    std::vector<Rational> r;
    for (const auto& part : split_commas(text)) r.push_back(parse_rational(part));
    return LengthVector(std::move(r));
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& part : split_commas(text)) {
        try {
            std::size_t pos = 0;
            long v = std::stol(part, &pos);
            if (pos != part.size() || v < 0) throw std::invalid_argument(part);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw Error(Errc::ParseError, "expected a non-negative integer, got '" + part + "'");
        }
    }
    return out;
}

json betti_json(const std::vector<std::size_t>& b) { return b; }

json signature_summary(const ChamberSignature& sig) {
    return {{"signature", to_json(sig)}, {"external", is_external(sig)}, {"empty", is_empty_chamber(sig)}};
}

json report_json(const WallCrossingReport& rep) {
    json j;
    j["wall"] = to_json(rep.wall.index_set);
    j["p"] = rep.wall.p();
    j["q"] = rep.wall.q();
    j["dies"] = {{"edges", to_json(rep.dies.edges)}, {"cp_dim", rep.dies.cp_dimension}};
    j["born"] = {{"edges", to_json(rep.born.edges)}, {"cp_dim", rep.born.cp_dimension}};
    j["betti_delta"] = rep.betti_delta;
    if (rep.pd_born) {
        j["pd_born"] = to_json(rep.pd_born->poly());
        j["pd_born_text"] = rep.pd_born->poly().to_string("x");
        j["pd_born_zero_after"] = rep.pd_born_zero_after;
    }
    if (rep.normal_chern) j["normal_chern"] = to_json(rep.normal_chern->poly());
    json dec = json::array();
    for (const auto& d : rep.decomposition_classes)
        dec.push_back({{"power", d.power},
                       {"class", to_json(d.cls.poly())},
                       {"zero_mod_ann", d.zero_mod_ann},
                       {"chamber", rep.decomposition_in_target ? "after" : "before"}});
    j["decomposition_classes"] = dec;
    return j;
}

json validation_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"signature", to_json(rep.chamber)}, {"passed", rep.passed()}, {"checks", checks}};
}

/// Adds "<key>_approx" next to every top-level "p/q" field.
void add_decimals(json& j, int digits) {
    if (digits < 0 || !j.is_object()) return;
    json extra = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string()) continue;
        const auto& s = it.value().get_ref<const std::string&>();
        if (s.find('/') == std::string::npos) continue;
        try {
            extra[it.key() + "_approx"] = "~" + to_decimal(parse_rational(s), digits);
        } catch (const Error&) {
        }
    }
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
}

void render(const json& j, const std::string& format, std::ostream& out) {
    if (format == "text" && j.is_object()) {
        std::size_t width = 0;
        for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            out << std::left << std::setw(static_cast<int>(width)) << it.key() << "  ";
            if (it.value().is_string())
                out << it.value().get<std::string>();
            else
                out << it.value().dump();
            out << '\n';
        }
        return;
    }
    out << j.dump(2) << '\n';
}

json cmd_analyze(const Options& o) {
    const auto r = parse_lengths(o.lengths, "--r");
    json j;
    j["n"] = r.n();
    j["r"] = to_json(r);
    j["perimeter"] = to_json(r.perimeter());
    auto bad = vanishing_set(r);
    j["generic"] = !bad.has_value();
    if (bad) require_generic(r);
    const auto sig = signature(r);
    j.update(signature_summary(sig));
    json longs = json::array();
    for (const auto& s : long_sets(r)) longs.push_back(to_json(s));
    j["long_sets"] = longs;
    return j;
}

json cmd_volume(const Options& o) {
    const auto r = parse_lengths(o.lengths, "--r");
    const auto conv = Convention::parse(o.convention, r.n());
    const auto vp = volume_polynomial(signature(r));
    const auto poly = apply_convention(vp.v, conv);
    return {{"convention", conv.to_string()},
            {"poly", to_json(poly)},
            {"poly_text", poly.to_string("r")},
            {"value_at_r", to_json(evaluate(vp.v, r.values()))},
            {"scale", vp.scale_note()}};
}

json cmd_intersect(const Options& o) {
    const auto r = parse_lengths(o.lengths, "--r");
    const auto conv = Convention::parse(o.convention, r.n());
    auto exps = parse_indices(o.alpha);
    std::vector<unsigned> e(exps.begin(), exps.end());
    const MultiIndex alpha(e);
    return {{"convention", conv.to_string()},
            {"alpha", e},
            {"value", to_json(intersection_number(signature(r), alpha, conv))}};
}

json cmd_betti(const Options& o) {
    const auto r = parse_lengths(o.lengths, "--r");
    const auto conv = Convention::parse(o.convention, r.n());
    const auto sig = signature(r);
    if (is_empty_chamber(sig)) throw Error(Errc::EmptyChamber, "polygon space M(r) is empty");
    json j;
    std::vector<std::size_t> apolar, path;
    if (o.method == "apolar" || o.method == "both") j["apolar"] = apolar = betti_numbers(sig, conv);
    if (o.method == "wallcross" || o.method == "both") j["wallcross"] = path = betti_via_path(r);
    if (o.method == "both") j["agree"] = apolar == path;
    if (j.empty()) throw Error(Errc::ParseError, "--method must be apolar, wallcross or both");
    return j;
}

json cmd_ring(const Options& o) {
    const auto r = parse_lengths(o.lengths, "--r");
    const auto conv = Convention::parse(o.convention, r.n());
    const auto sig = signature(r);
    json gens = json::array();
    for (const auto& level : annihilator_generators(sig, conv)) {
        json polys = json::array(), text = json::array();
        for (const auto& g : level.generators) {
            polys.push_back(to_json(g));
            text.push_back(g.to_string("x"));
        }
        gens.push_back({{"degree", level.degree},
                        {"ann_dimension", level.dimension},
                        {"generators", polys},
                        {"generators_text", text}});
    }
    return {{"convention", conv.to_string()}, {"betti", betti_numbers(sig, conv)}, {"annihilator", gens}};
}

json cmd_pairing(const Options& o) {
    const auto r = parse_lengths(o.lengths, "--r");
    const auto conv = Convention::parse(o.convention, r.n());
    const CohomologyClass a(parse_polynomial(o.class_a, r.n()));
    const CohomologyClass b(parse_polynomial(o.class_b, r.n()));
    return {{"convention", conv.to_string()}, {"value", to_json(poincare_pairing(a, b, signature(r), conv))}};
}

json cmd_pd_class(const Options& o) {
    std::optional<LengthVector> r;
    std::size_t n = o.n;
    if (!o.lengths.empty()) {
        r = parse_lengths(o.lengths, "--r");
        n = r->n();
    }
    if (n < 3) throw Error(Errc::ParseError, "pd-class needs --r or --n");
    const auto elems = parse_indices(o.set);
    const IndexSet set = IndexSet::from_elements(n, elems);
    std::size_t base = o.base == 0 ? set.min_element() : o.base - 1;
    const auto pd = pd_class(set, base);
    const auto nc = normal_bundle_chern(set, base);
    json j{{"set", to_json(set)},
           {"base", base + 1},
           {"pd_class", to_json(pd.poly())},
           {"pd_class_text", pd.poly().to_string("x")},
           {"normal_chern", to_json(nc.poly())},
           {"normal_chern_text", nc.poly().to_string("x")}};
    if (r) {
        const auto conv = Convention::parse(o.convention, n);
        const auto sig = signature(*r);
        j["convention"] = conv.to_string();
        j["epsilon"] = to_json(epsilon(*r, set));
        j["zero_mod_ann"] = is_zero_class(pd, sig, conv);
        json agree = json::object();
        for (auto e : elems)
            if (e - 1 != base) agree[std::to_string(e)] = pd_bases_agree(set, base, e - 1, sig, conv);
        j["base_agreement"] = agree;
    }
    return j;
}

json cmd_wallcross(const Options& o) {
    const auto from = parse_lengths(o.from, "--from");
    const auto to = parse_lengths(o.to, "--to");
    const auto walk = walk_segment(from, to);
    ChamberSignature sig = signature(from);
    json crossings = json::array();
    for (const auto& c : walk.crossings) {
        ChamberSignature next = flip(sig, c.wall.index_set.mask());
        json rec = report_json(crossing_report(sig, next));
        rec["t"] = to_json(c.t);
        rec["before"] = to_json(sig);
        rec["after"] = to_json(next);
        crossings.push_back(std::move(rec));
        sig = std::move(next);
    }
    return {{"from", to_json(from)},
            {"to", to_json(to)},
            {"to_used", to_json(walk.target)},
            {"perturbations", walk.retries},
            {"crossings", crossings}};
}

json cmd_chambers(const Options& o) {
    const auto graph = enumerate_chambers(o.n, o.max_nodes);
    json nodes = json::array(), edges = json::array();
    std::size_t nonempty = 0;
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        const auto& node = graph.nodes[k];
        if (!node.empty) ++nonempty;
        json rec = signature_summary(node.signature);
        rec["id"] = k;
        rec["representative"] = to_json(node.representative);
        nodes.push_back(std::move(rec));
    }
    for (const auto& e : graph.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"wall", to_json(e.wall.index_set)}});
    return {{"n", graph.n},
            {"node_count", graph.nodes.size()},
            {"nonempty_count", nonempty},
            {"edge_count", graph.edges.size()},
            {"nodes", nodes},
            {"edges", edges}};
}

json cmd_validate(const Options& o, bool& all_passed) {
    if (!o.lengths.empty()) {
        const auto r = parse_lengths(o.lengths, "--r");
        const auto sig = signature(r);
        if (is_empty_chamber(sig)) throw Error(Errc::EmptyChamber, "polygon space M(r) is empty");
        auto rep = validate_chamber(sig);
        all_passed = rep.passed();
        return validation_json(rep);
    }
    const auto graph = enumerate_chambers(o.n, o.max_nodes);
    std::size_t checked = 0, passed = 0;
    json failures = json::array();
    for (const auto& node : graph.nodes) {
        if (node.empty) continue;
        ++checked;
        auto rep = validate_chamber(node.signature);
        if (rep.passed())
            ++passed;
        else
            failures.push_back(validation_json(rep));
    }
    all_passed = passed == checked;
    return {{"n", graph.n}, {"chambers_checked", checked}, {"passed", passed}, {"failures", failures}};
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::SingularLength:
        case Errc::NonGenericSegment:
        case Errc::DegenerateWall:
            return kExitSingular;
        case Errc::EmptyChamber:
        case Errc::EmptyTarget:
            return kExitEmpty;
        default:
            return kExitUsage;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polygon space chambers, volumes and cohomology rings", "polyspace"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--decimal", o.decimal, "also print k-digit approximations of rational fields");
    };
    auto with_r = [&](CLI::App* sub, bool required = true) {
        auto opt = sub->add_option("--r", o.lengths, "side lengths, comma separated (integers, p/q, decimals)");
        if (required) opt->required();
    };
    auto with_conv = [&](CLI::App* sub) {
        sub->add_option("--convention", o.convention, "homogeneous (default) or affine:<j>");
    };

    auto* analyze = app.add_subcommand("analyze", "chamber signature, genericity, emptiness");
    with_r(analyze);
    auto* volume = app.add_subcommand("volume", "volume polynomial of the chamber of r");
    with_r(volume);
    with_conv(volume);
    auto* intersect = app.add_subcommand("intersect", "intersection number d^alpha v, |alpha| = n-3");
    with_r(intersect);
    with_conv(intersect);
    intersect->add_option("--alpha", o.alpha, "multi-index, comma separated")->required();
    auto* betti = app.add_subcommand("betti", "even Betti numbers");
    with_r(betti);
    with_conv(betti);
    betti->add_option("--method", o.method, "apolar, wallcross or both");
    auto* ring = app.add_subcommand("ring", "Betti numbers and annihilator generators");
    with_r(ring);
    with_conv(ring);
    auto* pairing = app.add_subcommand("pairing", "Poincare pairing of two classes");
    with_r(pairing);
    with_conv(pairing);
    pairing->add_option("--a", o.class_a, "class as a polynomial in x1..xn")->required();
    pairing->add_option("--b", o.class_b, "class as a polynomial in x1..xn")->required();
    auto* pd = app.add_subcommand("pd-class", "Poincare dual of M_I and normal bundle Chern class");
    with_r(pd, false);
    with_conv(pd);
    pd->add_option("--n", o.n, "number of sides when --r is omitted");
    pd->add_option("--set", o.set, "index set, 1-based, comma separated")->required();
    pd->add_option("--base", o.base, "base index in the set (default: smallest)");
    auto* wc = app.add_subcommand("wallcross", "walls crossed on the segment from r0 to r1");
    wc->add_option("--from", o.from, "start length vector")->required();
    wc->add_option("--to", o.to, "end length vector")->required();
    auto* chambers = app.add_subcommand("chambers", "enumerate all chambers for n sides");
    chambers->add_option("--n", o.n, "number of sides")->required();
    chambers->add_option("--max-nodes", o.max_nodes, "chamber budget");
    auto* validate = app.add_subcommand("validate", "cross-check Betti numbers and wall jumps");
    with_r(validate, false);
    validate->add_option("--n", o.n, "validate every nonempty chamber for n sides");
    validate->add_option("--max-nodes", o.max_nodes, "chamber budget");

    for (auto* sub : {analyze, volume, intersect, betti, ring, pairing, pd, wc, chambers, validate}) common(sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        json result;
        bool passed = true;
        if (analyze->parsed()) result = cmd_analyze(o);
        else if (volume->parsed()) result = cmd_volume(o);
        else if (intersect->parsed()) result = cmd_intersect(o);
        else if (betti->parsed()) result = cmd_betti(o);
        else if (ring->parsed()) result = cmd_ring(o);
        else if (pairing->parsed()) result = cmd_pairing(o);
        else if (pd->parsed()) result = cmd_pd_class(o);
        else if (wc->parsed()) result = cmd_wallcross(o);
        else if (chambers->parsed()) result = cmd_chambers(o);
        else if (validate->parsed()) {
            if (o.lengths.empty() && o.n == 0) throw Error(Errc::ParseError, "validate needs --r or --n");
            result = cmd_validate(o, passed);
        }
        add_decimals(result, o.decimal);
        render(result, o.format, out);
        return passed ? kExitOk : kExitFailure;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace polyspace
