#include "polyspace/serialize.hpp"

#include "polyspace/errors.hpp"

namespace polyspace {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({{"coeff", to_string(c)}, {"exps", m.exponents()}});
    return out;
}

json to_json(const IndexSet& s) { return s.elements(); }

json to_json(const ChamberSignature& sig) {
    json out = json::array();
    for (auto m : sig.maximal_shorts()) out.push_back(IndexSet(sig.n(), m).elements());
    return out;
}

json to_json(const LengthVector& r) {
    json out = json::array();
    for (const auto& x : r.values()) out.push_back(to_string(x));
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error(Errc::ParseError, "expected a rational string, got " + j.dump());
}

MultiPoly poly_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a list of terms");
    MultiPoly p(nvars);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps"))
            throw Error(Errc::ParseError, "term needs 'coeff' and 'exps': " + term.dump());
        auto exps = term.at("exps").get<std::vector<unsigned>>();
        if (exps.size() != nvars) throw Error(Errc::DimensionMismatch, "term has wrong arity: " + term.dump());
        p.add_term(MultiIndex(std::move(exps)), rational_from_json(term.at("coeff")));
    }
    return p;
}

ChamberSignature signature_from_json(const json& j, std::size_t n) {
    std::vector<Mask> masks;
    for (const auto& set : j) {
        auto elems = set.get<std::vector<std::size_t>>();
        masks.push_back(IndexSet::from_elements(n, elems).mask());
    }
    return {n, std::move(masks)};
}

LengthVector length_vector_from_json(const json& j) {
    std::vector<Rational> r;
    for (const auto& x : j) r.push_back(rational_from_json(x));
    return LengthVector(std::move(r));
}

}  // namespace polyspace
