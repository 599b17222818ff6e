#include "cli/convert.hpp"

namespace krull::cli {

Json to_json(const GroupSpec& g) { return Json{{"free_rank", g.free_rank}, {"torsion", g.torsion}}; }

Json to_json(const GroupElement& e) { return coords_of(e); }

Json to_json(const Rational& r) { return Json{{"num", r.num}, {"den", r.den}, {"text", r.str()}}; }

Json to_json(const BoundedSet& s) {
    return Json{{"value", s.value}, {"exact", s.exact}, {"bound_used", s.bound_used}, {"certificate", s.certificate}};
}

Json to_json(const BoundedInt& v) {
    return Json{{"value", v.value}, {"exact", v.exact}, {"bound_used", v.bound_used}, {"certificate", v.certificate}};
}

namespace {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

Json keyed_rows(const std::map<Int, Int>& m) {
    Json rows = Json::array();
    for (const auto& [k, v] : m) rows.push_back({{"k", k}, {"value", v}});
    return rows;
}

}  // namespace

Json to_json(const Expected& e) {
    Json j = Json::object();
    put(j, "atom_count", e.atom_count);
    put(j, "davenport", e.davenport);
    put(j, "davenport_lower_bound", e.davenport_lower_bound);
    put(j, "delta", e.delta);
    put(j, "catenary", e.catenary);
    put(j, "monotone_catenary", e.monotone_catenary);
    put(j, "omega", e.omega);
    put(j, "tame", e.tame);
    if (e.elasticity) j["elasticity"] = e.elasticity->str();
    if (!e.rho.empty()) j["rho"] = keyed_rows(e.rho);
    if (!e.lambda.empty()) j["lambda"] = keyed_rows(e.lambda);
    if (!e.unions.empty()) {
        Json rows = Json::array();
        for (const auto& [k, u] : e.unions) rows.push_back({{"k", k}, {"U", u}});
        j["unions"] = rows;
    }
    put(j, "delta_star_max", e.delta_star_max);
    put(j, "delta_star_second_max", e.delta_star_second_max);
    put(j, "delta_star_contains", e.delta_star_contains);
    put(j, "divisor_theory", e.divisor_theory);
    put(j, "components", e.components);
    put(j, "lifted_atoms_closed_form", e.lifted_atoms_closed_form);
    put(j, "lifted_atoms", e.lifted_atoms);
    return j;
}

Json alphabet_json(const Alphabet& a) {
    Json els = Json::array();
    for (const auto& e : a.elements()) els.push_back(to_json(e));
    return Json{{"group", to_json(a.spec())}, {"elements", els}};
}

Json characteristic_json(const Characteristic& c) {
    Json rows = Json::array();
    for (const auto& [g, m] : c.classes) rows.push_back({{"class", to_json(g)}, {"primes", m}});
    return Json{{"group", to_json(c.group)}, {"classes", rows}};
}

GroupSpec group_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("group must be a JSON object");
    int r = j.value("free_rank", 0);
    std::vector<Int> t = j.value("torsion", std::vector<Int>{});
    return GroupSpec(r, t);
}

GroupElement element_from_json(const GroupSpec& g, const Json& j) {
    if (j.is_number_integer()) return element_from_coords(g, {j.get<Int>()});
    if (!j.is_array()) throw ParseError("group element must be an array of integers");
    return element_from_coords(g, j.get<std::vector<Int>>());
}

std::string canonical_input(const Preset& p) {
    Json j{{"alphabet", alphabet_json(*p.alphabet)}};
    if (p.characteristic) j["characteristic"] = characteristic_json(*p.characteristic);
    return j.dump();
}

}  // namespace krull::cli
