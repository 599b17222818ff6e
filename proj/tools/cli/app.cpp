#include "cli/app.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cli/cache.hpp"
#include "cli/convert.hpp"
#include "cli/input.hpp"
#include "cli/report.hpp"
#include "krull/length_systems.hpp"

namespace krull::cli {

namespace {

struct Globals {
    int threads = 1;
    std::string cache_dir;
    std::string format = "json";
    std::optional<Int> bound;
    std::string output;
    bool timing = false;
    Int cap = 64;
};

class Expectations {
public:
    void check(const std::string& name, const Json& expected, const Json& computed, bool pass, bool exact = true) {
        rows_.push_back({{"name", name}, {"expected", expected}, {"computed", computed}, {"pass", pass},
                         {"exact", exact}, {"enforced", true}});
        if (!pass) failed_ = true;
    }
    void report_only(const std::string& name, const Json& reference, const Json& computed) {
        rows_.push_back({{"name", name}, {"expected", reference}, {"computed", computed}, {"pass", reference == computed},
                         {"exact", true}, {"enforced", false}});
    }
    bool failed() const { return failed_; }
    bool empty() const { return rows_.empty(); }
    void attach(Json& report) const {
        report["expectations"] = rows_;
        report["all_expectations_pass"] = !failed_;
    }

private:
    Json rows_ = Json::array();
    bool failed_ = false;
};

// Lazily built atom set and monoid for one input.
class Session {
public:
    Session(Preset p, const Globals& g) : preset_(std::move(p)), g_(g) {}

    const Preset& preset() const { return preset_; }
    const AtomSet& atoms() {
        if (!atoms_) atoms_ = enumerate_atoms(preset_.alphabet, AtomOptions{g_.cap, g_.threads});
        return *atoms_;
    }
    Monoid& monoid() {
        if (!monoid_) monoid_ = std::make_unique<Monoid>(atoms(), SweepOptions{4000000, 20000000, g_.threads});
        return *monoid_;
    }

private:
    Preset preset_;
    const Globals& g_;
    std::optional<AtomSet> atoms_;
    std::unique_ptr<Monoid> monoid_;
};

Json element_list(const Alphabet& a, const std::vector<std::size_t>& idx) {
    Json j = Json::array();
    for (auto i : idx) j.push_back(to_json(a[i]));
    return j;
}

std::string kind_name(Decomposition::Kind k) {
    switch (k) {
        case Decomposition::Kind::nontrivial: return "nontrivial";
        case Decomposition::Kind::prime: return "prime";
        case Decomposition::Kind::unused: return "unused";
    }
    return "";
}

LengthSet parse_int_list(const std::string& text) {
    LengthSet out;
    std::string cleaned;
    for (char c : text) cleaned += (c == '{' || c == '}' || c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ArgumentError("expected a list of integers, got '" + text + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------- invariants

const std::vector<std::string> kInvariantIds = {"atoms",      "catenary",       "cofinal", "decomposition",
                                                "delta",      "delta_star",     "divisor_theory",
                                                "elasticity", "omega_tame",     "unions"};

struct InvariantOptions {
    std::string only;
    Int k_max = 4;
    Int catenary_bound = 3;
};

std::string max_text(const std::set<Int>& s) { return s.empty() ? "" : std::to_string(*s.rbegin()); }

void compare_invariants(const Preset& p, const Json& res, Expectations& ex) {
    const Expected& e = p.expected;
    if (res.contains("atoms")) {
        const Json& a = res["atoms"];
        if (e.atom_count) ex.check("atom_count", *e.atom_count, a["count"], a["count"] == *e.atom_count);
        if (e.davenport) ex.check("davenport", *e.davenport, a["davenport"], a["davenport"] == *e.davenport);
        if (e.davenport_lower_bound)
            ex.check("davenport_lower_bound", *e.davenport_lower_bound, a["davenport"],
                     a["davenport"].get<Int>() >= *e.davenport_lower_bound);
    }
    if (res.contains("delta") && e.delta) {
        const Json& d = res["delta"];
        ex.check("delta", *e.delta, d["value"], d["value"] == *e.delta, d["exact"].get<bool>());
    }
    if (res.contains("catenary")) {
        const Json& c = res["catenary"];
        if (e.catenary)
            ex.check("catenary", *e.catenary, c["c"]["value"], c["c"]["value"] == *e.catenary, c["c"]["exact"].get<bool>());
        if (e.monotone_catenary)
            ex.check("monotone_catenary", *e.monotone_catenary, c["c_mon"]["value"],
                     c["c_mon"]["value"] == *e.monotone_catenary, c["c_mon"]["exact"].get<bool>());
    }
    if (res.contains("omega_tame")) {
        const Json& w = res["omega_tame"];
        if (e.omega) ex.check("omega", *e.omega, w["omega"], w["omega"] == *e.omega);
        if (e.tame) ex.check("tame", *e.tame, w["tame"], w["tame"] == *e.tame);
    }
    if (res.contains("elasticity") && e.elasticity) {
        const Json& r = res["elasticity"];
        ex.check("elasticity", e.elasticity->str(), r["value"]["text"], r["value"]["text"] == e.elasticity->str(),
                 r["exact"].get<bool>());
    }
    if (res.contains("unions")) {
        std::map<Int, Json> rows, lambdas;
        for (const auto& row : res["unions"]["rows"]) rows[row["k"].get<Int>()] = row;
        for (const auto& row : res["unions"]["lambda"]) lambdas[row["k"].get<Int>()] = row["value"];
        for (const auto& [k, v] : e.rho)
            if (rows.count(k)) ex.check("rho_" + std::to_string(k), v, rows[k]["rho"], rows[k]["rho"] == v);
        for (const auto& [k, u] : e.unions)
            if (rows.count(k)) ex.check("U_" + std::to_string(k), u, rows[k]["U"], rows[k]["U"] == u);
        for (const auto& [k, v] : e.lambda)
            if (lambdas.count(k)) ex.check("lambda_" + std::to_string(k), v, lambdas[k], lambdas[k] == v);
    }
    if (res.contains("delta_star") && res["delta_star"].contains("value")) {
        LengthSet v = res["delta_star"]["value"]["value"].get<LengthSet>();
        std::set<Int> s(v.begin(), v.end());
        if (e.delta_star_max)
            ex.check("delta_star_max", *e.delta_star_max, s.empty() ? Json() : Json(*s.rbegin()),
                     !s.empty() && *s.rbegin() == *e.delta_star_max);
        if (e.delta_star_second_max) {
            std::optional<Int> second;
            if (s.size() >= 2) second = *std::next(s.rbegin());
            ex.check("delta_star_second_max", *e.delta_star_second_max, second ? Json(*second) : Json(),
                     second == e.delta_star_second_max);
        }
        if (e.delta_star_contains) {
            bool ok = std::all_of(e.delta_star_contains->begin(), e.delta_star_contains->end(),
                                  [&](Int x) { return s.count(x) > 0; });
            ex.check("delta_star_contains", *e.delta_star_contains, v, ok);
        }
    }
    if (res.contains("divisor_theory") && e.divisor_theory)
        ex.check("divisor_theory", *e.divisor_theory, res["divisor_theory"]["value"],
                 res["divisor_theory"]["value"] == *e.divisor_theory);
    if (res.contains("decomposition") && e.components)
        ex.check("components", *e.components, res["decomposition"]["components"],
                 res["decomposition"]["components"] == *e.components);
}

Json run_invariants(Session& s, Cache& cache, const Globals& g, const InvariantOptions& o, Expectations& ex) {
    std::set<std::string> wanted;
    if (o.only.empty()) {
        wanted.insert(kInvariantIds.begin(), kInvariantIds.end());
    } else {
        std::istringstream is(o.only);
        std::string id;
        while (std::getline(is, id, ','))
            if (!id.empty()) {
                if (std::find(kInvariantIds.begin(), kInvariantIds.end(), id) == kInvariantIds.end())
                    throw ArgumentError("unknown invariant '" + id + "'");
                wanted.insert(id);
            }
    }
    const Preset& p = s.preset();
    const Int bound = g.bound.value_or(6);
    const std::string input = canonical_input(p);
    auto cached = [&](const std::string& id, const Json& bounds, const std::function<Json()>& f) {
        return cache.get_or_compute(input + "|" + bounds.dump() + "|" + id, f);
    };

    std::set<Int> union_ks, lambda_ks;
    for (Int k = 1; k <= o.k_max; ++k) union_ks.insert(k), lambda_ks.insert(k);
    for (const auto& [k, v] : p.expected.rho) union_ks.insert(k);
    for (const auto& [k, v] : p.expected.unions) union_ks.insert(k);
    for (const auto& [k, v] : p.expected.lambda) lambda_ks.insert(k);

    Json res = Json::object();
    const Json cap{{"cap", g.cap}};
    if (wanted.count("atoms"))
        res["atoms"] = cached("atoms", cap, [&] {
            const auto& a = s.atoms();
            return Json{{"count", a.size()}, {"davenport", a.davenport}, {"no_zero_sum", a.no_zero_sum}};
        });
    if (wanted.count("delta"))
        res["delta"] = cached("delta", {{"cap", g.cap}, {"bound", bound}}, [&] { return to_json(delta_set(s.monoid(), bound)); });
    if (wanted.count("catenary")) {
        Json key{{"cap", g.cap}, {"bound", o.catenary_bound}};
        if (p.expected.monotone_catenary) key["closed_form_mon"] = *p.expected.monotone_catenary;
        res["catenary"] = cached("catenary", key, [&] {
            auto c = monoid_catenary(s.monoid(), o.catenary_bound, p.expected.monotone_catenary);
            return Json{{"c", to_json(c.c)}, {"c_eq", to_json(c.c_eq)}, {"c_adj", to_json(c.c_adj)}, {"c_mon", to_json(c.c_mon)}};
        });
    }
    if (wanted.count("omega_tame"))
        res["omega_tame"] = cached("omega_tame", cap, [&] {
            return Json{{"omega", s.monoid().monoid_omega()}, {"tame", s.monoid().monoid_tame()}, {"exact", true}};
        });
    if (wanted.count("elasticity"))
        res["elasticity"] = cached("elasticity", {{"cap", g.cap}, {"k_max", o.k_max}}, [&] {
            auto e = elasticity(s.monoid(), o.k_max);
            return Json{{"value", to_json(e.value)}, {"exact", e.exact}, {"bound_used", e.bound_used}};
        });
    if (wanted.count("unions"))
        res["unions"] = cached("unions", {{"cap", g.cap}, {"union_ks", union_ks}, {"lambda_ks", lambda_ks}}, [&] {
            Json rows = Json::array(), lambdas = Json::array();
            for (Int k : union_ks) {
                auto u = s.monoid().unions(k);
                rows.push_back({{"k", k}, {"U", u.U}, {"rho", u.rho}, {"lambda", u.lambda}});
            }
            for (Int k : lambda_ks) lambdas.push_back({{"k", k}, {"value", s.monoid().lambda(k)}});
            return Json{{"rows", rows}, {"lambda", lambdas}};
        });
    if (wanted.count("delta_star"))
        res["delta_star"] = cached("delta_star", cap, [&]() -> Json {
            if (p.alphabet->size() > 20) return Json{{"skipped", "alphabet has more than 20 elements"}};
            auto d = delta_star(s.atoms(), g.threads);
            Json w = Json::array();
            for (const auto& [dist, subset] : d.witnesses)
                w.push_back({{"d", dist}, {"subset", element_list(*p.alphabet, subset)}});
            return Json{{"value", to_json(d.value)}, {"witnesses", w}, {"subsets_examined", d.subsets_examined}};
        });
    if (wanted.count("divisor_theory"))
        res["divisor_theory"] = cached("divisor_theory", cap, [&] {
            auto d = check_divisor_theory(p, s.atoms());
            return Json{{"value", d.value},
                        {"reason", d.reason},
                        {"cyclic_criterion", d.cyclic_criterion ? Json(*d.cyclic_criterion) : Json()}};
        });
    if (wanted.count("cofinal"))
        res["cofinal"] = cached("cofinal", cap, [&] { return Json(check_cofinal(s.atoms())); });
    if (wanted.count("decomposition"))
        res["decomposition"] = cached("decomposition", cap, [&] {
            auto d = decompose(s.atoms());
            Json parts = Json::array();
            for (std::size_t i = 0; i < d.parts.size(); ++i)
                parts.push_back({{"kind", kind_name(d.kinds[i])}, {"elements", element_list(*p.alphabet, d.parts[i])}});
            return Json{{"components", d.nontrivial()}, {"parts", parts}};
        });
    compare_invariants(p, res, ex);
    return res;
}

// ---------------------------------------------------------------- other commands

Json run_atoms(Session& s, Cache& cache, const Globals& g) {
    const std::string material = canonical_input(s.preset()) + "|" + Json{{"cap", g.cap}}.dump() + "|atom_list";
    return cache.get_or_compute(material, [&] {
        const auto& a = s.atoms();
        Json list = Json::array();
        for (std::size_t i = 0; i < a.size(); ++i)
            list.push_back({{"index", i}, {"atom", to_string(a.atom(i))}, {"length", a.length(i)}});
        return Json{{"count", a.size()}, {"davenport", a.davenport}, {"no_zero_sum", a.no_zero_sum}, {"atoms", list}};
    });
}

Json run_factorize(Session& s, const Globals& g, const std::string& block) {
    if (block.empty()) throw ArgumentError("factorize needs --block");
    const auto& a = s.atoms();
    Sequence b = parse_sequence(s.preset().alphabet, block);
    auto z = factorize(a, b);
    Json fs = Json::array();
    LengthSet lengths;
    for (const auto& f : z) {
        Json parts = Json::array();
        for (std::size_t i = 0; i < f.counts.size(); ++i)
            if (f.counts[i] > 0) parts.push_back({{"atom", to_string(a.atom(i))}, {"count", f.counts[i]}});
        fs.push_back({{"length", f.length()}, {"atoms", parts}});
        lengths.push_back(f.length());
    }
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    auto prof = length_profile(lengths);
    auto cat = catenary_profile(z, g.threads);
    return Json{{"block", to_string(b)},
                {"factorization_count", z.size()},
                {"factorizations", fs},
                {"lengths", prof.lengths},
                {"delta", prof.delta},
                {"elasticity", to_json(prof.elasticity)},
                {"catenary", {{"c", cat.c}, {"c_eq", cat.c_eq}, {"c_adj", cat.c_adj}, {"c_mon", cat.c_mon}}}};
}

Json run_transfer(const Globals& g, const std::string& map_spec, Expectations& ex) {
    if (map_spec.empty()) throw ArgumentError("transfer-check needs --map (prop712, prop713, collapse or a file)");
    const Int bound = g.bound.value_or(8);
    TransferMap m = load_transfer_map(map_spec);
    const std::string& map_name = m.name();
    auto c = check_transfer(m, bound, g.threads);
    auto l = lengths_preserved(m, bound);
    Json res{{"map", map_name},
             {"size_bound", bound},
             {"source", alphabet_json(*m.source())},
             {"target", alphabet_json(*m.target())},
             {"t1_ok", c.t1_ok},
             {"t2_ok", c.t2_ok},
             {"counterexample", c.counterexample ? Json(*c.counterexample) : Json()},
             {"source_blocks", c.source_blocks},
             {"target_blocks", c.target_blocks},
             {"lengths_preserved", {{"ok", l.ok}, {"violation", l.violation ? Json(*l.violation) : Json()}, {"blocks", l.blocks}}}};
    if (map_name == "collapse") {
        ex.check("t1_ok", false, c.t1_ok, !c.t1_ok);
    } else {
        ex.check("t1_ok", true, c.t1_ok, c.t1_ok);
        ex.check("t2_ok", true, c.t2_ok, c.t2_ok);
        ex.check("lengths_preserved", true, l.ok, l.ok);
    }
    return res;
}

Json run_atom_count(Session& s, Cache& cache, const Globals& g, Int brute_columns, Expectations& ex) {
    const Preset& p = s.preset();
    Characteristic c = p.characteristic ? *p.characteristic : Characteristic{p.alphabet->spec(), {}};
    if (!p.characteristic)
        for (const auto& e : p.alphabet->elements()) c.classes.emplace_back(e, 1);
    const std::string material = canonical_input(p) + "|" + Json{{"cap", g.cap}, {"brute_force_columns", brute_columns}}.dump() + "|lifted_atoms";
    Json res = cache.get_or_compute(material, [&] {
        auto l = count_lifted_atoms(c, static_cast<std::size_t>(brute_columns), AtomOptions{g.cap, g.threads});
        return Json{{"formula", l.formula},
                    {"brute_force", l.brute_force ? Json(*l.brute_force) : Json()},
                    {"support_atoms", l.support_atoms},
                    {"characteristic", characteristic_json(c)}};
    });
    if (!res["brute_force"].is_null())
        ex.check("formula_matches_brute_force", res["formula"], res["brute_force"], res["formula"] == res["brute_force"]);
    if (p.expected.lifted_atoms)
        ex.check("lifted_atoms", *p.expected.lifted_atoms, res["formula"], res["formula"] == *p.expected.lifted_atoms);
    if (p.expected.lifted_atoms_closed_form) {
        ex.report_only("lifted_atoms_closed_form", *p.expected.lifted_atoms_closed_form, res["formula"]);
        res["closed_form_flagged"] = res["formula"] != *p.expected.lifted_atoms_closed_form;
    }
    return res;
}

Json run_fit(const std::string& fit, Int fit_d) {
    LengthSet l = parse_int_list(fit);
    auto pr = fit_progression(l);
    Json f{{"set", l}, {"is_ap", pr.is_ap}, {"d", pr.d}};
    Int d = fit_d > 0 ? fit_d : pr.d;
    if (d > 0) {
        auto a = fit_aamp(l, d);
        if (a)
            f["aamp"] = {{"y", a->y}, {"d", a->d}, {"period", a->period}, {"bound", a->bound}, {"central_max", a->central_max}};
    }
    return Json{{"fit", f}};
}

Json run_lengths(Session& s, const Globals& g, bool closure, const std::vector<std::string>& pair, Expectations& ex) {
    const Preset& p = s.preset();
    const Int bound = g.bound.value_or(6);
    Json res = Json::object();
    std::optional<LengthSystemFamily> fam;
    if (p.family == "five_point" || p.name == "cyclic:3") fam = LengthSystemFamily::c3();
    if (p.family == "prop713" || p.name == "cyclic:4") fam = LengthSystemFamily::c4();
    if (p.family == "thm74") fam = LengthSystemFamily::thm74(std::stoll(p.params.at("r")), std::stoll(p.params.at("alpha")));

    if (!pair.empty()) {
        if (pair.size() != 2) throw ArgumentError("--pair expects two sets");
        auto r = probe_pair(s.atoms(), parse_int_list(pair[0]), parse_int_list(pair[1]), 2 * bound,
                            SweepOptions{4000000, 20000000, g.threads});
        res["pair"] = {{"status", to_string(r.status)}, {"l1", r.l1}, {"l2", r.l2}, {"sumset", r.sum},
                       {"verification_bound", r.verification_bound}, {"note", r.note}};
        return res;
    }

    if (closure) {
        auto r = additive_closure_probe(s.atoms(), bound, SweepOptions{4000000, 20000000, g.threads});
        Json j{{"status", to_string(r.status)},
               {"collection_bound", r.collection_bound},
               {"verification_bound", r.verification_bound},
               {"sets_collected", r.sets_collected},
               {"pairs_checked", r.pairs_checked},
               {"note", r.note}};
        if (r.status != ClosureProbe::Status::closed_within_bound) j["witness"] = {{"l1", r.l1}, {"l2", r.l2}, {"sumset", r.sum}};
        res["closure"] = j;
        return res;
    }

    Monoid& h = s.monoid();
    std::set<LengthSet> sets;
    for (Int k = 1; k <= bound; ++k)
        for (const Key& key : h.products(k)) sets.insert(h.lengths(unpack(key)));
    Json rows = Json::array();
    std::size_t non_members = 0;
    for (const auto& l : sets) {
        Json row{{"L", l}};
        if (fam) {
            auto m = member(*fam, l);
            row["member"] = m.member;
            if (m.member) row["params"] = {{"y", m.y}, {"k", m.k}, {"form", m.form}};
            if (!m.member) ++non_members;
        }
        rows.push_back(row);
    }
    res["product_bound"] = bound;
    res["length_sets"] = rows;
    if (fam) {
        res["family"] = fam->name();
        ex.check("family_membership", 0, non_members, non_members == 0);
    }
    return res;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic of Krull monoids with prescribed class groups and prime classes", "krull-arith"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir, "result cache directory (KRULL_ARITH_CACHE takes precedence)");
    app.add_option("--format", g.format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    app.add_option("--bound", g.bound, "product or size bound")->check(CLI::PositiveNumber);
    app.add_option("--output,--out,-o", g.output, "write the report to a file");
    app.add_option("--cap", g.cap, "multiplicity cap for atom enumeration")->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "include wall-clock timing in the report");

    InputOptions in;
    auto add_input = [&](CLI::App* c) {
        c->add_option("--preset,--family", in.preset, "preset name, e.g. thm74, thm74:2:1, cyclic:5");
        c->add_option("--param", in.params, "preset parameter key=value");
        c->add_option("--r", in.r);
        c->add_option("--alpha", in.alpha);
        c->add_option("--n", in.n);
        c->add_option("--q", in.q);
        c->add_option("--type", in.type);
        c->add_option("--spl", in.spl);
        c->add_option("--include-zero", in.include_zero);
        c->add_option("--group", in.group, "group as JSON, e.g. {\"free_rank\":1}");
        c->add_option("--set", in.set, "elements as JSON, e.g. [[1],[-1]]");
        c->add_option("--input", in.file, "JSON file with group/set or a defining matrix");
    };

    auto* atoms = app.add_subcommand("atoms", "enumerate the atoms of B(G0)");
    add_input(atoms);
    auto* fact = app.add_subcommand("factorize", "all factorizations of a block");
    add_input(fact);
    std::string block;
    fact->add_option("--block", block, "block, e.g. \"(1)^2 * (-1)^2\"")->required();
    auto* inv = app.add_subcommand("invariants", "arithmetical invariants with expectation checks");
    add_input(inv);
    InvariantOptions iopt;
    inv->add_option("--only", iopt.only, "comma-separated subset of invariants");
    inv->add_option("--k-max", iopt.k_max, "largest k for U_k, rho_k, lambda_k")->check(CLI::PositiveNumber);
    inv->add_option("--catenary-bound", iopt.catenary_bound, "product bound for catenary degrees")->check(CLI::Range(2, 64));
    auto* tr = app.add_subcommand("transfer-check", "verify (T1)/(T2) for a built-in map");
    std::string map_name;
    tr->add_option("--map", map_name, "prop712, prop713, collapse (optionally as builtin:NAME) or a JSON map file")->required();
    auto* ac = app.add_subcommand("atom-count", "atoms of a monoid with prescribed characteristic");
    add_input(ac);
    Int brute_columns = 24;
    ac->add_option("--characteristic", in.file, "JSON file with group, set and multiplicities");
    ac->add_option("--brute-force-columns", brute_columns, "largest column count for the brute-force cross-check");
    auto* pre = app.add_subcommand("preset", "list or build presets");
    pre->require_subcommand(1);
    auto* pre_list = pre->add_subcommand("list", "list preset families");
    auto* pre_build = pre->add_subcommand("build", "build a preset");
    add_input(pre_build);
    std::string build_name;
    pre_build->add_option("name", build_name, "preset name");
    auto* len = app.add_subcommand("lengths", "sets of lengths, families and additive closure");
    add_input(len);
    bool closure = false;
    std::vector<std::string> pair;
    std::string fit;
    Int fit_d = 0;
    len->add_flag("--closure-probe", closure, "search for a sumset that is not a set of lengths");
    len->add_option("--pair", pair, "two sets whose sumset is checked, e.g. --pair 2,5 2,5")->expected(2);
    len->add_option("--fit", fit, "fit a progression and an AAMP to a set, e.g. 0,2,4");
    len->add_option("--d", fit_d, "difference for the AAMP fit");
    auto* dec = app.add_subcommand("decompose", "split B(G0) into indecomposable factors");
    add_input(dec);
    auto* dt = app.add_subcommand("divisor-theory", "check whether B(G0) -> F(G0) is a divisor theory");
    add_input(dt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Format fmt = parse_format(g.format);
        Cache cache = [&] {
            auto dir = resolve_cache_dir(g.cache_dir);
            return dir ? Cache(*dir) : Cache();
        }();
        Expectations ex;
        Json report = Json::object();
        std::string command;

        if (pre_build->parsed() && !build_name.empty()) in.preset = build_name;
        auto session = [&] { return Session(resolve_input(in), g); };

        if (atoms->parsed()) {
            command = "atoms";
            Session s = session();
            report["input"] = input_echo(s.preset());
            report["results"] = run_atoms(s, cache, g);
        } else if (fact->parsed()) {
            command = "factorize";
            Session s = session();
            report["input"] = input_echo(s.preset());
            report["results"] = run_factorize(s, g, block);
        } else if (inv->parsed()) {
            command = "invariants";
            Session s = session();
            report["input"] = input_echo(s.preset());
            report["expected"] = to_json(s.preset().expected);
            report["results"] = run_invariants(s, cache, g, iopt, ex);
        } else if (tr->parsed()) {
            command = "transfer-check";
            report["results"] = run_transfer(g, map_name, ex);
        } else if (ac->parsed()) {
            command = "atom-count";
            Session s = session();
            report["input"] = input_echo(s.preset());
            report["results"] = run_atom_count(s, cache, g, brute_columns, ex);
        } else if (pre_list->parsed()) {
            command = "preset list";
            Json fams = Json::array();
            for (const auto& f : list_families())
                fams.push_back({{"family", f.family}, {"params", f.params}, {"description", f.description}});
            report["results"] = {{"families", fams}};
        } else if (pre_build->parsed()) {
            command = "preset build";
            Session s = session();
            report["input"] = input_echo(s.preset());
            report["results"] = {{"expected", to_json(s.preset().expected)}, {"size", s.preset().alphabet->size()}};
        } else if (len->parsed()) {
            command = "lengths";
            if (!fit.empty()) {
                report["results"] = run_fit(fit, fit_d);
            } else {
                Session s = session();
                report["input"] = input_echo(s.preset());
                report["results"] = run_lengths(s, g, closure, pair, ex);
            }
        } else if (dec->parsed()) {
            command = "decompose";
            Session s = session();
            report["input"] = input_echo(s.preset());
            iopt.only = "decomposition";
            report["results"] = run_invariants(s, cache, g, iopt, ex);
        } else if (dt->parsed()) {
            command = "divisor-theory";
            Session s = session();
            report["input"] = input_echo(s.preset());
            iopt.only = "divisor_theory,cofinal";
            report["results"] = run_invariants(s, cache, g, iopt, ex);
        }
        report["command"] = command;
        if (!ex.empty()) ex.attach(report);
        if (g.timing) {
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            if (cache.enabled()) report["cache"] = {{"hits", cache.hits()}, {"misses", cache.misses()}};
        }

        const std::string text = emit_report(report, fmt);
        if (g.output.empty()) {
            out << text;
        } else {
            std::ofstream f(g.output, std::ios::trunc);
            if (!f) throw Error("cannot write '" + g.output + "'");
            f << text;
        }
        return ex.failed() ? 2 : 0;
    } catch (const std::exception& e) {
        err << "krull-arith: error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace krull::cli
