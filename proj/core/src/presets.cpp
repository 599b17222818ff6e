#include "krull/presets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "krull/intmat.hpp"

namespace krull {

Int fibonacci(int n) {
    Int a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        Int c = checked_add(a, b);
        a = b;
        b = c;
    }
    return a;
}

std::size_t Decomposition::nontrivial() const {
    return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), Kind::nontrivial));
}

std::vector<FamilyInfo> list_families() {
    return {
        {"thm74", {"r", "alpha"}, "+-e_0..+-e_r in Z^r with e_1 + ... + e_r = alpha e_0"},
        {"cube", {"r", "include_zero"}, "nonzero 0/1 vectors of Z^r and their negatives, optionally with 0"},
        {"full_box", {"q"}, "all vectors of Z^q with entries in {-1, 0, 1}"},
        {"five_point", {}, "{-2e, -e, 0, e, 2e} in Z"},
        {"four_point", {}, "{-2e, -e, e, 2e} in Z"},
        {"prop713", {}, "{0, +-e1, +-e2, +-2e2, +-(e1 + 2e2)} in Z^2"},
        {"split1", {"q"}, "q disjoint blocks {+-e_{2k-1}, +-e_{2k}, +-(e_{2k-1} + e_{2k})} in Z^{2q}"},
        {"split2", {"q"}, "0 and q disjoint blocks {+-e_{2k-1}, +-e_{2k}, +-2e_{2k}, +-(e_{2k-1} + 2e_{2k})}"},
        {"cyclic", {"n"}, "the full cyclic group C_n, one prime per class"},
        {"frt_t", {"spl"}, "spl = 1: {-e, 0, e} in Z; spl = 2: +-(1,1), +-(1,0), +-(0,1) in Z^2"},
        {"hypersurface", {"type", "n"}, "characteristics of the simple singularities A_n, D_n, E_6, E_7, E_8"},
    };
}

namespace {

Int int_param(const std::map<std::string, std::string>& p, const std::string& key, std::optional<Int> fallback = {}) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (fallback) return *fallback;
        throw ArgumentError("missing parameter '" + key + "'");
    }
    try {
        std::size_t pos = 0;
        Int v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw ArgumentError("");
        return v;
    } catch (const std::exception&) {
        throw ArgumentError("parameter '" + key + "' must be an integer, got '" + it->second + "'");
    }
}

GroupElement vec_el(const GroupSpec& g, Vec v) { return make_element(g, std::move(v)); }

void add_pm(const GroupSpec& g, std::vector<GroupElement>& out, const Vec& v) {
    out.push_back(vec_el(g, v));
    Vec w = v;
    for (auto& x : w) x = -x;
    out.push_back(vec_el(g, w));
}

void dedup(std::vector<GroupElement>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

LengthSet interval(Int a, Int b) {
    LengthSet s;
    for (Int x = a; x <= b; ++x) s.push_back(x);
    return s;
}

Characteristic all_ones(const AlphabetPtr& a) {
    Characteristic c{a->spec(), {}};
    for (const auto& g : a->elements()) c.classes.emplace_back(g, 1);
    return c;
}

Preset make_thm74(Int r, Int alpha) {
    if (r < 1 || alpha < 1 || r + alpha <= 2) throw ArgumentError("thm74 needs r >= 1, alpha >= 1 and r + alpha > 2");
    GroupSpec g = GroupSpec::free(static_cast<int>(r));
    std::vector<GroupElement> els;
    for (Int i = 0; i < r; ++i) {
        Vec v(static_cast<std::size_t>(r), 0);
        v[static_cast<std::size_t>(i)] = 1;
        add_pm(g, els, v);
    }
    Vec last(static_cast<std::size_t>(r), -1);
    last[0] = alpha;
    add_pm(g, els, last);
    dedup(els);
    Preset p;
    p.family = "thm74";
    p.params = {{"r", std::to_string(r)}, {"alpha", std::to_string(alpha)}};
    p.alphabet = make_alphabet(g, els);
    const Int d = r + alpha;
    auto& e = p.expected;
    e.atom_count = r + 3;
    e.davenport = d;
    e.delta = LengthSet{d - 2};
    e.catenary = e.monotone_catenary = e.omega = e.tame = d;
    e.elasticity = Rational::make(d, 2);
    for (Int k = 2; k <= 7; ++k) e.rho[k] = (k / 2) * d + (k % 2);
    for (Int l = 0; l <= 2; ++l)
        for (Int j = 0; j <= d - 1; ++j)
            if (l * d + j >= 1) e.lambda[l * d + j] = 2 * l + j;
    e.divisor_theory = true;
    e.components = 1;
    return p;
}

Preset make_cube(Int r, bool include_zero) {
    if (r < 1 || r > 12) throw ArgumentError("cube needs 1 <= r <= 12");
    GroupSpec g = GroupSpec::free(static_cast<int>(r));
    std::vector<GroupElement> els;
    for (Int mask = 1; mask < (Int{1} << r); ++mask) {
        Vec v(static_cast<std::size_t>(r), 0);
        for (Int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        add_pm(g, els, v);
    }
    if (include_zero) els.push_back(zero(g));
    dedup(els);
    Preset p;
    p.family = "cube";
    p.params = {{"r", std::to_string(r)}, {"include_zero", include_zero ? "1" : "0"}};
    p.alphabet = make_alphabet(g, els);
    p.expected.davenport_lower_bound = fibonacci(static_cast<int>(r + 2));
    if (r >= 2) p.expected.delta_star_contains = interval(1, 2 * r - 3);
    p.expected.divisor_theory = true;
    return p;
}

Preset make_full_box(Int q) {
    if (q < 1 || q > 5) throw ArgumentError("full_box needs 1 <= q <= 5");
    GroupSpec g = GroupSpec::free(static_cast<int>(q));
    std::vector<GroupElement> els;
    Int total = 1;
    for (Int i = 0; i < q; ++i) total *= 3;
    for (Int code = 0; code < total; ++code) {
        Vec v;
        Int c = code;
        for (Int i = 0; i < q; ++i) {
            v.push_back(c % 3 - 1);
            c /= 3;
        }
        els.push_back(vec_el(g, v));
    }
    dedup(els);
    Preset p;
    p.family = "full_box";
    p.params = {{"q", std::to_string(q)}};
    p.alphabet = make_alphabet(g, els);
    p.expected.divisor_theory = true;
    return p;
}

Preset make_line(const std::string& family, const Vec& values) {
    GroupSpec g = GroupSpec::free(1);
    std::vector<GroupElement> els;
    for (Int x : values) els.push_back(vec_el(g, {x}));
    Preset p;
    p.family = family;
    p.alphabet = make_alphabet(g, els);
    return p;
}

Preset make_prop713() {
    GroupSpec g = GroupSpec::free(2);
    std::vector<GroupElement> els{vec_el(g, {0, 0})};
    for (const Vec& v : std::vector<Vec>{{1, 0}, {0, 1}, {0, 2}, {1, 2}}) add_pm(g, els, v);
    dedup(els);
    Preset p;
    p.family = "prop713";
    p.alphabet = make_alphabet(g, els);
    p.expected.delta = LengthSet{1, 2};
    p.expected.divisor_theory = true;
    return p;
}

Preset make_split(Int q, bool second) {
    if (q < 1 || q > 4) throw ArgumentError("split presets need 1 <= q <= 4");
    GroupSpec g = GroupSpec::free(static_cast<int>(2 * q));
    std::vector<GroupElement> els;
    for (Int k = 0; k < q; ++k) {
        auto unit = [&](Int i, Int a, Int b) {
            Vec v(static_cast<std::size_t>(2 * q), 0);
            v[static_cast<std::size_t>(2 * k)] = a;
            v[static_cast<std::size_t>(2 * k + 1)] = b;
            (void)i;
            return v;
        };
        add_pm(g, els, unit(0, 1, 0));
        add_pm(g, els, unit(0, 0, 1));
        if (second) {
            add_pm(g, els, unit(0, 0, 2));
            add_pm(g, els, unit(0, 1, 2));
        } else {
            add_pm(g, els, unit(0, 1, 1));
        }
    }
    if (second) els.push_back(zero(g));
    dedup(els);
    Preset p;
    p.family = second ? "split2" : "split1";
    p.params = {{"q", std::to_string(q)}};
    p.alphabet = make_alphabet(g, els);
    p.expected.components = q;
    p.expected.divisor_theory = true;
    p.expected.delta = second ? LengthSet{1, 2} : LengthSet{1};
    return p;
}

Preset make_cyclic(Int n) {
    if (n < 1 || n > 64) throw ArgumentError("cyclic needs 1 <= n <= 64");
    GroupSpec g = n == 1 ? GroupSpec() : GroupSpec::cyclic(n);
    std::vector<GroupElement> els;
    if (n == 1)
        els.push_back(zero(g));
    else
        for (Int x = 0; x < n; ++x) els.push_back(make_element(g, {}, {x}));
    Preset p;
    p.family = "cyclic";
    p.params = {{"n", std::to_string(n)}};
    p.alphabet = make_alphabet(g, els);
    p.characteristic = all_ones(p.alphabet);
    if (n >= 3) {
        auto& e = p.expected;
        e.davenport = n;
        e.catenary = e.omega = n;
        e.delta = interval(1, n - 2);
        e.elasticity = Rational::make(n, 2);
        e.unions[2] = interval(2, n);
        for (Int k = 1; k <= 2; ++k)
            for (Int j = 0; j <= 1; ++j) e.rho[2 * k + j] = k * n + j;
        for (Int l = 0; l <= 1; ++l)
            for (Int j = 0; j <= n - 1; ++j)
                if (l * n + j >= 1) e.lambda[l * n + j] = j <= 1 ? 2 * l + j : 2 * l + 2;
        e.delta_star_max = n - 2;
        if (n >= 5) e.delta_star_second_max = n / 2 - 1;
    }
    return p;
}

Preset make_frt(Int spl) {
    if (spl == 1) {
        Preset p = make_line("frt_t", {-1, 0, 1});
        p.params = {{"spl", "1"}};
        p.expected.delta = LengthSet{};
        p.expected.catenary = 0;
        p.expected.omega = 1;
        p.expected.tame = 0;
        return p;
    }
    if (spl == 2) {
        GroupSpec g = GroupSpec::free(2);
        std::vector<GroupElement> els;
        for (const Vec& v : std::vector<Vec>{{1, 1}, {1, 0}, {0, 1}}) add_pm(g, els, v);
        dedup(els);
        Preset p;
        p.family = "frt_t";
        p.params = {{"spl", "2"}};
        p.alphabet = make_alphabet(g, els);
        p.expected.davenport = 3;
        p.expected.delta = LengthSet{1};
        p.expected.divisor_theory = true;
        return p;
    }
    throw ArgumentError("frt_t needs spl in {1, 2}");
}

Preset make_hypersurface(const std::string& type, Int n) {
    Preset p;
    p.family = "hypersurface";
    p.params = {{"type", type}};
    GroupSpec g;
    std::vector<std::pair<GroupElement, Int>> cls;
    if (type == "A") {
        if (n < 1) throw ArgumentError("A_n needs n >= 1");
        p.params["n"] = std::to_string(n);
        g = GroupSpec::cyclic(n + 1);
        for (Int x = 0; x <= n; ++x) cls.emplace_back(make_element(g, {}, {x}), 1);
    } else if (type == "D") {
        if (n < 4) throw ArgumentError("D_n needs n >= 4");
        p.params["n"] = std::to_string(n);
        if (n % 2 == 0) {
            g = GroupSpec(0, {2, 2});
            cls = {{make_element(g, {}, {0, 0}), n / 2},
                   {make_element(g, {}, {1, 0}), 1},
                   {make_element(g, {}, {0, 1}), 1},
                   {make_element(g, {}, {1, 1}), (n - 2) / 2}};
            p.expected.lifted_atoms_closed_form = (n * n + 8) / 4;
        } else {
            g = GroupSpec::cyclic(4);
            cls = {{make_element(g, {}, {0}), (n - 1) / 2},
                   {make_element(g, {}, {1}), 1},
                   {make_element(g, {}, {2}), (n - 1) / 2},
                   {make_element(g, {}, {3}), 1}};
        }
    } else if (type == "E6") {
        g = GroupSpec::cyclic(3);
        cls = {{make_element(g, {}, {0}), 3}, {make_element(g, {}, {1}), 2}, {make_element(g, {}, {2}), 2}};
    } else if (type == "E7") {
        g = GroupSpec::cyclic(2);
        cls = {{make_element(g, {}, {0}), 5}, {make_element(g, {}, {1}), 3}};
    } else if (type == "E8") {
        g = GroupSpec();
        cls = {{zero(g), 9}};
        p.expected.lifted_atoms = 9;
    } else {
        throw ArgumentError("hypersurface type must be A, D, E6, E7 or E8");
    }
    p.characteristic = Characteristic{g, cls};
    p.alphabet = p.characteristic->support();
    return p;
}

std::string canonical_name(const Preset& p) {
    std::string n = p.family;
    auto order = [&]() -> std::vector<std::string> {
        for (const auto& f : list_families())
            if (f.family == p.family) return f.params;
        return {};
    }();
    for (const auto& k : order) {
        auto it = p.params.find(k);
        if (it != p.params.end()) n += ":" + it->second;
    }
    return n;
}

}  // namespace

Preset build_preset(const std::string& family, const std::map<std::string, std::string>& params) {
    Preset p;
    if (family == "thm74")
        p = make_thm74(int_param(params, "r"), int_param(params, "alpha", 1));
    else if (family == "cube")
        p = make_cube(int_param(params, "r"), int_param(params, "include_zero", 0) != 0);
    else if (family == "full_box")
        p = make_full_box(int_param(params, "q"));
    else if (family == "five_point") {
        p = make_line("five_point", {-2, -1, 0, 1, 2});
        p.expected.davenport = 3;
        p.expected.delta = LengthSet{1};
        p.expected.divisor_theory = true;
    } else if (family == "four_point") {
        p = make_line("four_point", {-2, -1, 1, 2});
        p.expected.divisor_theory = true;
    } else if (family == "prop713")
        p = make_prop713();
    else if (family == "split1")
        p = make_split(int_param(params, "q"), false);
    else if (family == "split2")
        p = make_split(int_param(params, "q"), true);
    else if (family == "cyclic")
        p = make_cyclic(int_param(params, "n"));
    else if (family == "frt_t")
        p = make_frt(int_param(params, "spl"));
    else if (family == "hypersurface") {
        auto it = params.find("type");
        if (it == params.end()) throw ArgumentError("missing parameter 'type'");
        std::string type = it->second;
        Int n = 0;
        if (type.size() > 1 && (type[0] == 'A' || type[0] == 'D')) {
            n = std::stoll(type.substr(1));
            type = type.substr(0, 1);
        } else if (type == "A" || type == "D") {
            n = int_param(params, "n");
        }
        p = make_hypersurface(type, n);
    } else
        throw ArgumentError("unknown preset family '" + family + "'");
    p.name = canonical_name(p);
    return p;
}

Preset preset_from_name(const std::string& name) {
    std::vector<std::string> parts;
    std::stringstream ss(name);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw ArgumentError("empty preset name");
    std::vector<std::string> keys;
    for (const auto& f : list_families())
        if (f.family == parts[0]) keys = f.params;
    if (parts.size() - 1 > keys.size()) throw ArgumentError("too many parameters in preset '" + name + "'");
    std::map<std::string, std::string> params;
    for (std::size_t i = 1; i < parts.size(); ++i) params[keys[i - 1]] = parts[i];
    return build_preset(parts[0], params);
}

Preset from_matrix(const DefiningMatrix& m, bool row_reduce) {
    if (m.columns.empty()) throw ArgumentError("defining matrix has no columns");
    for (const auto& [v, mult] : m.columns) {
        if (static_cast<int>(v.size()) != m.rows) throw ShapeError("column length differs from the row count");
        if (mult < 1) throw ArgumentError("column multiplicities must be positive");
    }
    Matrix rows(static_cast<std::size_t>(m.rows), Vec(m.columns.size(), 0));
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (int i = 0; i < m.rows; ++i) rows[static_cast<std::size_t>(i)][j] = m.columns[j].first[static_cast<std::size_t>(i)];
    if (row_reduce) rows = hermite_rows(rows);
    const int q = static_cast<int>(rows.size());
    GroupSpec g = GroupSpec::free(q);
    std::map<GroupElement, Int> mult;
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
        Vec col;
        for (int i = 0; i < q; ++i) col.push_back(rows[static_cast<std::size_t>(i)][j]);
        mult[make_element(g, col)] += m.columns[j].second;
    }
    Preset p;
    p.family = "matrix";
    p.name = "matrix";
    p.params = {{"rows", std::to_string(q)}, {"row_reduce", row_reduce ? "1" : "0"}};
    std::vector<GroupElement> els;
    Characteristic c{g, {}};
    for (const auto& [e, k] : mult) {
        els.push_back(e);
        c.classes.emplace_back(e, k);
    }
    p.alphabet = make_alphabet(g, els);
    p.characteristic = c;
    return p;
}

bool check_cofinal(const AtomSet& atoms) {
    std::vector<bool> used(atoms.alphabet->size(), false);
    for (const auto& a : atoms.atoms)
        for (std::size_t g = 0; g < a.size(); ++g)
            if (a[g] > 0) used[g] = true;
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

DivisorTheoryResult check_divisor_theory(const Preset& p, const AtomSet& atoms) {
    const Alphabet& a = *p.alphabet;
    const std::size_t n = a.size();
    std::vector<Int> m(n, 1);
    if (p.characteristic)
        for (std::size_t i = 0; i < n; ++i) m[i] = std::max<Int>(1, p.characteristic->multiplicity(a[i]));

    DivisorTheoryResult r;
    r.value = true;
    // Removing one prime of class g must leave a generating set whose monoid is
    // the whole group <G_P>.  If another prime of class g remains, this says that
    // [G_P] is a group, i.e. every class lies in some atom.  Otherwise every
    // other class must lie in an atom avoiding g, and g itself must be reachable,
    // i.e. some atom contains g exactly once.
    auto in_atom_avoiding = [&](std::size_t h, std::optional<std::size_t> avoid) {
        for (const auto& u : atoms.atoms)
            if (u[h] > 0 && (!avoid || u[*avoid] == 0)) return true;
        return false;
    };
    for (std::size_t g = 0; g < n && r.value; ++g) {
        const bool last_prime = m[g] == 1;
        for (std::size_t h = 0; h < n; ++h) {
            if (last_prime && h == g) continue;
            if (!in_atom_avoiding(h, last_prime ? std::optional<std::size_t>(g) : std::nullopt)) {
                r.value = false;
                r.reason = "class " + to_string(a[h]) + " lies in no atom" +
                           (last_prime ? " avoiding " + to_string(a[g]) : std::string());
                break;
            }
        }
        if (!r.value || !last_prime || is_zero(a[g])) continue;
        bool once = std::any_of(atoms.atoms.begin(), atoms.atoms.end(), [&](const Vec& u) { return u[g] == 1; });
        if (!once) {
            r.value = false;
            r.reason = "class " + to_string(a[g]) + " is not a sum of the remaining classes";
        }
    }
    if (r.value) r.reason = "every prime is a gcd of blocks";

    const auto& spec = a.spec();
    bool unit_mults = std::all_of(m.begin(), m.end(), [](Int x) { return x == 1; });
    if (spec.free_rank == 1 && spec.torsion.empty() && unit_mults && a.contains(make_element(spec, {1})) &&
        a.contains(make_element(spec, {-1}))) {
        bool pos = false, negk = false;
        for (const auto& e : a.elements()) {
            if (e.free[0] >= 2) pos = true;
            if (e.free[0] <= -2) negk = true;
        }
        r.cyclic_criterion = pos && negk;
    }
    return r;
}

DivisorTheoryResult check_divisor_theory(const Preset& p, const AtomOptions& opt) {
    return check_divisor_theory(p, enumerate_atoms(p.alphabet, opt));
}

Decomposition decompose(const AtomSet& atoms) {
    const std::size_t n = atoms.alphabet->size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> used(n, false);
    for (const auto& u : atoms.atoms) {
        std::optional<std::size_t> first;
        for (std::size_t g = 0; g < n; ++g) {
            if (u[g] == 0) continue;
            used[g] = true;
            if (!first)
                first = g;
            else
                parent[find(g)] = find(*first);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t g = 0; g < n; ++g) groups[find(g)].push_back(g);
    std::vector<std::vector<std::size_t>> parts;
    for (auto& [root, part] : groups) parts.push_back(part);
    std::sort(parts.begin(), parts.end());
    Decomposition d;
    for (auto& part : parts) {
        Decomposition::Kind k = Decomposition::Kind::nontrivial;
        if (part.size() == 1 && !used[part[0]])
            k = Decomposition::Kind::unused;
        else if (part.size() == 1 && is_zero((*atoms.alphabet)[part[0]]))
            k = Decomposition::Kind::prime;
        d.parts.push_back(std::move(part));
        d.kinds.push_back(k);
    }
    return d;
}

}  // namespace krull
