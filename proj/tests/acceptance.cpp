// Acceptance run: one PASS/FAIL line per criterion.
//
// Some sub-checks encode claims that explicit counterexamples refute; the unit
// tests reproduce those counterexamples.  Such checks pass `known_false`: the
// criterion line still prints FAIL, and the process exits 0 only while every
// sub-check lands where the analysis says it should.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "krull/invariants.hpp"
#include "krull/length_systems.hpp"
#include "krull/presets.hpp"
#include "krull/transfer.hpp"
#include "oracles.hpp"

using namespace krull;

namespace {

std::string str(const LengthSet& l) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << '}';
    return os.str();
}

LengthSet interval(Int a, Int b) {
    LengthSet s;
    for (Int x = a; x <= b; ++x) s.push_back(x);
    return s;
}

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> failures;
    std::vector<std::string> known;
    bool unexpected = false;
    std::size_t checks = 0;

    void check(bool ok, const std::string& what, bool known_false = false) {
        ++checks;
        if (ok == !known_false) {
            if (!ok) known.push_back(what);
            return;
        }
        unexpected = true;
        failures.push_back(known_false ? what + " (documented failure no longer reproduces)" : what);
    }
    bool pass() const { return failures.empty() && known.empty(); }
};

// Monoids built anywhere in the run, reused by the inequality harness.
std::map<std::string, std::shared_ptr<Monoid>> g_monoids;

Monoid& monoid(const std::string& preset) {
    auto it = g_monoids.find(preset);
    if (it != g_monoids.end()) return *it->second;
    auto m = std::make_shared<Monoid>(enumerate_atoms(preset_from_name(preset).alphabet));
    g_monoids[preset] = m;
    return *m;
}

std::string thm74_name(Int r, Int a) { return "thm74:" + std::to_string(r) + ":" + std::to_string(a); }

// ---------------------------------------------------------------- criterion 1

void criterion1(Criterion& c) {
    for (auto [r, a] : std::vector<std::pair<Int, Int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const std::string n = thm74_name(r, a);
        Monoid& h = monoid(n);
        const Int d = r + a;
        c.check(Int(h.atoms().size()) == r + 3, n + ": atom count");
        c.check(h.atoms().davenport == d, n + ": D");
        auto delta = delta_set(h, 6);
        c.check(delta.exact && delta.value == LengthSet{d - 2}, n + ": Delta = " + str(delta.value));
        auto cat = monoid_catenary(h, 3, d);
        c.check(cat.c.exact && cat.c.value == d, n + ": c");
        c.check(cat.c_mon.exact && cat.c_mon.value == d, n + ": c_mon");
        c.check(h.monoid_omega() == d, n + ": omega");
        c.check(h.monoid_tame() == d, n + ": tame degree");
        for (Int k = 1; k <= 3; ++k) {
            c.check(h.rho(2 * k) == k * d, n + ": rho_" + std::to_string(2 * k));
            c.check(h.rho(2 * k + 1) == k * d + 1, n + ": rho_" + std::to_string(2 * k + 1));
        }
        for (Int l = 0; l <= 2; ++l)
            for (Int j = 0; j <= d - 1; ++j)
                if (l * d + j >= 1)
                    c.check(h.lambda(l * d + j) == 2 * l + j, n + ": lambda_" + std::to_string(l * d + j));
    }
}

// ---------------------------------------------------------------- criterion 2

// S = e0^k0 (-e0)^l0 prod e_i^k_i (-e_i)^l_i with e1 + ... + er = alpha e0.
struct Thm74Frame {
    Int r, alpha;
    const AtomSet* atoms;
    std::vector<std::size_t> pos, neg;  // symbol index of e_i and -e_i
    std::vector<std::size_t> u;         // atom index of U_i = e_i(-e_i)
    std::size_t v = 0, minus_v = 0;     // atom indices of V = (-e0)^alpha e1..er and -V

    std::size_t atom_index(const Vec& m) const {
        auto it = std::find(atoms->atoms.begin(), atoms->atoms.end(), m);
        if (it == atoms->atoms.end()) throw std::runtime_error("expected atom missing");
        return static_cast<std::size_t>(it - atoms->atoms.begin());
    }

    Thm74Frame(Int r_, Int a_, const AtomSet& at) : r(r_), alpha(a_), atoms(&at) {
        const auto& alpha_set = *at.alphabet;
        const GroupSpec& g = alpha_set.spec();
        for (Int i = 0; i <= r; ++i) {
            Vec e(static_cast<std::size_t>(r), 0);
            if (i < r)
                e[static_cast<std::size_t>(i)] = 1;
            else {
                std::fill(e.begin(), e.end(), -1);
                e[0] = alpha;
            }
            Vec m = e;
            for (auto& x : m) x = -x;
            pos.push_back(*alpha_set.index_of(make_element(g, e)));
            neg.push_back(*alpha_set.index_of(make_element(g, m)));
        }
        const std::size_t n = alpha_set.size();
        for (Int i = 0; i <= r; ++i) {
            Vec m(n, 0);
            m[pos[i]] = m[neg[i]] = 1;
            u.push_back(atom_index(m));
        }
        Vec vv(n, 0), mv(n, 0);
        vv[neg[0]] = alpha;
        mv[pos[0]] = alpha;
        for (Int i = 1; i <= r; ++i) {
            vv[pos[i]] = 1;
            mv[neg[i]] = 1;
        }
        v = atom_index(vv);
        minus_v = atom_index(mv);
    }

    // Closed-form Z(S) for k0 >= l0; the other case follows by negation.
    std::set<Vec> closed_form(Vec k, Vec l) const {
        bool flipped = k[0] < l[0];
        if (flipped) std::swap(k, l);
        const Int m = (k[0] - l[0]) / alpha;
        Int kstar = k[1];
        for (Int i = 1; i <= r; ++i) kstar = std::min(kstar, k[i]);
        std::set<Vec> out;
        for (Int nu = 0; nu <= std::min(l[0] / alpha, kstar); ++nu) {
            Vec z(atoms->size(), 0);
            z[flipped ? minus_v : v] += nu;
            z[flipped ? v : minus_v] += m + nu;
            z[u[0]] += l[0] - alpha * nu;
            for (Int i = 1; i <= r; ++i) z[u[i]] += k[i] - nu;
            out.insert(z);
        }
        return out;
    }

    std::set<Int> closed_lengths(Vec k, Vec l) const {
        if (k[0] < l[0]) std::swap(k, l);
        const Int m = (k[0] - l[0]) / alpha;
        Int kstar = k[1], base = m + l[0];
        for (Int i = 1; i <= r; ++i) {
            kstar = std::min(kstar, k[i]);
            base += k[i];
        }
        std::set<Int> out;
        for (Int nu = 0; nu <= std::min(l[0] / alpha, kstar); ++nu) out.insert(base - (r + alpha - 2) * nu);
        return out;
    }
};

void criterion2(Criterion& c) {
    std::mt19937 rng(20240607);
    for (auto [r, a] : std::vector<std::pair<Int, Int>>{{2, 1}, {2, 2}}) {
        Monoid& h = monoid(thm74_name(r, a));
        const AtomSet& at = h.atoms();
        Thm74Frame f(r, a, at);
        std::uniform_int_distribution<Int> pick0(0, 6), picki(0, 4);
        int made = 0;
        while (made < 50) {
            Vec k(static_cast<std::size_t>(r + 1)), l(static_cast<std::size_t>(r + 1));
            k[0] = pick0(rng);
            l[0] = pick0(rng);
            if ((k[0] - l[0]) % a != 0) continue;
            const Int m = (k[0] - l[0]) / a;
            Int len = k[0] + l[0];
            bool ok = true;
            for (Int i = 1; i <= r; ++i) {
                k[i] = picki(rng);
                l[i] = m + k[i];
                if (l[i] < 0) ok = false;
                len += k[i] + l[i];
            }
            if (!ok || len == 0 || len > 14) continue;
            ++made;
            Vec b(at.alphabet->size(), 0);
            for (Int i = 0; i <= r; ++i) {
                b[f.pos[i]] = k[i];
                b[f.neg[i]] = l[i];
            }
            const std::string tag = "(" + std::to_string(r) + "," + std::to_string(a) + ") block " + std::to_string(made);
            auto brute = oracle::factorizations(at.atoms, b);
            c.check(brute == f.closed_form(k, l), tag + ": Z(B)");
            c.check(oracle::lengths(brute) == f.closed_lengths(k, l), tag + ": L(B)");
            std::set<Vec> lib;
            for (const auto& z : factorize(at, b)) lib.insert(z.counts);
            c.check(lib == brute, tag + ": library factorizations");
        }
    }
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Criterion& c) {
    for (Int n = 3; n <= 7; ++n) {
        const std::string name = "cyclic:" + std::to_string(n);
        Monoid& h = monoid(name);
        c.check(h.atoms().davenport == n, name + ": D");
        auto cat = monoid_catenary(h, 3);
        c.check(cat.c.exact && cat.c.value == n, name + ": c");
        c.check(h.monoid_omega() == n, name + ": omega");
        auto delta = delta_set(h, 6);
        c.check(delta.exact && delta.value == interval(1, n - 2), name + ": Delta = " + str(delta.value));
        c.check(h.unions(2).U == interval(2, n), name + ": U_2");
        for (Int k = 0; k <= 2; ++k)
            for (Int j = 0; j <= 1; ++j)
                if (2 * k + j >= 1) c.check(h.rho(2 * k + j) == k * n + j, name + ": rho_" + std::to_string(2 * k + j));
        for (Int l = 0; l <= 1; ++l)
            for (Int j = 0; j <= n - 1; ++j) {
                if (l * n + j < 1) continue;
                const Int want = j <= 1 ? 2 * l + j : 2 * l + 2;
                c.check(h.lambda(l * n + j) == want, name + ": lambda_" + std::to_string(l * n + j));
            }
        auto ds = delta_star(h.atoms()).value;
        c.check(ds.exact && !ds.value.empty() && ds.value.back() == n - 2, name + ": max Delta* of " + str(ds.value));
        if (n >= 5)
            c.check(ds.value.size() >= 2 && ds.value[ds.value.size() - 2] == n / 2 - 1,
                    name + ": second max Delta* of " + str(ds.value));
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion4(Criterion& c) {
    {
        TransferMap m = builtin_prop712();
        auto t = check_transfer(m, 8);
        c.check(t.t1_ok, "five-point map onto C3: T1");
        c.check(t.t2_ok, "five-point map onto C3: T2" + (t.counterexample ? " [" + *t.counterexample + "]" : std::string()),
                true);
        auto l = lengths_preserved(m, 8);
        c.check(l.ok, "five-point map onto C3: lengths preserved" + (l.violation ? " [" + *l.violation + "]" : std::string()),
                true);
    }
    {
        TransferMap m = builtin_prop713();
        auto t = check_transfer(m, 8);
        c.check(t.t1_ok, "nine-point map onto C4: T1");
        c.check(t.t2_ok, "nine-point map onto C4: T2" + (t.counterexample ? " [" + *t.counterexample + "]" : std::string()),
                true);
        auto l = lengths_preserved(m, 8);
        c.check(l.ok, "nine-point map onto C4: lengths preserved" + (l.violation ? " [" + *l.violation + "]" : std::string()),
                true);
    }
    // The systems of sets of lengths still coincide on both sides.
    for (auto [src, fam] : std::vector<std::pair<std::string, LengthSystemFamily>>{
             {"five_point", LengthSystemFamily::c3()}, {"prop713", LengthSystemFamily::c4()}}) {
        Monoid& h = monoid(src);
        bool all = true;
        for (Int k = 1; k <= 6; ++k)
            for (const Key& key : h.products(k)) all = all && member(fam, h.lengths(unpack(key))).member;
        c.check(all, src + ": every set of lengths lies in " + fam.name());
    }
    c.check(!check_transfer(builtin_collapse(), 8).t1_ok, "collapse map fails T1");
}

// ---------------------------------------------------------------- criterion 5

void criterion5(Criterion& c) {
    for (Int n : {3, 4}) {
        const std::string name = "cyclic:" + std::to_string(n);
        auto p = additive_closure_probe(monoid(name).atoms(), 8);
        c.check(p.status == ClosureProbe::Status::closed_within_bound,
                name + ": closure probe at bound 8 is " + to_string(p.status));
    }
    std::mt19937 rng(77);
    std::uniform_int_distribution<Int> small(0, 6);
    std::uniform_int_distribution<int> form(1, 2);
    for (int i = 0; i < 200; ++i) {
        const bool c4 = i % 2;
        auto fam = c4 ? LengthSystemFamily::c4() : LengthSystemFamily::c3();
        const int f = c4 ? form(rng) : 1;
        auto l1 = family_set(fam, small(rng), small(rng), f);
        auto l2 = family_set(fam, small(rng), small(rng), f);
        c.check(member(fam, sumset(l1, l2)).member, fam.name() + " sampled pair " + std::to_string(i));
    }
    const AtomSet& c5 = monoid("cyclic:5").atoms();
    auto pub = probe_pair(c5, {2, 5}, {2, 5}, 16);
    c.check(pub.status == ClosureProbe::Status::witness,
            "C5: {2,5}+{2,5} = {4,7,10} unrealized (it is L(g^10 (-g)^10))", true);
    auto real = probe_pair(c5, {2, 4}, {2, 4}, 16);
    c.check(real.status == ClosureProbe::Status::witness, "C5: {2,4}+{2,4} = {4,6,8} is unrealized");
}

// ---------------------------------------------------------------- criterion 6

void criterion6(Criterion& c) {
    std::map<Int, Int> d;
    for (Int r = 1; r <= 3; ++r) d[r] = monoid("cube:" + std::to_string(r) + ":0").atoms().davenport;
    c.check(d[3] >= fibonacci(5), "cube:3: D = " + std::to_string(d[3]) + " >= F_5");
    for (Int s = 1; s < 3; ++s)
        c.check(d[3] >= d[s] + d[3 - s] - 1, "cube superadditivity with s = " + std::to_string(s));
    Monoid& h = monoid("cube:3:0");
    auto ds = delta_star(h.atoms()).value.value;
    bool contains = true;
    for (Int x = 1; x <= 3; ++x) contains = contains && std::binary_search(ds.begin(), ds.end(), x);
    c.check(contains, "cube:3: Delta* = " + str(ds) + " contains [1,3]");
    auto delta = delta_set(h, 6);
    c.check(!delta.value.empty() && delta.value.back() >= 3, "cube:3: Delta at product bound 6 reaches 3");
}

// ---------------------------------------------------------------- criterion 7

void criterion7(Criterion& c) {
    std::vector<std::string> names{"hypersurface:A:1", "hypersurface:A:2", "hypersurface:A:3", "hypersurface:E6",
                                   "hypersurface:E7", "hypersurface:E8"};
    for (Int n = 4; n <= 9; ++n) names.push_back("hypersurface:D:" + std::to_string(n));
    for (const auto& n : names) {
        Preset p = preset_from_name(n);
        auto cnt = count_lifted_atoms(*p.characteristic);
        c.check(cnt.brute_force.has_value() && *cnt.brute_force == cnt.formula,
                n + ": formula " + std::to_string(cnt.formula) + " equals brute force");
        if (p.expected.lifted_atoms) c.check(cnt.formula == *p.expected.lifted_atoms, n + ": count");
        if (p.expected.lifted_atoms_closed_form)
            std::printf("  note: %s computed %lld, closed form %lld%s\n", n.c_str(), static_cast<long long>(cnt.formula),
                        static_cast<long long>(*p.expected.lifted_atoms_closed_form),
                        cnt.formula == *p.expected.lifted_atoms_closed_form ? "" : " (flagged)");
    }
    for (Int n = 1; n <= 4; ++n) {
        const std::string name = "hypersurface:A:" + std::to_string(n);
        auto cnt = count_lifted_atoms(*preset_from_name(name).characteristic);
        auto cyc = preset_from_name("cyclic:" + std::to_string(n + 1)).alphabet;
        const auto brute = oracle::atoms(*cyc, n + 1);
        c.check(cnt.formula == Int(brute.size()), name + ": count equals |A(C_" + std::to_string(n + 1) + ")|");
    }
}

// ---------------------------------------------------------------- criterion 8

void criterion8(Criterion& c) {
    GroupSpec z = GroupSpec::free(1);
    Preset pm;
    pm.name = pm.family = "pm";
    pm.alphabet = make_alphabet(z, {make_element(z, {1}), make_element(z, {-1})});
    c.check(!check_divisor_theory(pm).value, "{-e, e}: not a divisor theory");
    c.check(check_divisor_theory(preset_from_name("four_point")).value, "four_point: divisor theory");
    for (auto [r, a] : std::vector<std::pair<Int, Int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const std::string n = thm74_name(r, a);
        c.check(check_divisor_theory(preset_from_name(n), monoid(n).atoms()).value, n + ": divisor theory");
        c.check(decompose(monoid(n).atoms()).nontrivial() == 1, n + ": one component");
    }
    for (Int q = 1; q <= 3; ++q)
        for (const char* fam : {"split1", "split2"}) {
            const std::string n = std::string(fam) + ":" + std::to_string(q);
            c.check(Int(decompose(monoid(n).atoms()).nontrivial()) == q, n + ": q components");
        }
}

// ---------------------------------------------------------------- criterion 10

void criterion10(Criterion& c) {
    for (auto [r, a] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {2, 2}}) {
        const std::string n = thm74_name(r, a);
        auto w = min_abs_irred_witness(monoid(n), 8);
        c.check(w.found && w.s == r + 1, n + ": least witness size " + std::to_string(w.s));
    }
}

// ---------------------------------------------------------------- criterion 9

void harness(Criterion& c, const std::string& name, Monoid& h) {
    const AtomSet& at = h.atoms();
    if (at.size() == 0) return;
    const Int d = at.davenport;
    const bool factorial = h.is_factorial();
    const Int w = h.monoid_omega();
    const Int t = h.monoid_tame();
    const Int bound = at.size() > 40 ? 2 : 3;
    auto cat = monoid_catenary(h, bound);
    c.check(cat.c.value <= w, name + ": c <= omega");
    c.check(factorial || w <= t, name + ": omega <= t");
    c.check(t <= w * w, name + ": t <= omega^2");
    c.check(cat.c.value == 0 || cat.c.value >= 2, name + ": c is 0 or at least 2");
    auto rho = elasticity(h, 3).value;
    if (!factorial) {
        c.check(2 <= w, name + ": 2 <= omega");
        c.check(Rational{rho.num, rho.den} <= Rational{w, 1}, name + ": rho <= omega");
    }
    if (d > 1) {
        c.check(rho <= Rational::make(d, 2), name + ": rho <= D/2");
        for (Int k = 1; k <= 3; ++k) {
            auto u = h.unions(k);
            c.check(k <= u.rho && 2 * u.rho <= k * d, name + ": k <= rho_k <= k D/2");
            c.check(u.lambda <= k && u.lambda * d >= 2 * k, name + ": 2k/D <= lambda_k <= k");
        }
        if (h.rho(2) == d)
            for (Int k = 1; k <= 2; ++k) {
                c.check(h.rho(2 * k) == k * d, name + ": rho_2k = kD");
                c.check(h.rho(2 * k + 1) >= k * d + 1 && 2 * h.rho(2 * k + 1) <= 2 * k * d + d,
                        name + ": rho_2k+1 bracket");
            }
    }
    auto delta = delta_set(h, bound);
    if (cat.c.exact && !delta.value.empty()) c.check(2 + delta.value.back() <= cat.c.value, name + ": 2 + max Delta <= c");

    // Element-level checks over every product of at most `bound` atoms.
    bool dist_ok = true, elem_ok = true, ap_ok = true;
    for (Int k = 1; k <= bound; ++k)
        for (const Key& key : h.products(k)) {
            auto zs = factorize(at, unpack(key));
            for (std::size_t i = 0; i < zs.size(); ++i)
                for (std::size_t j = i + 1; j < zs.size(); ++j) {
                    Int gap = zs[i].length() - zs[j].length();
                    if (2 + std::abs(gap) > distance(zs[i], zs[j])) dist_ok = false;
                }
            LengthSet l;
            for (const auto& z : zs) l.push_back(z.length());
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            auto dl = delta_of(l);
            auto prof = catenary_profile(zs);
            if (!dl.empty() && 2 + dl.back() > prof.c) elem_ok = false;
            if (cat.c.exact && cat.c.value == 3 && !dl.empty() && dl != LengthSet{1}) ap_ok = false;
        }
    c.check(dist_ok, name + ": 2 + ||z| - |z'|| <= d(z, z')");
    c.check(elem_ok, name + ": 2 + max Delta(L(B)) <= c(B)");
    c.check(ap_ok, name + ": c = 3 forces difference 1");
}

void criterion9(Criterion& c) {
    for (const char* extra : {"five_point", "four_point", "prop713", "frt_t:1", "frt_t:2", "cube:2:1", "full_box:1"})
        monoid(extra);
    for (auto& [name, h] : g_monoids) harness(c, name, *h);
}

}  // namespace

int main() {
    std::vector<Criterion> cs{{1, "thm74 closed forms", {}, {}, false, 0},
                              {2, "thm74 factorization formula against brute force", {}, {}, false, 0},
                              {3, "cyclic group closed forms", {}, {}, false, 0},
                              {4, "transfer maps", {}, {}, false, 0},
                              {5, "additive closure", {}, {}, false, 0},
                              {6, "cube family", {}, {}, false, 0},
                              {7, "lifted atom counts", {}, {}, false, 0},
                              {8, "divisor theory and decomposition", {}, {}, false, 0},
                              {9, "inequality harness", {}, {}, false, 0},
                              {10, "absolutely irreducible witnesses", {}, {}, false, 0}};
    std::vector<void (*)(Criterion&)> fns{criterion1, criterion2, criterion3, criterion4, criterion5,
                                          criterion6, criterion7, criterion8, criterion9, criterion10};
    // Criterion 9 inspects every monoid built by the others, so it runs last.
    std::vector<std::size_t> order{0, 1, 2, 3, 4, 5, 6, 7, 9, 8};
    for (std::size_t i : order) {
        try {
            fns[i](cs[i]);
        } catch (const std::exception& e) {
            cs[i].check(false, std::string("exception: ") + e.what());
        }
    }
    bool unexpected = false;
    for (const auto& c : cs) {
        std::printf("criterion %d: %s - %s (%zu checks)\n", c.id, c.pass() ? "PASS" : "FAIL", c.title.c_str(), c.checks);
        for (const auto& k : c.known) std::printf("  known failure: %s\n", k.c_str());
        for (const auto& f : c.failures) std::printf("  FAILED: %s\n", f.c_str());
        unexpected = unexpected || c.unexpected;
    }
    std::fflush(stdout);
    return unexpected ? 1 : 0;
}
