#include "krull/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "krull/parallel.hpp"

namespace krull {

Monoid::Monoid(AtomSet atoms, SweepOptions opt)
    : atoms_(std::make_shared<const AtomSet>(std::move(atoms))), opt_(opt), oracle_(*atoms_) {
    levels_.push_back({pack(Vec(atoms_->alphabet->size(), 0))});
}

const std::vector<Key>& Monoid::products(Int k) {
    if (k < 0) throw ArgumentError("product size must be nonnegative");
    while (static_cast<Int>(levels_.size()) <= k) {
        const auto& prev = levels_.back();
        std::unordered_set<Key> next;
        next.reserve(prev.size() * 4);
        for (const Key& p : prev) {
            Key q = p;
            for (const auto& a : atoms_->atoms) {
                for (std::size_t g = 0; g < a.size(); ++g) {
                    Int v = static_cast<Int>(p[g]) + a[g];
                    if (v > 0xFFFF) throw OverflowError("multiplicity too large for packed key");
                    q[g] = static_cast<char16_t>(v);
                }
                next.insert(q);
            }
            if (next.size() > opt_.product_guard)
                throw BoundExceeded("number of products of " + std::to_string(levels_.size()) +
                                    " atoms exceeds the guard");
        }
        std::vector<Key> level(next.begin(), next.end());
        std::sort(level.begin(), level.end());
        levels_.push_back(std::move(level));
    }
    return levels_[static_cast<std::size_t>(k)];
}

UnionProfile Monoid::unions(Int k) {
    if (k < 1) throw ArgumentError("k must be positive");
    auto it = unions_.find(k);
    if (it != unions_.end()) return it->second;
    std::set<Int> u;
    for (const Key& p : products(k)) {
        const auto& l = oracle_.lengths(unpack(p));
        u.insert(l.begin(), l.end());
    }
    UnionProfile prof;
    prof.k = k;
    prof.U.assign(u.begin(), u.end());
    if (!prof.U.empty()) {
        prof.rho = prof.U.back();
        prof.lambda = prof.U.front();
    }
    unions_[k] = prof;
    return prof;
}

Int Monoid::lambda(Int k) {
    if (k < 1) throw ArgumentError("k must be positive");
    for (Int l = 1; l <= k; ++l) {
        auto u = unions(l);
        if (std::binary_search(u.U.begin(), u.U.end(), k)) return l;
    }
    return k;
}

const Monoid::CoverData& Monoid::covers(std::size_t u) {
    auto it = covers_.find(u);
    if (it != covers_.end()) return it->second;
    if (u >= atoms_->size()) throw ArgumentError("atom index out of range");
    const Vec& target = atoms_->atoms[u];
    const std::size_t n = target.size();
    const Int ulen = vec_sum(target);
    std::vector<std::size_t> supp;
    for (std::size_t g = 0; g < n; ++g)
        if (target[g] > 0) supp.push_back(g);
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < atoms_->size(); ++i) {
        if (i == u) continue;
        for (auto g : supp)
            if (atoms_->atoms[i][g] > 0) {
                cand.push_back(i);
                break;
            }
    }

    CoverData data;
    data.omega = 1;  // the cover {u}
    data.count = 1;
    std::vector<std::pair<std::size_t, Int>> chosen;  // (atom, count)
    Vec total(n, 0);
    Int size = 0;

    auto covered = [&](const Vec& t) {
        for (auto g : supp)
            if (t[g] < target[g]) return false;
        return true;
    };
    auto record = [&] {
        for (const auto& [i, c] : chosen) {
            (void)c;
            bool still = true;
            for (auto g : supp)
                if (total[g] - atoms_->atoms[i][g] < target[g]) {
                    still = false;
                    break;
                }
            if (still) return;  // atom i is not essential
        }
        if (++data.count > opt_.cover_guard) throw BoundExceeded("number of minimal covers exceeds the guard");
        data.omega = std::max(data.omega, size);
        Vec rest = vec_sub(total, target);
        const auto& l = oracle_.lengths(rest);
        Int t = std::max(size, l.empty() ? size : 1 + l.front());
        data.tame = std::max(data.tame, t);
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
        for (std::size_t p = pos; p < cand.size(); ++p) {
            const Vec& a = atoms_->atoms[cand[p]];
            bool gains = false;
            for (auto g : supp)
                if (a[g] > 0 && total[g] < target[g]) {
                    gains = true;
                    break;
                }
            if (!gains) continue;
            for (std::size_t g = 0; g < n; ++g) total[g] += a[g];
            ++size;
            if (!chosen.empty() && chosen.back().first == cand[p])
                ++chosen.back().second;
            else
                chosen.emplace_back(cand[p], 1);
            if (covered(total))
                record();
            else if (size < ulen)
                dfs(p);
            if (--chosen.back().second == 0) chosen.pop_back();
            --size;
            for (std::size_t g = 0; g < n; ++g) total[g] -= a[g];
        }
    };
    dfs(0);
    if (data.count == 1) data.tame = 0;
    return covers_.emplace(u, data).first->second;
}

Int Monoid::omega(std::size_t u) { return covers(u).omega; }
Int Monoid::tame(std::size_t u) { return covers(u).tame; }
std::size_t Monoid::cover_count(std::size_t u) { return covers(u).count; }

Int Monoid::monoid_omega() {
    Int w = 0;
    for (std::size_t u = 0; u < atoms_->size(); ++u) w = std::max(w, omega(u));
    return w;
}

Int Monoid::monoid_tame() {
    Int t = 0;
    for (std::size_t u = 0; u < atoms_->size(); ++u) t = std::max(t, tame(u));
    return t;
}

namespace {

Int kernel_length_gcd(const std::vector<Vec>& atoms, std::size_t symbols) {
    if (atoms.empty()) return 0;
    Matrix m(symbols, Vec(atoms.size(), 0));
    for (std::size_t j = 0; j < atoms.size(); ++j)
        for (std::size_t g = 0; g < symbols; ++g) m[g][j] = atoms[j][g];
    Int d = 0;
    for (const auto& z : kernel_basis(m, static_cast<int>(atoms.size()))) d = std::gcd(d, vec_sum(z));
    return d < 0 ? -d : d;
}

}  // namespace

Int Monoid::length_gcd() {
    if (!length_gcd_) length_gcd_ = kernel_length_gcd(atoms_->atoms, atoms_->alphabet->size());
    return *length_gcd_;
}

BoundedSet delta_set(Monoid& h, Int product_bound, bool certify) {
    if (product_bound < 2) throw ArgumentError("product bound must be at least 2");
    BoundedSet r;
    Int g = 0;
    LengthSet full;
    if (certify) {
        g = h.length_gcd();
        if (g == 0) {
            r.exact = true;
            r.bound_used = 0;
            r.certificate = "half-factorial: every relation between atoms preserves length";
            return r;
        }
        for (Int x = g; x <= h.monoid_omega() - 2; x += g) full.push_back(x);
    }
    // Once every admissible distance is attained, larger products cannot add any.
    std::set<Int> d;
    for (Int k = 2; k <= product_bound; ++k) {
        for (const Key& p : h.products(k)) {
            auto dl = delta_of(h.lengths(unpack(p)));
            d.insert(dl.begin(), dl.end());
        }
        r.bound_used = k;
        if (certify && d.size() == full.size() && std::equal(d.begin(), d.end(), full.begin())) break;
    }
    r.value.assign(d.begin(), d.end());
    if (certify && r.value == full) {
        r.exact = true;
        r.certificate = "all multiples of the length gcd " + std::to_string(g) + " up to omega-2 are attained";
    }
    return r;
}

BoundedSet delta_set(const AtomSet& atoms, Int product_bound) {
    Monoid h(atoms);
    return delta_set(h, product_bound);
}

MonoidCatenary monoid_catenary(Monoid& h, Int bound, std::optional<Int> closed_form_mon) {
    if (bound < 2) throw ArgumentError("product bound must be at least 2");
    MonoidCatenary r;
    std::unordered_set<Key> seen;
    std::vector<Key> todo;
    for (Int k = 2; k <= bound; ++k)
        for (const Key& p : h.products(k))
            if (seen.insert(p).second) todo.push_back(p);
    std::vector<CatenaryProfile> prof(todo.size());
    parallel_for(todo.size(), h.options().threads,
                 [&](std::size_t i) { prof[i] = catenary_profile(factorize(h.atoms(), unpack(todo[i]))); });
    for (const auto& p : prof) {
        r.c.value = std::max(r.c.value, p.c);
        r.c_eq.value = std::max(r.c_eq.value, p.c_eq);
        r.c_adj.value = std::max(r.c_adj.value, p.c_adj);
        r.c_mon.value = std::max(r.c_mon.value, p.c_mon);
    }
    for (auto* b : {&r.c, &r.c_eq, &r.c_adj, &r.c_mon}) b->bound_used = bound;
    Int w = h.monoid_omega();
    if (r.c.value == w || (w <= 1 && r.c.value == 0)) {
        r.c.exact = true;
        r.c.certificate = w <= 1 ? "factorial" : "attains the upper bound omega";
    }
    if (closed_form_mon && *closed_form_mon == r.c_mon.value) {
        r.c_mon.exact = true;
        r.c_mon.certificate = "matches the closed form";
    }
    if (w <= 1) {
        for (auto* b : {&r.c_eq, &r.c_adj, &r.c_mon}) {
            b->exact = true;
            b->certificate = "factorial";
        }
    }
    return r;
}

ElasticityResult elasticity(Monoid& h, Int k_bound) {
    ElasticityResult r;
    const auto& a = h.atoms();
    bool has_nonprime = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.length(i) > 1) has_nonprime = true;
    if (!has_nonprime) {
        r.value = Rational{1, 1};
        r.exact = true;
        return r;
    }
    if (a.alphabet->is_symmetric()) {
        r.value = Rational::make(a.davenport, 2);
        r.exact = true;
        return r;
    }
    r.value = Rational{1, 1};
    for (Int k = 1; k <= k_bound; ++k) r.value = std::max(r.value, Rational::make(h.rho(k), k));
    r.bound_used = k_bound;
    return r;
}

DeltaStarResult delta_star(const AtomSet& atoms, int threads, std::size_t max_symbols) {
    const std::size_t n = atoms.alphabet->size();
    if (n > max_symbols)
        throw BoundExceeded("subset sweep refused: " + std::to_string(n) + " symbols exceed the limit of " +
                            std::to_string(max_symbols));
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::uint64_t> mask_of_atom(atoms.size(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t g = 0; g < n; ++g)
            if (atoms.atoms[i][g] > 0) mask_of_atom[i] |= std::uint64_t{1} << g;
    // Distinct atom subsets determine B(G1); evaluate each once.
    std::map<std::vector<bool>, std::size_t> families;
    std::vector<std::vector<std::size_t>> family_atoms;
    std::vector<std::uint64_t> first_subset;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        std::vector<bool> key(atoms.size(), false);
        for (std::size_t i = 0; i < atoms.size(); ++i) key[i] = (mask_of_atom[i] & ~s) == 0;
        if (families.emplace(key, family_atoms.size()).second) {
            std::vector<std::size_t> ids;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (key[i]) ids.push_back(i);
            family_atoms.push_back(std::move(ids));
            first_subset.push_back(s);
        }
    }
    std::vector<Int> gcds(family_atoms.size(), 0);
    parallel_for(family_atoms.size(), threads, [&](std::size_t f) {
        std::vector<Vec> sub;
        for (auto i : family_atoms[f]) sub.push_back(atoms.atoms[i]);
        gcds[f] = kernel_length_gcd(sub, n);
    });
    DeltaStarResult r;
    r.subsets_examined = subsets - 1;
    for (std::size_t f = 0; f < family_atoms.size(); ++f) {
        if (gcds[f] == 0) continue;
        if (r.witnesses.count(gcds[f])) continue;
        std::vector<std::size_t> syms;
        for (std::size_t g = 0; g < n; ++g)
            if (first_subset[f] >> g & 1) syms.push_back(g);
        r.witnesses[gcds[f]] = syms;
    }
    for (const auto& [d, w] : r.witnesses) r.value.value.push_back(d);
    r.value.exact = true;
    r.value.certificate = "min Delta equals the length gcd of each divisor-closed submonoid";
    return r;
}

bool absolutely_irreducible(const AtomSet& atoms, std::size_t u) {
    if (u >= atoms.size()) throw ArgumentError("atom index out of range");
    std::vector<GroupElement> supp;
    for (auto g : atoms.support(u)) supp.push_back((*atoms.alphabet)[g]);
    return subgroup_rank(atoms.alphabet->spec(), supp) + 1 == static_cast<int>(supp.size());
}

bool unique_power_factorizations(const AtomSet& atoms, std::size_t u, Int check_bound) {
    for (Int k = 1; k <= check_bound; ++k) {
        Vec p = atoms.atoms[u];
        for (auto& x : p) x = checked_mul(x, k);
        if (factorize(atoms, p, 2).size() != 1) return false;
    }
    return true;
}

namespace {

// Calls f on each composition of `total` into `parts` positive integers.
bool for_compositions(Int total, std::size_t parts, Vec& cur, const std::function<bool(const Vec&)>& f) {
    if (cur.size() + 1 == parts) {
        if (total < 1) return false;
        cur.push_back(total);
        bool stop = f(cur);
        cur.pop_back();
        return stop;
    }
    for (Int k = 1; k + static_cast<Int>(parts - cur.size() - 1) <= total; ++k) {
        cur.push_back(k);
        bool stop = for_compositions(total - k, parts, cur, f);
        cur.pop_back();
        if (stop) return true;
    }
    return false;
}

bool for_combinations(std::size_t n, std::size_t s, std::vector<std::size_t>& cur, std::size_t start,
                      const std::function<bool(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == s) return f(cur);
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        bool stop = for_combinations(n, s, cur, i + 1, f);
        cur.pop_back();
        if (stop) return true;
    }
    return false;
}

WitnessResult witness_search(Monoid& h, Int search_bound, bool tie_to_davenport) {
    const AtomSet& a = h.atoms();
    const Int d = a.davenport;
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (absolutely_irreducible(a, i)) w.push_back(i);
    std::unordered_set<Key> atom_keys;
    for (const auto& x : a.atoms) atom_keys.insert(pack(x));
    auto two_atoms = [&](const Vec& b) {
        for (const auto& x : a.atoms)
            if (vec_divides(x, b) && atom_keys.count(pack(vec_sub(b, x)))) return true;
        return false;
    };
    WitnessResult r;
    if (tie_to_davenport && d > search_bound) return r;
    for (std::size_t s = 1; s <= w.size(); ++s) {
        std::vector<std::size_t> comb;
        bool hit = for_combinations(w.size(), s, comb, 0, [&](const std::vector<std::size_t>& c) {
            auto test = [&](const Vec& k) {
                Vec b(a.alphabet->size(), 0);
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t g = 0; g < b.size(); ++g) b[g] += k[i] * a.atoms[w[c[i]]][g];
                bool ok;
                if (tie_to_davenport) {
                    ok = two_atoms(b);
                } else {
                    const auto& l = h.lengths(b);
                    ok = std::binary_search(l.begin(), l.end(), Int{2}) && std::binary_search(l.begin(), l.end(), d);
                }
                if (!ok) return false;
                r.found = true;
                r.s = static_cast<Int>(s);
                for (auto i : c) r.atoms.push_back(w[i]);
                r.exponents = k;
                return true;
            };
            Vec cur;
            if (tie_to_davenport) return for_compositions(d, s, cur, test);
            for (Int total = static_cast<Int>(s); total <= search_bound; ++total)
                if (for_compositions(total, s, cur, test)) return true;
            return false;
        });
        if (hit) return r;
    }
    return r;
}

}  // namespace

WitnessResult min_abs_irred_witness(Monoid& h, Int search_bound) { return witness_search(h, search_bound, true); }

WitnessResult min_abs_irred_witness_any_exponents(Monoid& h, Int search_bound) {
    return witness_search(h, search_bound, false);
}

}  // namespace krull
