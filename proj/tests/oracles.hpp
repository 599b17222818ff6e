#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share only data types with the code under test.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "krull/atoms.hpp"
#include "krull/factorization.hpp"

namespace oracle {

using krull::Int;
using krull::Vec;

inline bool zero_sum(const krull::Alphabet& a, const Vec& v) {
    const auto& spec = a.spec();
    std::vector<Int> total(static_cast<std::size_t>(spec.coordinates()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto c = krull::coords_of(a[i]);
        for (std::size_t j = 0; j < c.size(); ++j) total[j] += v[i] * c[j];
    }
    for (std::size_t j = 0; j < total.size(); ++j) {
        const bool torsion = static_cast<int>(j) >= spec.free_rank;
        const Int m = torsion ? spec.torsion[j - static_cast<std::size_t>(spec.free_rank)] : 0;
        if (torsion ? total[j] % m != 0 : total[j] != 0) return false;
    }
    return true;
}

inline void for_each_vector(std::size_t n, Int max_len, const std::function<void(const Vec&)>& f) {
    Vec v(n, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
        if (i == n) {
            f(v);
            return;
        }
        for (Int k = 0; k <= left; ++k) {
            v[i] = k;
            rec(i + 1, left - k);
        }
        v[i] = 0;
    };
    rec(0, max_len);
}

inline bool leq(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Minimal zero-sum sequences of length at most max_len, sorted.
inline std::vector<Vec> atoms(const krull::Alphabet& a, Int max_len) {
    std::vector<Vec> zs;
    for_each_vector(a.size(), max_len, [&](const Vec& v) {
        if (std::any_of(v.begin(), v.end(), [](Int x) { return x > 0; }) && zero_sum(a, v)) zs.push_back(v);
    });
    std::vector<Vec> out;
    for (const auto& v : zs) {
        bool minimal = true;
        for (const auto& w : zs)
            if (w != v && leq(w, v)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every multiplicity vector c over `atoms` with sum_i c_i atoms[i] == b.
inline std::set<Vec> factorizations(const std::vector<Vec>& atoms, const Vec& b) {
    std::set<Vec> out;
    Vec c(atoms.size(), 0);
    std::function<void(std::size_t, Vec)> rec = [&](std::size_t i, Vec rest) {
        if (i == atoms.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; })) out.insert(c);
            return;
        }
        Int k = 0;
        Vec r = rest;
        while (true) {
            c[i] = k;
            rec(i + 1, r);
            bool ok = true;
            for (std::size_t g = 0; g < r.size(); ++g) {
                r[g] -= atoms[i][g];
                if (r[g] < 0) ok = false;
            }
            if (!ok) break;
            ++k;
        }
        c[i] = 0;
    };
    rec(0, b);
    return out;
}

inline std::set<Int> lengths(const std::set<Vec>& z) {
    std::set<Int> l;
    for (const auto& f : z) {
        Int s = 0;
        for (Int x : f) s += x;
        l.insert(s);
    }
    return l;
}

inline Int distance(const Vec& z, const Vec& w) {
    Int a = 0, b = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        Int g = std::min(z[i], w[i]);
        a += z[i] - g;
        b += w[i] - g;
    }
    return std::max(a, b);
}

// Least N such that the graph joining factorizations at distance <= N is connected.
inline Int catenary(const std::set<Vec>& zs) {
    std::vector<Vec> z(zs.begin(), zs.end());
    if (z.size() <= 1) return 0;
    std::set<Int> candidates;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) candidates.insert(distance(z[i], z[j]));
    for (Int n : candidates) {
        std::vector<bool> seen(z.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < z.size(); ++j)
                if (!seen[j] && distance(z[i], z[j]) <= n) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) return n;
    }
    return *candidates.rbegin();
}

// All multisets of exactly k atom indices, as count vectors.
inline void for_each_multiset(std::size_t n, Int k, const std::function<void(const Vec&)>& f) {
    Vec c(n, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
        if (i + 1 == n) {
            c[i] = left;
            f(c);
            c[i] = 0;
            return;
        }
        for (Int x = left; x >= 0; --x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
        c[i] = 0;
    };
    if (n > 0) rec(0, k);
}

inline Vec product(const std::vector<Vec>& atoms, const Vec& counts) {
    Vec b(atoms.empty() ? 0 : atoms[0].size(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t g = 0; g < b.size(); ++g) b[g] += counts[i] * atoms[i][g];
    return b;
}

// omega(u): over all multisets of at most max_size atoms whose product u divides,
// the largest least size of a sub-multiset whose product u still divides.
inline Int omega(const std::vector<Vec>& atoms, std::size_t u, Int max_size) {
    Int best = 0;
    for (Int k = 1; k <= max_size; ++k)
        for_each_multiset(atoms.size(), k, [&](const Vec& c) {
            if (!leq(atoms[u], product(atoms, c))) return;
            Int least = k;
            for (Int s = 1; s < least; ++s) {
                bool found = false;
                for_each_multiset(atoms.size(), s, [&](const Vec& d) {
                    if (!found && leq(d, c) && leq(atoms[u], product(atoms, d))) found = true;
                });
                if (found) {
                    least = s;
                    break;
                }
            }
            best = std::max(best, least);
        });
    return best;
}

// rho_k: the largest length of any block that is a product of k atoms.
inline Int rho(const std::vector<Vec>& atoms, Int k) {
    Int best = 0;
    for_each_multiset(atoms.size(), k, [&](const Vec& c) {
        auto l = lengths(factorizations(atoms, product(atoms, c)));
        best = std::max(best, *l.rbegin());
    });
    return best;
}

// Union of Delta(L(B)) over products of at most k atoms.
inline std::set<Int> delta(const std::vector<Vec>& atoms, Int k) {
    std::set<Int> d;
    for (Int j = 2; j <= k; ++j)
        for_each_multiset(atoms.size(), j, [&](const Vec& c) {
            auto l = lengths(factorizations(atoms, product(atoms, c)));
            for (auto it = l.begin(); std::next(it) != l.end(); ++it) d.insert(*std::next(it) - *it);
        });
    return d;
}

}  // namespace oracle
