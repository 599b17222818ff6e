#include <doctest.h>

#include "krull/invariants.hpp"
#include "krull/presets.hpp"
#include "oracles.hpp"

using namespace krull;

namespace {

LengthSet to_vec(const std::set<Int>& s) { return LengthSet(s.begin(), s.end()); }

}  // namespace

TEST_SUITE("invariants") {
    TEST_CASE("omega agrees with brute-force covers") {
        for (const char* name : {"five_point", "four_point", "thm74:2:1", "frt_t:2", "cyclic:4"}) {
            CAPTURE(name);
            Preset p = preset_from_name(name);
            Monoid h(enumerate_atoms(p.alphabet));
            const AtomSet& a = h.atoms();
            Int best = 0;
            for (std::size_t u = 0; u < a.size(); ++u) {
                CAPTURE(u);
                Int w = oracle::omega(a.atoms, u, a.length(u));
                CHECK(h.omega(u) == w);
                CHECK(h.tame(u) >= 0);
                best = std::max(best, w);
            }
            CHECK(h.monoid_omega() == best);
        }
    }

    TEST_CASE("rho_k agrees with brute force") {
        for (const char* name : {"five_point", "prop713", "thm74:2:2", "cyclic:5"}) {
            CAPTURE(name);
            Preset p = preset_from_name(name);
            Monoid h(enumerate_atoms(p.alphabet));
            for (Int k = 1; k <= 3; ++k) {
                CAPTURE(k);
                auto u = h.unions(k);
                CHECK(u.rho == oracle::rho(h.atoms().atoms, k));
                CHECK(u.U.back() == u.rho);
                CHECK(u.U.front() == u.lambda);
                CHECK(h.lambda(k) == u.lambda);
                CHECK(std::binary_search(u.U.begin(), u.U.end(), k));
            }
        }
    }

    TEST_CASE("union of length differences agrees with brute force") {
        for (const char* name : {"five_point", "four_point", "prop713", "thm74:2:1", "cyclic:5", "split2:1"}) {
            CAPTURE(name);
            Preset p = preset_from_name(name);
            Monoid h(enumerate_atoms(p.alphabet));
            auto d = delta_set(h, 4, false);
            CHECK(d.value == to_vec(oracle::delta(h.atoms().atoms, 4)));
        }
    }

    TEST_CASE("certified delta set stops at a proven value") {
        Monoid h(enumerate_atoms(preset_from_name("cube:3:0").alphabet));
        auto d = delta_set(h, 8);
        CHECK(d.exact);
        CHECK(d.value == LengthSet{1, 2, 3});
        CHECK(d.bound_used <= 8);
    }

    TEST_CASE("factorial monoids") {
        Monoid h(enumerate_atoms(preset_from_name("frt_t:1").alphabet));
        CHECK(h.is_factorial());
        CHECK(h.monoid_omega() == 1);
        CHECK(h.monoid_tame() == 0);
        CHECK(delta_set(h, 5).value.empty());
        auto c = monoid_catenary(h, 4);
        CHECK(c.c.value == 0);
    }

    TEST_CASE("catenary degree of the monoid is bounded by omega") {
        for (const char* name : {"five_point", "thm74:2:1", "cyclic:4"}) {
            CAPTURE(name);
            Monoid h(enumerate_atoms(preset_from_name(name).alphabet));
            auto c = monoid_catenary(h, 4);
            CHECK(c.c.value <= h.monoid_omega());
            CHECK(c.c.value <= c.c_mon.value);
            auto d = delta_set(h, 4, false);
            if (!d.value.empty()) CHECK(2 + d.value.back() <= c.c.value);
        }
    }

    TEST_CASE("elasticity of symmetric alphabets is half the Davenport constant") {
        Monoid h(enumerate_atoms(preset_from_name("thm74:3:1").alphabet));
        auto e = elasticity(h);
        CHECK(e.exact);
        CHECK(e.value == Rational::make(h.atoms().davenport, 2));
        Monoid g(enumerate_atoms(make_alphabet(GroupSpec::free(1), {make_element(GroupSpec::free(1), {3}),
                                                                   make_element(GroupSpec::free(1), {-2})})));
        CHECK(elasticity(g).value == Rational{1, 1});
    }

    TEST_CASE("minimal distances over subsets agree with a bounded sweep") {
        for (const char* name : {"cyclic:5", "five_point", "prop713"}) {
            CAPTURE(name);
            AtomSet a = enumerate_atoms(preset_from_name(name).alphabet);
            auto ds = delta_star(a);
            std::set<Int> sweep;
            const std::size_t n = a.alphabet->size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                std::vector<std::size_t> sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1) sub.push_back(i);
                AtomSet r = restrict_atoms(a, sub);
                if (r.size() < 2) continue;
                auto d = oracle::delta(r.atoms, 3);
                if (!d.empty()) sweep.insert(*d.begin());
            }
            CHECK(ds.value.value == to_vec(sweep));
            for (const auto& [d, w] : ds.witnesses) {
                AtomSet r = restrict_atoms(a, w);
                auto got = oracle::delta(r.atoms, 3);
                REQUIRE_FALSE(got.empty());
                CHECK(*got.begin() == d);
            }
        }
        CHECK(delta_star(enumerate_atoms(preset_from_name("cyclic:7").alphabet)).value.value == LengthSet{1, 2, 5});
    }

    TEST_CASE("absolute irreducibility matches unique powers") {
        for (const char* name : {"thm74:2:1", "five_point", "cyclic:4"}) {
            CAPTURE(name);
            AtomSet a = enumerate_atoms(preset_from_name(name).alphabet);
            for (std::size_t u = 0; u < a.size(); ++u) {
                CAPTURE(u);
                CHECK(absolutely_irreducible(a, u) == unique_power_factorizations(a, u, 6));
            }
        }
    }

    TEST_CASE("abs-irreducible witnesses") {
        Monoid h(enumerate_atoms(preset_from_name("thm74:2:1").alphabet));
        auto w = min_abs_irred_witness(h, 8);
        REQUIRE(w.found);
        CHECK(w.s == 3);
        CHECK(vec_sum(w.exponents) == h.atoms().davenport);
        Vec b(h.atoms().alphabet->size(), 0);
        for (std::size_t i = 0; i < w.atoms.size(); ++i) {
            CHECK(absolutely_irreducible(h.atoms(), w.atoms[i]));
            for (Int k = 0; k < w.exponents[i]; ++k) b = vec_add(b, h.atoms().atoms[w.atoms[i]]);
        }
        auto l = oracle::lengths(oracle::factorizations(h.atoms().atoms, b));
        CHECK(l.count(2) == 1);
        CHECK(l.count(h.atoms().davenport) == 1);
        auto any = min_abs_irred_witness_any_exponents(h, 8);
        REQUIRE(any.found);
        CHECK(any.s == 2);
    }
}
