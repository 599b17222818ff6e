#include <doctest.h>

#include <random>

#include "krull/factorization.hpp"
#include "krull/presets.hpp"
#include "oracles.hpp"

using namespace krull;

namespace {

std::set<Vec> as_set(const std::vector<Factorization>& zs) {
    std::set<Vec> s;
    for (const auto& z : zs) s.insert(z.counts);
    return s;
}

// Random products of a few atoms, so that every sample is a zero-sum block.
std::vector<Vec> sample_blocks(const AtomSet& a, std::size_t n, Int max_atoms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    std::uniform_int_distribution<Int> count(1, max_atoms);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) {
        Vec b(a.alphabet->size(), 0);
        for (Int k = count(rng); k > 0; --k) b = vec_add(b, a.atoms[pick(rng)]);
        out.push_back(b);
    }
    return out;
}

}  // namespace

TEST_SUITE("factorizations") {
    TEST_CASE("rationals") {
        CHECK(Rational::make(6, 4) == Rational{3, 2});
        CHECK(Rational::make(6, 4).str() == "3/2");
        CHECK(Rational::make(4, 2).str() == "2");
        CHECK(Rational{1, 2} < Rational{2, 3});
    }

    TEST_CASE("length profile") {
        auto p = length_profile({2, 3, 5, 8});
        CHECK(p.delta == LengthSet{1, 2, 3});
        CHECK(p.elasticity == Rational{4, 1});
        CHECK(delta_of({4}).empty());
    }

    TEST_CASE("factorize agrees with exhaustive search") {
        for (const char* name : {"five_point", "prop713", "thm74:2:2", "cube:2:1", "cyclic:6", "split2:1"}) {
            CAPTURE(name);
            Preset p = preset_from_name(name);
            AtomSet a = enumerate_atoms(p.alphabet);
            for (const Vec& b : sample_blocks(a, 25, 4, 7)) {
                auto mine = factorize(a, b);
                auto brute = oracle::factorizations(a.atoms, b);
                CHECK(as_set(mine) == brute);
                for (const auto& z : mine) CHECK(product_of(a, z) == b);
                LengthOracle lo(a);
                auto l = lo.lengths(b);
                CHECK(std::set<Int>(l.begin(), l.end()) == oracle::lengths(brute));
            }
        }
    }

    TEST_CASE("factorize rejects blocks that are not zero-sum") {
        Preset p = preset_from_name("five_point");
        AtomSet a = enumerate_atoms(p.alphabet);
        Vec b(p.alphabet->size(), 0);
        b[4] = 1;
        CHECK_THROWS_AS(factorize(a, b), DomainError);
        CHECK(factorize(a, Vec(p.alphabet->size(), 0)).size() == 1);
    }

    TEST_CASE("factorization guard") {
        Preset p = preset_from_name("cyclic:5");
        AtomSet a = enumerate_atoms(p.alphabet);
        Vec b(p.alphabet->size(), 10);
        b[0] = 0;
        CHECK_THROWS_AS(factorize(a, b, 10), BoundExceeded);
    }

    TEST_CASE("distance") {
        Factorization z{{2, 1, 0}}, w{{0, 1, 3}};
        CHECK(distance(z, w) == 3);
        CHECK(distance(z, w) == oracle::distance(z.counts, w.counts));
        CHECK(distance(z, z) == 0);
    }

    TEST_CASE("catenary degree agrees with threshold connectivity") {
        for (const char* name : {"four_point", "thm74:2:1", "cyclic:5", "frt_t:2"}) {
            CAPTURE(name);
            Preset p = preset_from_name(name);
            AtomSet a = enumerate_atoms(p.alphabet);
            for (const Vec& b : sample_blocks(a, 20, 4, 11)) {
                auto zs = factorize(a, b);
                auto prof = catenary_profile(zs);
                CHECK(prof.c == oracle::catenary(as_set(zs)));
                CHECK(prof.c <= prof.c_mon);
                CHECK(prof.c_eq <= prof.c_mon);
                CHECK(prof.c_adj <= prof.c_mon);
                CHECK(prof.c_mon == std::max(prof.c_eq, prof.c_adj));
                if (zs.size() > 1) CHECK(prof.c >= 2);
            }
        }
    }

    TEST_CASE("pack round trip") {
        Vec v{0, 3, 70000 % 65535, 1};
        CHECK(unpack(pack(v)) == v);
    }
}
