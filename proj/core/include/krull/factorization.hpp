#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "krull/atoms.hpp"

namespace krull {

// Nonnegative rational p/q in lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;
    static Rational make(Int p, Int q);
    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
    std::string str() const;
};

// An element of Z(B): multiplicities over the atoms of an AtomSet.
struct Factorization {
    Vec counts;
    Int length() const { return vec_sum(counts); }
    bool operator==(const Factorization&) const = default;
    auto operator<=>(const Factorization&) const = default;
};

using LengthSet = std::vector<Int>;  // sorted, distinct

struct LengthProfile {
    LengthSet lengths;
    LengthSet delta;
    Rational elasticity;
};

LengthSet delta_of(const LengthSet& l);
LengthProfile length_profile(const LengthSet& l);

// Z(B) by ordered depth-first search: atoms in canonical order, multiplicities
// tried from largest to smallest.  Throws DomainError unless sigma(B) = 0 and
// BoundExceeded once more than `guard` factorizations exist.
std::vector<Factorization> factorize(const AtomSet& atoms, const Vec& b, std::size_t guard = 1000000);
std::vector<Factorization> factorize(const AtomSet& atoms, const Sequence& b, std::size_t guard = 1000000);

Vec product_of(const AtomSet& atoms, const Factorization& z);
Int distance(const Factorization& z, const Factorization& w);

struct CatenaryProfile {
    Int c = 0;
    Int c_eq = 0;
    Int c_adj = 0;
    Int c_mon = 0;
};

// All four catenary degrees of an element given its full set of factorizations.
CatenaryProfile catenary_profile(const std::vector<Factorization>& z, int threads = 1);
CatenaryProfile catenary_profile(const AtomSet& atoms, const Sequence& b, int threads = 1);

// Packed multiplicity vectors used as hash keys by the sweeps.
using Key = std::u16string;
Key pack(const Vec& v);
Vec unpack(const Key& k);

// Memoised L(B) over a fixed atom set.  Not thread-safe; use one per thread.
class LengthOracle {
public:
    explicit LengthOracle(const AtomSet& atoms);

    const AtomSet& atoms() const { return *atoms_; }
    // L(B); empty when B has no factorization.  B is not checked for zero-sum.
    const LengthSet& lengths(const Vec& b);
    std::size_t memo_size() const { return memo_.size(); }

private:
    std::uint32_t solve(Vec& b);
    std::uint32_t intern(LengthSet s);

    const AtomSet* atoms_;
    std::vector<bool> prime_symbol_;
    std::vector<std::vector<std::size_t>> containing_;  // atoms (non-prime) containing symbol g
    std::unordered_map<Key, std::uint32_t> memo_;
    std::vector<LengthSet> sets_;
    std::unordered_map<Key, std::uint32_t> set_ids_;
    LengthSet scratch_;
};

}  // namespace krull
