#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krull/factorization.hpp"

namespace krull {

// A value from a possibly incomplete search.  `exact` is set only when the
// value is certified; `certificate` names the argument used.
struct BoundedSet {
    LengthSet value;
    bool exact = false;
    Int bound_used = 0;
    std::string certificate;
};

struct BoundedInt {
    Int value = 0;
    bool exact = false;
    Int bound_used = 0;
    std::string certificate;
};

struct UnionProfile {
    Int k = 0;
    LengthSet U;
    Int rho = 0;
    Int lambda = 0;
};

struct SweepOptions {
    std::size_t product_guard = 4000000;  // largest admissible number of distinct products per level
    std::size_t cover_guard = 20000000;   // largest admissible number of covers per atom
    int threads = 1;
};

// B(G0) together with caches shared by the monoid-level computations.
class Monoid {
public:
    explicit Monoid(AtomSet atoms, SweepOptions opt = {});

    const AtomSet& atoms() const { return *atoms_; }
    const SweepOptions& options() const { return opt_; }
    LengthOracle& oracle() { return oracle_; }
    const LengthSet& lengths(const Vec& b) { return oracle_.lengths(b); }

    // Distinct products of exactly k atoms, sorted.
    const std::vector<Key>& products(Int k);

    UnionProfile unions(Int k);
    // min U_k, obtained as the least l with k in U_l.
    Int lambda(Int k);
    Int rho(Int k) { return unions(k).rho; }

    Int omega(std::size_t u);
    Int tame(std::size_t u);
    Int monoid_omega();
    Int monoid_tame();
    // Number of minimal covers found for atom u (diagnostic).
    std::size_t cover_count(std::size_t u);

    // gcd of |z| - |z'| over all pairs of factorizations of equal elements.
    Int length_gcd();
    bool is_factorial() { return monoid_omega() <= 1; }

private:
    struct CoverData {
        Int omega = 0;
        Int tame = 0;
        std::size_t count = 0;
    };
    const CoverData& covers(std::size_t u);

    std::shared_ptr<const AtomSet> atoms_;
    SweepOptions opt_;
    LengthOracle oracle_;
    std::vector<std::vector<Key>> levels_;
    std::map<Int, UnionProfile> unions_;
    std::map<std::size_t, CoverData> covers_;
    std::optional<Int> length_gcd_;
};

// Union of Delta(L(B)) over products of at most product_bound atoms.  When
// `certify` is set the result is marked exact if it fills every multiple of
// the length gcd up to omega - 2 (an upper bound for max Delta).
BoundedSet delta_set(Monoid& h, Int product_bound, bool certify = true);
BoundedSet delta_set(const AtomSet& atoms, Int product_bound);

struct MonoidCatenary {
    BoundedInt c;
    BoundedInt c_eq;
    BoundedInt c_adj;
    BoundedInt c_mon;
};

// Maxima of the element catenary degrees over products of at most `bound`
// atoms.  c is exact when it meets omega; c_mon is exact when it meets a
// supplied closed-form value.
MonoidCatenary monoid_catenary(Monoid& h, Int bound, std::optional<Int> closed_form_mon = std::nullopt);

struct ElasticityResult {
    Rational value;
    bool exact = false;
    Int bound_used = 0;
};

// D/2 when G0 is symmetric; otherwise the lower bound max rho_k / k for k <= k_bound.
ElasticityResult elasticity(Monoid& h, Int k_bound = 4);

struct DeltaStarResult {
    BoundedSet value;
    // For each d in Delta*, one subset G1 (symbol indices) with min Delta(G1) = d.
    std::map<Int, std::vector<std::size_t>> witnesses;
    std::size_t subsets_examined = 0;
};

// { min Delta(G1) : G1 subset of G0, Delta(G1) nonempty }, computed from the
// length gcd of each B(G1).  Refuses alphabets larger than `max_symbols`.
DeltaStarResult delta_star(const AtomSet& atoms, int threads = 1, std::size_t max_symbols = 20);

bool absolutely_irreducible(const AtomSet& atoms, std::size_t u);
// True when u^n has exactly one factorization for every n <= check_bound.
bool unique_power_factorizations(const AtomSet& atoms, std::size_t u, Int check_bound);

struct WitnessResult {
    bool found = false;
    Int s = 0;
    std::vector<std::size_t> atoms;  // absolutely irreducible atoms w_1..w_s
    Vec exponents;                   // k_1..k_s
};

// Least s such that absolutely irreducible w_1..w_s and exponents k_i with
// sum k_i = D exist and 2 lies in L(w_1^k_1 ... w_s^k_s), so that the product
// has factorizations of lengths 2 and D.  Requires D <= search_bound.
WitnessResult min_abs_irred_witness(Monoid& h, Int search_bound);
// Same search without tying the exponents to D: any exponents with sum at most
// search_bound, asking only for 2 and D in the set of lengths.
WitnessResult min_abs_irred_witness_any_exponents(Monoid& h, Int search_bound);

}  // namespace krull
