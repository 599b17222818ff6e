#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krull/atoms.hpp"
#include "krull/factorization.hpp"
#include "krull/transfer.hpp"

namespace krull {

// Closed-form values a preset is known to satisfy.  Unset fields carry no claim.
struct Expected {
    std::optional<Int> atom_count;
    std::optional<Int> davenport;
    std::optional<Int> davenport_lower_bound;
    std::optional<LengthSet> delta;
    std::optional<Int> catenary;
    std::optional<Int> monotone_catenary;
    std::optional<Int> omega;
    std::optional<Int> tame;
    std::optional<Rational> elasticity;
    std::map<Int, Int> rho;     // k -> rho_k
    std::map<Int, Int> lambda;  // k -> lambda_k
    std::map<Int, LengthSet> unions;
    std::optional<Int> delta_star_max;
    std::optional<Int> delta_star_second_max;
    std::optional<LengthSet> delta_star_contains;
    std::optional<bool> divisor_theory;
    std::optional<Int> components;
    // Closed-form count (n^2+8)/4 for D_n, n even; known to disagree with multiset counting
    // for some characteristics, so it is reported but never enforced.
    std::optional<Int> lifted_atoms_closed_form;
    std::optional<Int> lifted_atoms;
};

struct Preset {
    std::string name;    // canonical "family:p1:p2" form
    std::string family;
    std::map<std::string, std::string> params;
    AlphabetPtr alphabet;
    std::optional<Characteristic> characteristic;
    Expected expected;
};

struct FamilyInfo {
    std::string family;
    std::vector<std::string> params;
    std::string description;
};

std::vector<FamilyInfo> list_families();
Preset build_preset(const std::string& family, const std::map<std::string, std::string>& params);
// "thm74:2:1", "cyclic:5", "hypersurface:D:6", ... (positional parameters).
Preset preset_from_name(const std::string& name);

struct DefiningMatrix {
    int rows = 0;
    std::vector<std::pair<Vec, Int>> columns;  // (column, multiplicity)
};

// Block-monoid model of ker(M) on N^columns.  With `row_reduce`, the matrix is
// first brought to Hermite form and zero rows are dropped.
Preset from_matrix(const DefiningMatrix& m, bool row_reduce = false);

struct DivisorTheoryResult {
    bool value = false;
    std::string reason;
    // Result of the rank-one criterion (some -ke and le with k, l >= 2), when it applies.
    std::optional<bool> cyclic_criterion;
};

DivisorTheoryResult check_divisor_theory(const Preset& p, const AtomSet& atoms);
DivisorTheoryResult check_divisor_theory(const Preset& p, const AtomOptions& opt = {});

bool check_cofinal(const AtomSet& atoms);

struct Decomposition {
    enum class Kind { nontrivial, prime, unused };
    std::vector<std::vector<std::size_t>> parts;  // symbol indices, each part sorted
    std::vector<Kind> kinds;
    std::size_t nontrivial() const;
};

// Connected components of the graph joining symbols that share an atom.
Decomposition decompose(const AtomSet& atoms);

Int fibonacci(int n);

}  // namespace krull
