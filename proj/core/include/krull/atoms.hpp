#pragma once

#include <vector>

#include "krull/sequence.hpp"

namespace krull {

struct AtomOptions {
    Int cap = 64;     // largest multiplicity a candidate may reach before BoundExceeded
    int threads = 1;
};

// A(G0): the minimal zero-sum sequences over an alphabet, in canonical order
// (by length, then lexicographically by multiplicity vector).
struct AtomSet {
    AlphabetPtr alphabet;
    std::vector<Vec> atoms;
    Int davenport = 0;
    bool no_zero_sum = false;  // set when G0 carries no nonempty zero-sum sequence

    std::size_t size() const { return atoms.size(); }
    Sequence atom(std::size_t i) const { return Sequence(alphabet, atoms[i]); }
    Int length(std::size_t i) const { return vec_sum(atoms[i]); }
    std::vector<std::size_t> support(std::size_t i) const;
};

// Minimal nonzero v >= 0 with sum_j v_j * columns[j] = 0. Columns may repeat.
std::vector<Vec> minimal_zero_sum_vectors(const GroupSpec& g, const std::vector<GroupElement>& columns,
                                          const AtomOptions& opt = {});

AtomSet enumerate_atoms(const AlphabetPtr& g0, const AtomOptions& opt = {});
Int davenport_constant(const AlphabetPtr& g0, const AtomOptions& opt = {});

// Atoms of B(G1) for the sub-alphabet G1 given by symbol indices of `atoms.alphabet`.
AtomSet restrict_atoms(const AtomSet& atoms, const std::vector<std::size_t>& symbols);

void sort_canonical(std::vector<Vec>& vecs);
// Removes every vector that is divisible by a different vector of the list.
std::vector<Vec> minimal_elements(std::vector<Vec> vecs);

}  // namespace krull
