#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krull/atoms.hpp"
#include "krull/factorization.hpp"

namespace krull {

// Symbol-wise map between alphabets, extended multiplicatively to sequences.
class TransferMap {
public:
    // assignment[i] is the image of source symbol i.  Throws MapError when an
    // image is missing from the target or a source atom maps to a non-zero-sum.
    TransferMap(std::string name, AlphabetPtr source, AlphabetPtr target, std::vector<GroupElement> assignment);

    const std::string& name() const { return name_; }
    const AlphabetPtr& source() const { return source_; }
    const AlphabetPtr& target() const { return target_; }
    std::size_t image_index(std::size_t i) const { return image_[i]; }

    Vec apply(const Vec& b) const;
    Sequence apply(const Sequence& b) const;

private:
    std::string name_;
    AlphabetPtr source_, target_;
    std::vector<std::size_t> image_;
};

TransferMap identity_map(const AlphabetPtr& a);
// {0, +-e, +-2e} in Z onto C3.
TransferMap builtin_prop712();
// The nine-element subset of Z^2 onto C4.
TransferMap builtin_prop713();
// {1, -1} in Z collapsed onto {0}; not a transfer homomorphism.
TransferMap builtin_collapse();
TransferMap builtin_map(const std::string& name);

struct TransferCheck {
    bool t1_ok = true;
    bool t2_ok = true;
    std::optional<std::string> counterexample;
    std::size_t source_blocks = 0;
    std::size_t target_blocks = 0;
};

// Exhaustive (T1)/(T2) verification over sequences of length <= size_bound.
TransferCheck check_transfer(const TransferMap& m, Int size_bound, int threads = 1);

struct LengthCheck {
    bool ok = true;
    std::optional<std::string> violation;
    std::size_t blocks = 0;
};

// L(A) = L(theta(A)) for every source block with |A| <= size_bound.
LengthCheck lengths_preserved(const TransferMap& m, Int size_bound);

// All zero-sum sequences over an alphabet with length <= max_len, in lexicographic order.
std::vector<Vec> zero_sum_sequences(const Alphabet& a, Int max_len);

struct Characteristic {
    GroupSpec group;
    std::vector<std::pair<GroupElement, Int>> classes;  // class -> number of primes m_g

    AlphabetPtr support() const;
    Int multiplicity(const GroupElement& g) const;
};

struct LiftedAtomCount {
    Int formula = 0;                   // sum over atoms U of prod_g C(m_g + v_g - 1, v_g)
    std::optional<Int> brute_force;    // atoms of the labeled-prime monoid
    Int support_atoms = 0;             // |A(G_P)|
};

LiftedAtomCount count_lifted_atoms(const Characteristic& c, std::size_t brute_force_columns = 24,
                                   const AtomOptions& opt = {});

Int binomial(Int n, Int k);

}  // namespace krull
