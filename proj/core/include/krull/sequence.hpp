#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krull/group.hpp"
#include "krull/intmat.hpp"

namespace krull {

// A finite subset G0 of a group, kept in canonical (lexicographic) order.
class Alphabet {
public:
    Alphabet(GroupSpec spec, std::vector<GroupElement> elements);

    const GroupSpec& spec() const { return spec_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> index_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
    std::optional<std::size_t> zero_index() const;
    // True when -G0 = G0.
    bool is_symmetric() const;
    // Index of -g for each symbol; throws AlphabetError when the alphabet is not symmetric.
    std::vector<std::size_t> negation_table() const;
    // Coordinate matrix: one row per group coordinate, one column per symbol.
    Matrix coordinate_matrix() const;

    bool operator==(const Alphabet& o) const { return spec_ == o.spec_ && elements_ == o.elements_; }

private:
    GroupSpec spec_;
    std::vector<GroupElement> elements_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(GroupSpec spec, std::vector<GroupElement> elements);
// Subset of an alphabet given by symbol indices.
AlphabetPtr sub_alphabet(const Alphabet& a, const std::vector<std::size_t>& indices);

// A multiset over an alphabet, stored as a dense multiplicity vector.
class Sequence {
public:
    explicit Sequence(AlphabetPtr alphabet);
    Sequence(AlphabetPtr alphabet, Vec multiplicities);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Vec& multiplicities() const { return mult_; }
    Int count(std::size_t i) const { return mult_[i]; }
    Int length() const;
    std::vector<std::size_t> support() const;
    bool empty() const { return length() == 0; }

    bool operator==(const Sequence& o) const;

private:
    AlphabetPtr alphabet_;
    Vec mult_;
};

GroupElement sigma(const Sequence& s);
bool divides(const Sequence& a, const Sequence& b);
Sequence multiply(const Sequence& a, const Sequence& b);
// Componentwise minimum.
Sequence gcd(const Sequence& a, const Sequence& b);
// b / a; requires divides(a, b).
Sequence quotient(const Sequence& b, const Sequence& a);
// -S over the same alphabet, or over `target` when given.
Sequence negate(const Sequence& s, const AlphabetPtr& target = nullptr);

// Rendering "g1^k1 * g2^k2"; the empty sequence renders as "1".
std::string to_string(const Sequence& s);
Sequence parse_sequence(const AlphabetPtr& alphabet, const std::string& text);

// Dense-vector helpers shared by the enumeration code.
Int vec_sum(const Vec& v);
bool vec_divides(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_min(const Vec& a, const Vec& b);
bool is_zero_sum(const Alphabet& a, const Vec& v);

}  // namespace krull
