#pragma once

#include <compare>
#include <string>
#include <vector>

#include "krull/checked.hpp"

namespace krull {

// The group Z^free_rank + Z/torsion[0] + ... + Z/torsion[t-1].
struct GroupSpec {
    int free_rank = 0;
    std::vector<Int> torsion;

    GroupSpec() = default;
    GroupSpec(int r, std::vector<Int> t);

    static GroupSpec free(int r) { return GroupSpec(r, {}); }
    static GroupSpec cyclic(Int n) { return GroupSpec(0, {n}); }

    int torsion_rank() const { return static_cast<int>(torsion.size()); }
    int coordinates() const { return free_rank + torsion_rank(); }
    bool is_finite() const { return free_rank == 0; }
    // lcm of the torsion moduli, 1 if there are none.
    Int exponent() const;
    // Group order, 0 when infinite.
    Int order() const;

    bool operator==(const GroupSpec&) const = default;
};

// Element in canonical form: torsion residues lie in [0, n_i).
struct GroupElement {
    std::vector<Int> free;
    std::vector<Int> torsion;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

// Builds an element, reducing torsion residues; throws ShapeError on size mismatch.
GroupElement make_element(const GroupSpec& g, std::vector<Int> free, std::vector<Int> torsion = {});
// Builds an element from a flat coordinate list (free coordinates first).
GroupElement element_from_coords(const GroupSpec& g, const std::vector<Int>& coords);
std::vector<Int> coords_of(const GroupElement& a);

GroupElement zero(const GroupSpec& g);
bool is_zero(const GroupElement& a);
void check_member(const GroupSpec& g, const GroupElement& a);

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& g, const GroupElement& a);
GroupElement sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement scale(const GroupSpec& g, Int k, const GroupElement& a);

// Smallest k >= 1 with k*a = 0, or 0 when a has infinite order.
Int element_order(const GroupSpec& g, const GroupElement& a);

// Torsion-free rank of the subgroup generated by gens.
int subgroup_rank(const GroupSpec& g, const std::vector<GroupElement>& gens);

// "(1,-2)" style rendering: free coordinates then torsion residues.
std::string to_string(const GroupElement& a);
GroupElement parse_element(const GroupSpec& g, const std::string& text);

}  // namespace krull
