#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krull/invariants.hpp"

namespace krull {

// Systems of sets of lengths with a closed-form description.
//   C3:          { y + 2k + P_k(1) }
//   C4:          { y + k + 1 + P_k(1) } and { y + 2k + P_k(2) }
//   thm74(r,a):  { m + 2k + (r + a - 2) P_k(1) }
// where P_k(d) = {0, d, ..., kd} and y, k range over the nonnegative integers.
struct LengthSystemFamily {
    enum class Kind { C3, C4, thm74 };
    Kind kind = Kind::C3;
    Int r = 0;
    Int alpha = 0;

    static LengthSystemFamily c3() { return {Kind::C3, 0, 0}; }
    static LengthSystemFamily c4() { return {Kind::C4, 0, 0}; }
    static LengthSystemFamily thm74(Int r, Int alpha);
    std::string name() const;
};

struct Membership {
    bool member = false;
    Int y = 0;     // shift (m for thm74)
    Int k = 0;     // k (k* for thm74)
    int form = 0;  // 1 or 2 for C4, otherwise 1
};

Membership member(const LengthSystemFamily& f, const LengthSet& l);
// The set with parameters (y, k) in the given form.
LengthSet family_set(const LengthSystemFamily& f, Int y, Int k, int form = 1);

LengthSet sumset(const LengthSet& a, const LengthSet& b);

struct Progression {
    bool is_ap = false;
    Int d = 0;  // 0 when |L| <= 1
};

Progression fit_progression(const LengthSet& l);

struct AAMP {
    Int y = 0;
    Int d = 0;
    std::vector<Int> period;  // subset of [0, d] containing 0 and d
    Int bound = 0;            // M
    Int central_max = 0;      // max L*
};

// Representation with the least bound M, then the smallest period, then the
// smallest shift.
std::optional<AAMP> fit_aamp(const LengthSet& l, Int d);

struct ClosureProbe {
    enum class Status { closed_within_bound, witness, indeterminate };
    Status status = Status::closed_within_bound;
    Int collection_bound = 0;
    Int verification_bound = 0;
    std::size_t sets_collected = 0;
    std::size_t pairs_checked = 0;
    LengthSet l1, l2, sum;  // filled for a witness or an indeterminate pair
    std::string note;
};

std::string to_string(ClosureProbe::Status s);

// Collects L(B) for all products B of at most `product_bound` atoms and checks
// every sumset of two collected sets against the sets of lengths of products
// of at most 2 * product_bound atoms.  Any block B with min L(B) = m is a
// product of m atoms, so a sumset whose minimum is within the verification
// bound and that is not found is a genuine witness.
ClosureProbe additive_closure_probe(const AtomSet& atoms, Int product_bound, SweepOptions opt = {});

// Checks one pair: whether l1 and l2 occur as sets of lengths and whether
// l1 + l2 does, searching products of at most `verification_bound` atoms.
// Reports `witness` only when the sumset minimum is within that bound.
ClosureProbe probe_pair(const AtomSet& atoms, const LengthSet& l1, const LengthSet& l2, Int verification_bound,
                        SweepOptions opt = {});

// Whether L occurs as L(B) for a block B of B(G0), by exhaustive search over
// products of min L atoms.  Returns nullopt when min L exceeds `bound`.
std::optional<bool> is_length_set(const AtomSet& atoms, const LengthSet& l, Int bound, SweepOptions opt = {});

}  // namespace krull
