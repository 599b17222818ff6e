#pragma once

#include "cli/report.hpp"
#include "krull/invariants.hpp"
#include "krull/presets.hpp"

namespace krull::cli {

Json to_json(const GroupSpec& g);
Json to_json(const GroupElement& e);
Json to_json(const Rational& r);
Json to_json(const BoundedSet& s);
Json to_json(const BoundedInt& v);
Json to_json(const Expected& e);
Json alphabet_json(const Alphabet& a);
Json characteristic_json(const Characteristic& c);

GroupSpec group_from_json(const Json& j);
GroupElement element_from_json(const GroupSpec& g, const Json& j);

// Canonical text of the input a computation depends on, used in cache keys.
std::string canonical_input(const Preset& p);

}  // namespace krull::cli
