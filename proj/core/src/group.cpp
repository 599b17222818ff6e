#include "krull/group.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "krull/intmat.hpp"

namespace krull {

GroupSpec::GroupSpec(int r, std::vector<Int> t) : free_rank(r), torsion(std::move(t)) {
    if (r < 0) throw ArgumentError("free rank must be nonnegative");
    for (Int n : torsion)
        if (n < 2) throw ArgumentError("torsion moduli must be at least 2");
}

Int GroupSpec::exponent() const {
    Int e = 1;
    for (Int n : torsion) e = checked_mul(e / std::gcd(e, n), n);
    return e;
}

Int GroupSpec::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (Int n : torsion) o = checked_mul(o, n);
    return o;
}

GroupElement make_element(const GroupSpec& g, std::vector<Int> free, std::vector<Int> torsion) {
    if (torsion.empty() && g.torsion_rank() > 0) torsion.assign(g.torsion.size(), 0);
    if (static_cast<int>(free.size()) != g.free_rank || torsion.size() != g.torsion.size())
        throw ShapeError("element does not match group shape");
    for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = mod_floor(torsion[i], g.torsion[i]);
    return GroupElement{std::move(free), std::move(torsion)};
}

GroupElement element_from_coords(const GroupSpec& g, const std::vector<Int>& coords) {
    if (static_cast<int>(coords.size()) != g.coordinates()) throw ShapeError("coordinate count does not match group");
    std::vector<Int> f(coords.begin(), coords.begin() + g.free_rank);
    std::vector<Int> t(coords.begin() + g.free_rank, coords.end());
    return make_element(g, std::move(f), std::move(t));
}

std::vector<Int> coords_of(const GroupElement& a) {
    std::vector<Int> c = a.free;
    c.insert(c.end(), a.torsion.begin(), a.torsion.end());
    return c;
}

GroupElement zero(const GroupSpec& g) {
    return GroupElement{std::vector<Int>(g.free_rank, 0), std::vector<Int>(g.torsion.size(), 0)};
}

bool is_zero(const GroupElement& a) {
    for (Int x : a.free)
        if (x != 0) return false;
    for (Int x : a.torsion)
        if (x != 0) return false;
    return true;
}

void check_member(const GroupSpec& g, const GroupElement& a) {
    if (static_cast<int>(a.free.size()) != g.free_rank || a.torsion.size() != g.torsion.size())
        throw ShapeError("element does not belong to the group");
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        if (a.torsion[i] < 0 || a.torsion[i] >= g.torsion[i]) throw ShapeError("torsion residue not canonical");
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    check_member(g, a);
    check_member(g, b);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] = checked_add(r.free[i], b.free[i]);
    for (std::size_t i = 0; i < r.torsion.size(); ++i) r.torsion[i] = (r.torsion[i] + b.torsion[i]) % g.torsion[i];
    return r;
}

GroupElement neg(const GroupSpec& g, const GroupElement& a) {
    check_member(g, a);
    GroupElement r = a;
    for (auto& x : r.free) x = checked_neg(x);
    for (std::size_t i = 0; i < r.torsion.size(); ++i) r.torsion[i] = mod_floor(-r.torsion[i], g.torsion[i]);
    return r;
}

GroupElement sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b) { return add(g, a, neg(g, b)); }

GroupElement scale(const GroupSpec& g, Int k, const GroupElement& a) {
    check_member(g, a);
    GroupElement r = a;
    for (auto& x : r.free) x = checked_mul(k, x);
    for (std::size_t i = 0; i < r.torsion.size(); ++i)
        r.torsion[i] = mod_floor(checked_mul(mod_floor(k, g.torsion[i]), r.torsion[i]), g.torsion[i]);
    return r;
}

Int element_order(const GroupSpec& g, const GroupElement& a) {
    check_member(g, a);
    for (Int x : a.free)
        if (x != 0) return 0;
    Int order = 1;
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        Int n = g.torsion[i];
        Int oi = n / std::gcd(n, a.torsion[i]);
        order = checked_mul(order / std::gcd(order, oi), oi);
    }
    return order;
}

int subgroup_rank(const GroupSpec& g, const std::vector<GroupElement>& gens) {
    // Multiplying a generator by the group exponent kills its torsion part and
    // leaves the free part's span unchanged over Q.
    Matrix rows;
    for (const auto& x : gens) {
        check_member(g, x);
        if (g.free_rank == 0) continue;
        rows.push_back(x.free);
    }
    if (rows.empty()) return 0;
    return matrix_rank(rows);
}

std::string to_string(const GroupElement& a) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (Int x : a.free) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    for (Int x : a.torsion) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

GroupElement parse_element(const GroupSpec& g, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() >= 2 && (s.front() == '(' || s.front() == '[')) s = s.substr(1, s.size() - 2);
    std::vector<Int> coords;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t pos = 0;
                coords.push_back(std::stoll(item, &pos));
                if (pos != item.size()) throw ParseError("bad integer '" + item + "'");
            } catch (const std::logic_error&) {
                throw ParseError("bad integer '" + item + "' in element '" + text + "'");
            }
        }
    }
    return element_from_coords(g, coords);
}

}  // namespace krull
