#include "krull/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace krull {

Alphabet::Alphabet(GroupSpec spec, std::vector<GroupElement> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
    for (const auto& g : elements_) check_member(spec_, g);
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw AlphabetError("alphabet contains a duplicate element");
}

std::optional<std::size_t> Alphabet::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> Alphabet::zero_index() const { return index_of(zero(spec_)); }

bool Alphabet::is_symmetric() const {
    for (const auto& g : elements_)
        if (!contains(neg(spec_, g))) return false;
    return true;
}

std::vector<std::size_t> Alphabet::negation_table() const {
    std::vector<std::size_t> t(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto j = index_of(neg(spec_, elements_[i]));
        if (!j) throw AlphabetError("negative of " + to_string(elements_[i]) + " is not in the alphabet");
        t[i] = *j;
    }
    return t;
}

Matrix Alphabet::coordinate_matrix() const {
    Matrix m(static_cast<std::size_t>(spec_.coordinates()), Vec(size(), 0));
    for (std::size_t j = 0; j < size(); ++j) {
        auto c = coords_of(elements_[j]);
        for (std::size_t i = 0; i < c.size(); ++i) m[i][j] = c[i];
    }
    return m;
}

AlphabetPtr make_alphabet(GroupSpec spec, std::vector<GroupElement> elements) {
    return std::make_shared<const Alphabet>(std::move(spec), std::move(elements));
}

AlphabetPtr sub_alphabet(const Alphabet& a, const std::vector<std::size_t>& indices) {
    std::vector<GroupElement> els;
    for (auto i : indices) els.push_back(a[i]);
    return make_alphabet(a.spec(), std::move(els));
}

Sequence::Sequence(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)), mult_(alphabet_->size(), 0) {}

Sequence::Sequence(AlphabetPtr alphabet, Vec multiplicities)
    : alphabet_(std::move(alphabet)), mult_(std::move(multiplicities)) {
    if (mult_.size() != alphabet_->size()) throw ShapeError("multiplicity vector does not match alphabet");
    for (Int x : mult_)
        if (x < 0) throw DomainError("negative multiplicity");
}

Int Sequence::length() const { return vec_sum(mult_); }

std::vector<std::size_t> Sequence::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] > 0) s.push_back(i);
    return s;
}

bool Sequence::operator==(const Sequence& o) const { return *alphabet_ == *o.alphabet_ && mult_ == o.mult_; }

namespace {

void same_alphabet(const Sequence& a, const Sequence& b) {
    if (a.alphabet() != b.alphabet() && !(*a.alphabet() == *b.alphabet()))
        throw ShapeError("sequences are over different alphabets");
}

}  // namespace

GroupElement sigma(const Sequence& s) {
    const auto& a = *s.alphabet();
    GroupElement total = zero(a.spec());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (s.count(i) != 0) total = add(a.spec(), total, scale(a.spec(), s.count(i), a[i]));
    return total;
}

bool divides(const Sequence& a, const Sequence& b) {
    same_alphabet(a, b);
    return vec_divides(a.multiplicities(), b.multiplicities());
}

Sequence multiply(const Sequence& a, const Sequence& b) {
    same_alphabet(a, b);
    return Sequence(a.alphabet(), vec_add(a.multiplicities(), b.multiplicities()));
}

Sequence gcd(const Sequence& a, const Sequence& b) {
    same_alphabet(a, b);
    return Sequence(a.alphabet(), vec_min(a.multiplicities(), b.multiplicities()));
}

Sequence quotient(const Sequence& b, const Sequence& a) {
    if (!divides(a, b)) throw DomainError("quotient of non-dividing sequences");
    return Sequence(a.alphabet(), vec_sub(b.multiplicities(), a.multiplicities()));
}

Sequence negate(const Sequence& s, const AlphabetPtr& target) {
    const auto& src = *s.alphabet();
    const AlphabetPtr& out = target ? target : s.alphabet();
    Vec m(out->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (s.count(i) == 0) continue;
        auto j = out->index_of(neg(src.spec(), src[i]));
        if (!j) throw AlphabetError("negative of " + to_string(src[i]) + " is not in the target alphabet");
        m[*j] = checked_add(m[*j], s.count(i));
    }
    return Sequence(out, std::move(m));
}

std::string to_string(const Sequence& s) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < s.multiplicities().size(); ++i) {
        Int k = s.count(i);
        if (k == 0) continue;
        if (!first) os << " * ";
        os << to_string((*s.alphabet())[i]);
        if (k != 1) os << '^' << k;
        first = false;
    }
    return first ? "1" : os.str();
}

Sequence parse_sequence(const AlphabetPtr& alphabet, const std::string& text) {
    Sequence out(alphabet);
    Vec m(alphabet->size(), 0);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "1") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t close = s.find(')', pos);
        if (s[pos] != '(' || close == std::string::npos) throw ParseError("expected '(' in sequence '" + text + "'");
        GroupElement g = parse_element(alphabet->spec(), s.substr(pos, close - pos + 1));
        pos = close + 1;
        Int k = 1;
        if (pos < s.size() && s[pos] == '^') {
            std::size_t end = pos + 1;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            if (end == pos + 1) throw ParseError("missing exponent in sequence '" + text + "'");
            k = std::stoll(s.substr(pos + 1, end - pos - 1));
            pos = end;
        }
        auto idx = alphabet->index_of(g);
        if (!idx) throw AlphabetError("element " + to_string(g) + " is not in the alphabet");
        m[*idx] = checked_add(m[*idx], k);
        if (pos < s.size()) {
            if (s[pos] != '*') throw ParseError("expected '*' in sequence '" + text + "'");
            ++pos;
        }
    }
    return Sequence(alphabet, std::move(m));
}

Int vec_sum(const Vec& v) {
    Int s = 0;
    for (Int x : v) s = checked_add(s, x);
    return s;
}

bool vec_divides(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_min(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool is_zero_sum(const Alphabet& a, const Vec& v) {
    const auto& g = a.spec();
    std::vector<Int> acc(static_cast<std::size_t>(g.coordinates()), 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (v[j] == 0) continue;
        auto c = coords_of(a[j]);
        for (std::size_t i = 0; i < c.size(); ++i) acc[i] = checked_add(acc[i], checked_mul(v[j], c[i]));
    }
    for (int i = 0; i < g.coordinates(); ++i) {
        Int x = acc[static_cast<std::size_t>(i)];
        if (i < g.free_rank ? x != 0 : mod_floor(x, g.torsion[static_cast<std::size_t>(i - g.free_rank)]) != 0)
            return false;
    }
    return true;
}

}  // namespace krull
