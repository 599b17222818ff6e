#include "krull/transfer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "krull/parallel.hpp"

namespace krull {

TransferMap::TransferMap(std::string name, AlphabetPtr source, AlphabetPtr target, std::vector<GroupElement> assignment)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
    if (assignment.size() != source_->size()) throw MapError("map must assign an image to every source element");
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        auto j = target_->index_of(assignment[i]);
        if (!j) throw MapError("image " + to_string(assignment[i]) + " is not in the target alphabet");
        image_.push_back(*j);
    }
    for (const auto& a : minimal_zero_sum_vectors(source_->spec(), source_->elements()))
        if (!is_zero_sum(*target_, apply(a)))
            throw MapError("map sends the block " + to_string(Sequence(source_, a)) + " to a non-zero-sum sequence");
}

Vec TransferMap::apply(const Vec& b) const {
    if (b.size() != source_->size()) throw ShapeError("sequence does not match the source alphabet");
    Vec out(target_->size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) out[image_[i]] = checked_add(out[image_[i]], b[i]);
    return out;
}

Sequence TransferMap::apply(const Sequence& b) const {
    if (!(*b.alphabet() == *source_)) throw MapError("sequence is not over the source alphabet");
    return Sequence(target_, apply(b.multiplicities()));
}

TransferMap identity_map(const AlphabetPtr& a) { return TransferMap("identity", a, a, a->elements()); }

namespace {

GroupElement z1(Int x) { return make_element(GroupSpec::free(1), {x}); }
GroupElement z2(Int x, Int y) { return make_element(GroupSpec::free(2), {x, y}); }
GroupElement cn(Int n, Int x) { return make_element(GroupSpec::cyclic(n), {}, {x}); }

AlphabetPtr full_cyclic(Int n) {
    std::vector<GroupElement> els;
    for (Int x = 0; x < n; ++x) els.push_back(cn(n, x));
    return make_alphabet(GroupSpec::cyclic(n), els);
}

TransferMap from_pairs(const std::string& name, const GroupSpec& src_spec,
                       const std::vector<std::pair<GroupElement, GroupElement>>& pairs, AlphabetPtr target) {
    std::vector<GroupElement> src;
    for (const auto& p : pairs) src.push_back(p.first);
    auto source = make_alphabet(src_spec, src);
    std::vector<GroupElement> img(source->size());
    for (const auto& p : pairs) img[*source->index_of(p.first)] = p.second;
    return TransferMap(name, source, std::move(target), img);
}

}  // namespace

TransferMap builtin_prop712() {
    return from_pairs("prop712", GroupSpec::free(1),
                      {{z1(0), cn(3, 0)},
                       {z1(1), cn(3, 1)},
                       {z1(-2), cn(3, 1)},
                       {z1(-1), cn(3, 2)},
                       {z1(2), cn(3, 2)}},
                      full_cyclic(3));
}

TransferMap builtin_prop713() {
    return from_pairs("prop713", GroupSpec::free(2),
                      {{z2(0, 0), cn(4, 0)},
                       {z2(1, 0), cn(4, 1)},
                       {z2(0, 1), cn(4, 1)},
                       {z2(-1, -2), cn(4, 1)},
                       {z2(-1, 0), cn(4, 3)},
                       {z2(0, -1), cn(4, 3)},
                       {z2(1, 2), cn(4, 3)},
                       {z2(0, 2), cn(4, 2)},
                       {z2(0, -2), cn(4, 2)}},
                      full_cyclic(4));
}

TransferMap builtin_collapse() {
    auto target = make_alphabet(GroupSpec::free(1), {z1(0)});
    return from_pairs("collapse", GroupSpec::free(1), {{z1(1), z1(0)}, {z1(-1), z1(0)}}, target);
}

TransferMap builtin_map(const std::string& name) {
    if (name == "prop712") return builtin_prop712();
    if (name == "prop713") return builtin_prop713();
    if (name == "collapse") return builtin_collapse();
    throw ArgumentError("unknown built-in map '" + name + "' (expected prop712, prop713 or collapse)");
}

std::vector<Vec> zero_sum_sequences(const Alphabet& a, Int max_len) {
    std::vector<Vec> out;
    const std::size_t n = a.size();
    Vec cur(n, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
        if (i == n) {
            if (is_zero_sum(a, cur)) out.push_back(cur);
            return;
        }
        for (Int k = 0; k <= left; ++k) {
            cur[i] = k;
            rec(i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(0, max_len);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void for_divisors(const Vec& b, const std::function<void(const Vec&)>& f) {
    Vec cur(b.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == b.size()) {
            f(cur);
            return;
        }
        for (Int k = 0; k <= b[i]; ++k) {
            cur[i] = k;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
}

}  // namespace

TransferCheck check_transfer(const TransferMap& m, Int size_bound, int threads) {
    if (size_bound < 2) throw ArgumentError("size bound must be at least 2");
    TransferCheck r;
    auto source_blocks = zero_sum_sequences(*m.source(), size_bound);
    auto target_blocks = zero_sum_sequences(*m.target(), size_bound);
    r.source_blocks = source_blocks.size();
    r.target_blocks = target_blocks.size();

    std::unordered_set<Key> images;
    for (const auto& a : source_blocks) images.insert(pack(m.apply(a)));
    for (const auto& b : target_blocks)
        if (!images.count(pack(b))) {
            r.t1_ok = false;
            r.counterexample = "T1: " + to_string(Sequence(m.target(), b)) + " has no preimage";
            break;
        }

    std::vector<std::optional<std::string>> fail(source_blocks.size());
    parallel_for(source_blocks.size(), threads, [&](std::size_t idx) {
        const Vec& a = source_blocks[idx];
        std::unordered_set<Key> reachable;
        for_divisors(a, [&](const Vec& b) {
            if (is_zero_sum(*m.source(), b)) reachable.insert(pack(m.apply(b)));
        });
        Vec img = m.apply(a);
        for_divisors(img, [&](const Vec& bt) {
            if (fail[idx] || !is_zero_sum(*m.target(), bt)) return;
            if (!reachable.count(pack(bt)))
                fail[idx] = "T2: theta(" + to_string(Sequence(m.source(), a)) + ") splits off " +
                            to_string(Sequence(m.target(), bt)) + " with no matching source split";
        });
    });
    for (auto& f : fail)
        if (f) {
            r.t2_ok = false;
            if (!r.counterexample) r.counterexample = *f;
            break;
        }
    return r;
}

LengthCheck lengths_preserved(const TransferMap& m, Int size_bound) {
    LengthCheck r;
    AtomSet sa = enumerate_atoms(m.source());
    AtomSet ta = enumerate_atoms(m.target());
    LengthOracle so(sa), to(ta);
    for (const auto& a : zero_sum_sequences(*m.source(), size_bound)) {
        ++r.blocks;
        LengthSet l1 = so.lengths(a);
        const LengthSet& l2 = to.lengths(m.apply(a));
        if (l1 != l2) {
            r.ok = false;
            r.violation = "L(" + to_string(Sequence(m.source(), a)) + ") differs from the length set of its image";
            return r;
        }
    }
    return r;
}

AlphabetPtr Characteristic::support() const {
    std::vector<GroupElement> els;
    for (const auto& [g, m] : classes)
        if (m > 0) els.push_back(g);
    return make_alphabet(group, els);
}

Int Characteristic::multiplicity(const GroupElement& g) const {
    for (const auto& [h, m] : classes)
        if (h == g) return m;
    return 0;
}

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

LiftedAtomCount count_lifted_atoms(const Characteristic& c, std::size_t brute_force_columns, const AtomOptions& opt) {
    for (const auto& [g, m] : c.classes)
        if (m < 1) throw ArgumentError("class multiplicities must be positive");
    LiftedAtomCount r;
    auto support = c.support();
    AtomSet atoms = enumerate_atoms(support, opt);
    r.support_atoms = static_cast<Int>(atoms.size());
    for (const auto& u : atoms.atoms) {
        Int term = 1;
        for (std::size_t g = 0; g < u.size(); ++g) {
            Int m = c.multiplicity((*support)[g]);
            term = checked_mul(term, binomial(m + u[g] - 1, u[g]));
        }
        r.formula = checked_add(r.formula, term);
    }
    std::vector<GroupElement> columns;
    for (const auto& [g, m] : c.classes)
        for (Int k = 0; k < m; ++k) columns.push_back(g);
    if (columns.size() <= brute_force_columns)
        r.brute_force = static_cast<Int>(minimal_zero_sum_vectors(c.group, columns, opt).size());
    return r;
}

}  // namespace krull
