#include "krull/factorization.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "krull/parallel.hpp"

namespace krull {

Rational Rational::make(Int p, Int q) {
    if (q == 0) throw DomainError("zero denominator");
    if (q < 0) {
        p = checked_neg(p);
        q = checked_neg(q);
    }
    Int g = std::gcd(p, q);
    if (g == 0) g = 1;
    return Rational{p / g, q / g};
}

bool Rational::operator<(const Rational& o) const {
    __extension__ using Wide = __int128;
    return static_cast<Wide>(num) * o.den < static_cast<Wide>(o.num) * den;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

LengthSet delta_of(const LengthSet& l) {
    LengthSet d;
    for (std::size_t i = 1; i < l.size(); ++i) d.push_back(l[i] - l[i - 1]);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

LengthProfile length_profile(const LengthSet& l) {
    LengthProfile p;
    p.lengths = l;
    p.delta = delta_of(l);
    if (l.empty() || l.front() == 0)
        p.elasticity = Rational{1, 1};
    else
        p.elasticity = Rational::make(l.back(), l.front());
    return p;
}

namespace {

void check_block(const AtomSet& atoms, const Vec& b) {
    if (b.size() != atoms.alphabet->size()) throw ShapeError("sequence does not match the atom alphabet");
    for (Int x : b)
        if (x < 0) throw DomainError("negative multiplicity");
    if (!is_zero_sum(*atoms.alphabet, b)) throw DomainError("sequence is not zero-sum");
}

struct FactorSearch {
    const AtomSet& atoms;
    std::vector<std::size_t> cand;       // atoms dividing B, canonical order
    std::vector<std::size_t> last_with;  // per symbol: last position in cand containing it
    std::size_t guard;
    Vec rest;
    Vec counts;
    std::vector<Factorization> out;

    void run(std::size_t pos) {
        bool empty = std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; });
        if (empty) {
            if (out.size() >= guard) throw BoundExceeded("factorization count exceeded the guard");
            out.push_back(Factorization{counts});
            return;
        }
        if (pos == cand.size()) return;
        for (std::size_t g = 0; g < rest.size(); ++g)
            if (rest[g] > 0 && (last_with[g] == SIZE_MAX || last_with[g] < pos)) return;
        const Vec& a = atoms.atoms[cand[pos]];
        Int most = std::numeric_limits<Int>::max();
        for (std::size_t g = 0; g < a.size(); ++g)
            if (a[g] > 0) most = std::min(most, rest[g] / a[g]);
        for (Int k = most; k >= 0; --k) {
            for (std::size_t g = 0; g < a.size(); ++g) rest[g] -= k * a[g];
            counts[cand[pos]] = k;
            run(pos + 1);
            counts[cand[pos]] = 0;
            for (std::size_t g = 0; g < a.size(); ++g) rest[g] += k * a[g];
        }
    }
};

}  // namespace

std::vector<Factorization> factorize(const AtomSet& atoms, const Vec& b, std::size_t guard) {
    check_block(atoms, b);
    FactorSearch s{atoms, {}, std::vector<std::size_t>(b.size(), SIZE_MAX), guard, b, Vec(atoms.size(), 0), {}};
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (vec_divides(atoms.atoms[i], b)) s.cand.push_back(i);
    for (std::size_t p = 0; p < s.cand.size(); ++p)
        for (std::size_t g = 0; g < b.size(); ++g)
            if (atoms.atoms[s.cand[p]][g] > 0) s.last_with[g] = p;
    s.run(0);
    return std::move(s.out);
}

std::vector<Factorization> factorize(const AtomSet& atoms, const Sequence& b, std::size_t guard) {
    if (!(*b.alphabet() == *atoms.alphabet)) throw ShapeError("sequence is over a different alphabet");
    return factorize(atoms, b.multiplicities(), guard);
}

Vec product_of(const AtomSet& atoms, const Factorization& z) {
    Vec p(atoms.alphabet->size(), 0);
    for (std::size_t i = 0; i < z.counts.size(); ++i)
        for (std::size_t g = 0; g < p.size(); ++g) p[g] = checked_add(p[g], checked_mul(z.counts[i], atoms.atoms[i][g]));
    return p;
}

Int distance(const Factorization& z, const Factorization& w) {
    if (z.counts.size() != w.counts.size()) throw ShapeError("factorizations over different atom sets");
    Int a = 0, b = 0;
    for (std::size_t i = 0; i < z.counts.size(); ++i) {
        Int m = std::min(z.counts[i], w.counts[i]);
        a += z.counts[i] - m;
        b += w.counts[i] - m;
    }
    return std::max(a, b);
}

namespace {

// Largest edge of a minimum spanning tree (Prim) over the listed vertices.
Int mst_bottleneck(const std::vector<Int>& dist, std::size_t n, const std::vector<std::size_t>& verts) {
    if (verts.size() <= 1) return 0;
    std::vector<Int> best(verts.size(), std::numeric_limits<Int>::max());
    std::vector<bool> in(verts.size(), false);
    best[0] = 0;
    Int bottleneck = 0;
    for (std::size_t step = 0; step < verts.size(); ++step) {
        std::size_t u = verts.size();
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (!in[i] && (u == verts.size() || best[i] < best[u])) u = i;
        in[u] = true;
        bottleneck = std::max(bottleneck, best[u]);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (!in[i]) best[i] = std::min(best[i], dist[verts[u] * n + verts[i]]);
    }
    return bottleneck;
}

}  // namespace

CatenaryProfile catenary_profile(const std::vector<Factorization>& z, int threads) {
    CatenaryProfile p;
    const std::size_t n = z.size();
    if (n <= 1) return p;
    std::vector<Int> dist(n * n, 0);
    parallel_for(n, threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = distance(z[i], z[j]);
    });
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    p.c = mst_bottleneck(dist, n, all);

    std::vector<std::pair<Int, std::size_t>> by_len;
    for (std::size_t i = 0; i < n; ++i) by_len.emplace_back(z[i].length(), i);
    std::sort(by_len.begin(), by_len.end());
    std::vector<std::vector<std::size_t>> classes;
    std::vector<Int> class_len;
    for (const auto& [len, i] : by_len) {
        if (class_len.empty() || class_len.back() != len) {
            class_len.push_back(len);
            classes.emplace_back();
        }
        classes.back().push_back(i);
    }
    for (const auto& cl : classes) p.c_eq = std::max(p.c_eq, mst_bottleneck(dist, n, cl));
    for (std::size_t k = 1; k < classes.size(); ++k) {
        Int d = std::numeric_limits<Int>::max();
        for (auto i : classes[k - 1])
            for (auto j : classes[k]) d = std::min(d, dist[i * n + j]);
        p.c_adj = std::max(p.c_adj, d);
    }
    p.c_mon = std::max(p.c_eq, p.c_adj);
    return p;
}

CatenaryProfile catenary_profile(const AtomSet& atoms, const Sequence& b, int threads) {
    return catenary_profile(factorize(atoms, b), threads);
}

Key pack(const Vec& v) {
    Key k(v.size(), u'\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > 0xFFFF) throw OverflowError("multiplicity too large for packed key");
        k[i] = static_cast<char16_t>(v[i]);
    }
    return k;
}

Vec unpack(const Key& k) {
    Vec v(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) v[i] = static_cast<Int>(k[i]);
    return v;
}

LengthOracle::LengthOracle(const AtomSet& atoms)
    : atoms_(&atoms), prime_symbol_(atoms.alphabet->size(), false), containing_(atoms.alphabet->size()) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const Vec& a = atoms.atoms[i];
        if (vec_sum(a) == 1) {
            for (std::size_t g = 0; g < a.size(); ++g)
                if (a[g] == 1) prime_symbol_[g] = true;
            continue;
        }
        for (std::size_t g = 0; g < a.size(); ++g)
            if (a[g] > 0) containing_[g].push_back(i);
    }
    intern(LengthSet{});
    intern(LengthSet{0});
}

std::uint32_t LengthOracle::intern(LengthSet s) {
    Vec as_vec(s.begin(), s.end());
    Key k(as_vec.size(), u'\0');
    for (std::size_t i = 0; i < as_vec.size(); ++i) k[i] = static_cast<char16_t>(as_vec[i]);
    auto it = set_ids_.find(k);
    if (it != set_ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(sets_.size());
    sets_.push_back(std::move(s));
    set_ids_.emplace(std::move(k), id);
    return id;
}

std::uint32_t LengthOracle::solve(Vec& b) {
    std::size_t pivot = b.size();
    for (std::size_t g = 0; g < b.size(); ++g)
        if (b[g] > 0) {
            pivot = g;
            break;
        }
    if (pivot == b.size()) return 1;  // {0}
    Key key = pack(b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<Int> acc;
    for (std::size_t i : containing_[pivot]) {
        const Vec& a = atoms_->atoms[i];
        if (!vec_divides(a, b)) continue;
        for (std::size_t g = 0; g < b.size(); ++g) b[g] -= a[g];
        std::uint32_t sub = solve(b);
        for (std::size_t g = 0; g < b.size(); ++g) b[g] += a[g];
        for (Int l : sets_[sub]) acc.push_back(l + 1);
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    std::uint32_t id = intern(std::move(acc));
    memo_.emplace(std::move(key), id);
    return id;
}

const LengthSet& LengthOracle::lengths(const Vec& b) {
    if (b.size() != atoms_->alphabet->size()) throw ShapeError("sequence does not match the atom alphabet");
    Vec work = b;
    Int primes = 0;
    for (std::size_t g = 0; g < work.size(); ++g)
        if (prime_symbol_[g]) {
            primes += work[g];
            work[g] = 0;
        }
    std::uint32_t id = solve(work);
    if (primes == 0 || sets_[id].empty()) return sets_[id];
    scratch_ = sets_[id];
    for (auto& l : scratch_) l += primes;
    return scratch_;
}

}  // namespace krull
