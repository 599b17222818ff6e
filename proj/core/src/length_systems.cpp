#include "krull/length_systems.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace krull {

LengthSystemFamily LengthSystemFamily::thm74(Int r, Int alpha) {
    if (r < 1 || alpha < 1 || r + alpha <= 2) throw ArgumentError("thm74 family needs r >= 1, alpha >= 1 and r + alpha > 2");
    return {Kind::thm74, r, alpha};
}

std::string LengthSystemFamily::name() const {
    switch (kind) {
        case Kind::C3: return "C3";
        case Kind::C4: return "C4";
        case Kind::thm74: return "thm74:" + std::to_string(r) + ":" + std::to_string(alpha);
    }
    return "";
}

LengthSet family_set(const LengthSystemFamily& f, Int y, Int k, int form) {
    if (y < 0 || k < 0) throw ArgumentError("family parameters must be nonnegative");
    Int base = 0, step = 1;
    switch (f.kind) {
        case LengthSystemFamily::Kind::C3: base = y + 2 * k; break;
        case LengthSystemFamily::Kind::C4:
            if (form == 1) {
                base = y + k + 1;
            } else {
                base = y + 2 * k;
                step = 2;
            }
            break;
        case LengthSystemFamily::Kind::thm74:
            base = y + 2 * k;
            step = f.r + f.alpha - 2;
            break;
    }
    LengthSet s;
    for (Int i = 0; i <= k; ++i) s.push_back(base + i * step);
    return s;
}

namespace {

// Solves L = y + c*k + P_k(step) for (y, k) with y >= 0.
std::optional<std::pair<Int, Int>> solve_ap(const LengthSet& l, Int c, Int step) {
    if (l.empty()) return std::nullopt;
    const Int lo = l.front(), hi = l.back();
    if ((hi - lo) % step != 0) return std::nullopt;
    const Int k = (hi - lo) / step;
    if (static_cast<Int>(l.size()) != k + 1) return std::nullopt;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] != lo + static_cast<Int>(i) * step) return std::nullopt;
    const Int y = lo - c * k;
    if (y < 0) return std::nullopt;
    return std::make_pair(y, k);
}

}  // namespace

Membership member(const LengthSystemFamily& f, const LengthSet& l) {
    Membership m;
    if (l.empty() || l.front() < 0) return m;
    auto take = [&](std::optional<std::pair<Int, Int>> s, int form) {
        if (!s || m.member) return;
        m.member = true;
        m.y = s->first;
        m.k = s->second;
        m.form = form;
    };
    switch (f.kind) {
        case LengthSystemFamily::Kind::C3: take(solve_ap(l, 2, 1), 1); break;
        case LengthSystemFamily::Kind::C4: {
            // y + k + 1 + P_k(1): shift the minimum down by one before solving.
            LengthSet shifted = l;
            for (auto& x : shifted) --x;
            take(solve_ap(shifted, 1, 1), 1);
            take(solve_ap(l, 2, 2), 2);
            break;
        }
        case LengthSystemFamily::Kind::thm74: take(solve_ap(l, 2, f.r + f.alpha - 2), 1); break;
    }
    return m;
}

LengthSet sumset(const LengthSet& a, const LengthSet& b) {
    LengthSet s;
    s.reserve(a.size() * b.size());
    for (Int x : a)
        for (Int y : b) s.push_back(checked_add(x, y));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Progression fit_progression(const LengthSet& l) {
    Progression p;
    if (l.size() <= 1) {
        p.is_ap = true;
        return p;
    }
    LengthSet d = delta_of(l);
    p.is_ap = d.size() == 1;
    if (p.is_ap) p.d = d.front();
    return p;
}

std::optional<AAMP> fit_aamp(const LengthSet& l, Int d) {
    if (l.empty() || d <= 0) return std::nullopt;
    std::optional<AAMP> best;
    auto better = [](const AAMP& a, const AAMP& b) {
        return std::make_tuple(a.bound, a.period.size(), a.y, -a.central_max) <
               std::make_tuple(b.bound, b.period.size(), b.y, -b.central_max);
    };
    for (std::size_t i = 0; i < l.size(); ++i) {
        const Int y = l[i];
        std::set<Int> residues{0, d};
        for (Int x : l) residues.insert(mod_floor(x - y, d));
        std::vector<Int> period(residues.begin(), residues.end());
        auto in_period = [&](Int x) { return std::binary_search(period.begin(), period.end(), mod_floor(x, d)); };
        // Extend the central part upward while it stays equal to the full pattern.
        Int top = 0;
        std::size_t j = i;
        for (Int x = 0;; ++x) {
            if (!in_period(x)) continue;
            if (j < l.size() && l[j] == y + x) {
                top = x;
                ++j;
            } else {
                break;
            }
        }
        // Any prefix of that run ending at an element of L is admissible; the
        // longest one minimizes the upper tail.
        AAMP a;
        a.y = y;
        a.d = d;
        a.period = period;
        a.central_max = top;
        a.bound = std::max(y - l.front(), l.back() - (y + top));
        if (!best || better(a, *best)) best = a;
    }
    return best;
}

std::string to_string(ClosureProbe::Status s) {
    switch (s) {
        case ClosureProbe::Status::closed_within_bound: return "closed_within_bound";
        case ClosureProbe::Status::witness: return "witness";
        case ClosureProbe::Status::indeterminate: return "indeterminate";
    }
    return "";
}

namespace {

// Sets of lengths of products of at most `level` atoms over G0 \ {0}.  A zero
// class contributes an arbitrary shift, so with one present a set counts as
// realized when some nonnegative downward shift of it is.
class Realizer {
public:
    Realizer(const AtomSet& atoms, SweepOptions opt) : h_(strip_zero(atoms, has_zero_), opt) {}

    void extend_to(Int level) {
        while (level_ < level) {
            ++level_;
            for (const Key& key : h_.products(level_)) sets_.insert(h_.lengths(unpack(key)));
        }
    }
    Int level() const { return level_; }
    const std::set<LengthSet>& sets() const { return sets_; }

    // Decides membership for sets with min L <= level().
    bool realized(const LengthSet& t) const {
        if (sets_.count(t)) return true;
        if (!has_zero_) return false;
        LengthSet s = t;
        for (Int shift = 1; shift <= t.front(); ++shift) {
            for (auto& x : s) --x;
            if (s.front() == 0) return s.size() == 1;
            if (sets_.count(s)) return true;
        }
        return false;
    }

private:
    static AtomSet strip_zero(const AtomSet& atoms, bool& has_zero) {
        const Alphabet& a = *atoms.alphabet;
        std::vector<std::size_t> nonzero;
        for (std::size_t g = 0; g < a.size(); ++g)
            if (!is_zero(a[g])) nonzero.push_back(g);
        has_zero = nonzero.size() != a.size();
        return restrict_atoms(atoms, nonzero);
    }

    bool has_zero_ = false;
    Monoid h_;
    Int level_ = 0;
    std::set<LengthSet> sets_;
};

void normalize(LengthSet& l) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.empty() || l.front() < 1) throw ArgumentError("sets of lengths must be nonempty sets of positive integers");
}

}  // namespace

std::optional<bool> is_length_set(const AtomSet& atoms, const LengthSet& l, Int bound, SweepOptions opt) {
    LengthSet t = l;
    normalize(t);
    if (t.front() > bound) return std::nullopt;
    Realizer r(atoms, opt);
    r.extend_to(t.front());
    return r.realized(t);
}

ClosureProbe probe_pair(const AtomSet& atoms, const LengthSet& l1, const LengthSet& l2, Int verification_bound,
                        SweepOptions opt) {
    ClosureProbe out;
    out.l1 = l1;
    out.l2 = l2;
    normalize(out.l1);
    normalize(out.l2);
    out.sum = sumset(out.l1, out.l2);
    out.verification_bound = verification_bound;
    out.collection_bound = std::max(out.l1.front(), out.l2.front());
    out.pairs_checked = 1;
    if (out.sum.front() > verification_bound) {
        out.status = ClosureProbe::Status::indeterminate;
        out.note = "sumset minimum exceeds the verification bound";
        return out;
    }
    Realizer r(atoms, opt);
    r.extend_to(out.sum.front());
    if (!r.realized(out.l1) || !r.realized(out.l2)) {
        out.status = ClosureProbe::Status::indeterminate;
        out.note = "a summand is not a set of lengths";
        return out;
    }
    if (r.realized(out.sum)) {
        out.status = ClosureProbe::Status::closed_within_bound;
        out.note = "the sumset is a set of lengths";
    } else {
        out.status = ClosureProbe::Status::witness;
        out.note = "no product of at most " + std::to_string(out.sum.front()) + " atoms has this set of lengths";
    }
    return out;
}

ClosureProbe additive_closure_probe(const AtomSet& atoms, Int product_bound, SweepOptions opt) {
    if (product_bound < 1) throw ArgumentError("product bound must be positive");
    ClosureProbe out;
    out.collection_bound = product_bound;
    out.verification_bound = 2 * product_bound;

    Realizer r(atoms, opt);
    r.extend_to(product_bound);
    std::vector<LengthSet> collected(r.sets().begin(), r.sets().end());
    out.sets_collected = collected.size();

    struct Pair {
        Int min;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < collected.size(); ++i)
        for (std::size_t j = i; j < collected.size(); ++j)
            pairs.push_back({collected[i].front() + collected[j].front(), i, j});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.min < y.min; });

    for (const Pair& p : pairs) {
        LengthSet t = sumset(collected[p.i], collected[p.j]);
        ++out.pairs_checked;
        r.extend_to(t.front());
        if (!r.realized(t)) {
            out.status = ClosureProbe::Status::witness;
            out.l1 = collected[p.i];
            out.l2 = collected[p.j];
            out.sum = t;
            out.note = "no product of at most " + std::to_string(t.front()) + " atoms has this set of lengths";
            return out;
        }
    }
    out.note = "every sumset of collected sets is realized";
    return out;
}

}  // namespace krull
