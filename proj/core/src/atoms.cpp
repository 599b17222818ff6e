#include "krull/atoms.hpp"

#include <algorithm>

#include "krull/parallel.hpp"

namespace krull {

std::vector<std::size_t> AtomSet::support(std::size_t i) const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < atoms[i].size(); ++j)
        if (atoms[i][j] > 0) s.push_back(j);
    return s;
}

void sort_canonical(std::vector<Vec>& vecs) {
    std::sort(vecs.begin(), vecs.end(), [](const Vec& a, const Vec& b) {
        Int la = vec_sum(a), lb = vec_sum(b);
        if (la != lb) return la < lb;
        return a < b;
    });
}

std::vector<Vec> minimal_elements(std::vector<Vec> vecs) {
    sort_canonical(vecs);
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    std::vector<Vec> out;
    for (auto& v : vecs) {
        bool dominated = false;
        for (const auto& w : out)
            if (vec_divides(w, v)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(std::move(v));
    }
    return out;
}

namespace {

struct Candidate {
    Vec x;   // variables: symbols followed by torsion slacks
    Vec ax;  // image under the system matrix
    bool operator<(const Candidate& o) const { return x < o.x; }
    bool operator==(const Candidate& o) const { return x == o.x; }
};

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

}  // namespace

// Completion procedure for the Hilbert basis of {x >= 0 : A x = 0}: a candidate
// p is extended by a unit vector e_j only when <A p, A e_j> < 0, and candidates
// dominating a known solution are dropped.  Torsion rows get one slack column
// -n_i each; slacks are projected away at the end.
std::vector<Vec> minimal_zero_sum_vectors(const GroupSpec& g, const std::vector<GroupElement>& columns,
                                          const AtomOptions& opt) {
    const std::size_t m = columns.size();
    if (m == 0) return {};
    const std::size_t rows = static_cast<std::size_t>(g.coordinates());
    const std::size_t t = g.torsion.size();
    const std::size_t vars = m + t;
    std::vector<Vec> col(vars, Vec(rows, 0));
    for (std::size_t j = 0; j < m; ++j) {
        check_member(g, columns[j]);
        col[j] = coords_of(columns[j]);
    }
    for (std::size_t i = 0; i < t; ++i) col[m + i][static_cast<std::size_t>(g.free_rank) + i] = -g.torsion[i];

    std::vector<Vec> basis;
    std::vector<Candidate> level;
    for (std::size_t j = 0; j < vars; ++j) {
        Vec x(vars, 0);
        x[j] = 1;
        level.push_back({std::move(x), col[j]});
    }
    while (!level.empty()) {
        std::vector<Candidate> open;
        for (auto& c : level) {
            if (all_zero(c.ax))
                basis.push_back(c.x);
            else
                open.push_back(std::move(c));
        }
        std::vector<std::vector<Candidate>> produced(open.size());
        parallel_for(open.size(), opt.threads, [&](std::size_t k) {
            const Candidate& c = open[k];
            for (std::size_t j = 0; j < vars; ++j) {
                Int dot = 0;
                for (std::size_t r = 0; r < rows; ++r) dot = checked_add(dot, checked_mul(c.ax[r], col[j][r]));
                if (dot >= 0) continue;
                Vec x = c.x;
                x[j] = checked_add(x[j], 1);
                if (j < m && x[j] > opt.cap)
                    throw BoundExceeded("atom enumeration exceeded the multiplicity cap " + std::to_string(opt.cap));
                bool dominated = false;
                for (const auto& b : basis)
                    if (vec_divides(b, x)) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                Vec ax = c.ax;
                for (std::size_t r = 0; r < rows; ++r) ax[r] = checked_add(ax[r], col[j][r]);
                produced[k].push_back({std::move(x), std::move(ax)});
            }
        });
        level.clear();
        for (auto& p : produced)
            for (auto& c : p) level.push_back(std::move(c));
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }

    std::vector<Vec> out;
    for (const auto& b : basis) {
        Vec v(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m));
        if (!all_zero(v)) out.push_back(std::move(v));
    }
    return minimal_elements(std::move(out));
}

AtomSet enumerate_atoms(const AlphabetPtr& g0, const AtomOptions& opt) {
    AtomSet s;
    s.alphabet = g0;
    s.atoms = minimal_zero_sum_vectors(g0->spec(), g0->elements(), opt);
    for (const auto& a : s.atoms) s.davenport = std::max(s.davenport, vec_sum(a));
    s.no_zero_sum = s.atoms.empty();
    return s;
}

Int davenport_constant(const AlphabetPtr& g0, const AtomOptions& opt) { return enumerate_atoms(g0, opt).davenport; }

AtomSet restrict_atoms(const AtomSet& atoms, const std::vector<std::size_t>& symbols) {
    AtomSet s;
    s.alphabet = sub_alphabet(*atoms.alphabet, symbols);
    std::vector<bool> keep(atoms.alphabet->size(), false);
    for (auto i : symbols) keep[i] = true;
    // sub_alphabet keeps canonical order, so sorted symbol indices map positionally.
    std::vector<std::size_t> sorted = symbols;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& a : atoms.atoms) {
        bool inside = true;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] > 0 && !keep[j]) {
                inside = false;
                break;
            }
        if (!inside) continue;
        Vec v;
        v.reserve(sorted.size());
        for (auto j : sorted) v.push_back(a[j]);
        s.atoms.push_back(std::move(v));
    }
    sort_canonical(s.atoms);
    for (const auto& a : s.atoms) s.davenport = std::max(s.davenport, vec_sum(a));
    s.no_zero_sum = s.atoms.empty();
    return s;
}

}  // namespace krull
