#include "krull/intmat.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace krull {

namespace {

Int abs_checked(Int a) { return a < 0 ? checked_neg(a) : a; }

// row[dst] -= q * row[src]
void row_axpy(Matrix& m, std::size_t dst, std::size_t src, Int q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m[dst].size(); ++c)
        m[dst][c] = checked_sub(m[dst][c], checked_mul(q, m[src][c]));
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Int gcd_all(const Vec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

Matrix hermite_rows(Matrix a) {
    if (a.empty()) return a;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < cols && pivot < rows; ++c) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = pivot; r < rows; ++r) {
                if (a[r][c] == 0) continue;
                if (best == rows || abs_checked(a[r][c]) < abs_checked(a[best][c])) best = r;
            }
            if (best == rows) break;
            std::swap(a[pivot], a[best]);
            bool done = true;
            for (std::size_t r = pivot + 1; r < rows; ++r) {
                if (a[r][c] == 0) continue;
                row_axpy(a, r, pivot, a[r][c] / a[pivot][c]);
                if (a[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[pivot][c] == 0) continue;
        if (a[pivot][c] < 0)
            for (auto& x : a[pivot]) x = checked_neg(x);
        for (std::size_t r = 0; r < pivot; ++r) row_axpy(a, r, pivot, floor_div(a[r][c], a[pivot][c]));
        ++pivot;
    }
    a.resize(pivot);
    return a;
}

int matrix_rank(const Matrix& a) { return static_cast<int>(hermite_rows(a).size()); }

Matrix kernel_basis(const Matrix& a, int cols) {
    const std::size_t n = static_cast<std::size_t>(cols);
    // Work on columns: cols_[j] = (column j of a, column j of identity).
    const std::size_t m = a.size();
    std::vector<Vec> col(n, Vec(m + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) col[j][i] = a[i][j];
        col[j][m + j] = 1;
    }
    auto col_axpy = [&](std::size_t dst, std::size_t src, Int q) {
        if (q == 0) return;
        for (std::size_t t = 0; t < m + n; ++t) col[dst][t] = checked_sub(col[dst][t], checked_mul(q, col[src][t]));
    };
    std::size_t k = 0;
    for (std::size_t i = 0; i < m && k < n; ++i) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = k; j < n; ++j) {
                if (col[j][i] == 0) continue;
                if (best == n || abs_checked(col[j][i]) < abs_checked(col[best][i])) best = j;
            }
            if (best == n) break;
            std::swap(col[k], col[best]);
            bool done = true;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (col[j][i] == 0) continue;
                col_axpy(j, k, col[j][i] / col[k][i]);
                if (col[j][i] != 0) done = false;
            }
            if (done) break;
        }
        if (col[k][i] != 0) ++k;
    }
    Matrix basis;
    for (std::size_t j = k; j < n; ++j) basis.emplace_back(col[j].begin() + static_cast<std::ptrdiff_t>(m), col[j].end());
    return basis;
}

}  // namespace krull
