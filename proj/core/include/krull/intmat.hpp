#pragma once

#include <vector>

#include "krull/checked.hpp"

namespace krull {

using Vec = std::vector<Int>;
using Matrix = std::vector<Vec>;  // row-major, all rows of equal length

// Row-style Hermite normal form; zero rows are dropped.
Matrix hermite_rows(Matrix a);

int matrix_rank(const Matrix& a);

// Integer basis of {x in Z^cols : a x = 0}. `cols` is needed when a has no rows.
Matrix kernel_basis(const Matrix& a, int cols);

Int gcd_all(const Vec& v);

}  // namespace krull
