#pragma once

// Integer matrices: Smith normal form with transforms and kernels of maps
// into finite abelian groups.

#include "qfwitt/integer.hpp"

#include <vector>

namespace qf {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> row_times(const std::vector<Int>& x, const IntMatrix& m);

struct SmithForm {
    IntMatrix U;    // rows x rows, unimodular
    IntMatrix V;    // cols x cols, unimodular
    IntMatrix Vinv; // inverse of V
    std::vector<Int> diagonal; // length cols; zero past the rank
};

/// U * A * V = diag(diagonal) with each entry dividing the next.
SmithForm smith_normal_form(const IntMatrix& A, std::size_t cols);

/// Z-basis of { x in Z^k : sum_i x_i * images[i] = 0 in (+) Z/moduli[j] }.
IntMatrix kernel_lattice(const IntMatrix& images, const std::vector<Int>& moduli);

} // namespace qf
