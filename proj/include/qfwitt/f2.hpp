#pragma once

// Dense linear algebra over F2.

#include <cstdint>
#include <optional>
#include <vector>

namespace qf {

using F2Row = std::vector<std::uint8_t>;
using F2Matrix = std::vector<F2Row>;

int f2_rank(F2Matrix m);

/// A solution of m x = rhs with free variables set to zero, pivots taken in
/// column order.
std::optional<F2Row> f2_solve(const F2Matrix& m, const F2Row& rhs);

F2Row f2_multiply(const F2Matrix& m, const F2Row& x);

} // namespace qf
