#pragma once

// Construction of an anisotropic part q_a with q = q_a + w hyperbolic planes.

#include "qfwitt/diagonal_form.hpp"
#include "qfwitt/f2.hpp"
#include "qfwitt/ideals.hpp"

#include <optional>
#include <vector>

namespace qf {

/// The linear system over F2 whose solutions pick the binary part.
struct F2System {
    std::vector<int> sign_places;      // real places where the discriminant is negative
    std::vector<PrimeIdeal> primes;    // S, one Hilbert row each
    std::vector<FieldElt> columns;     // singular basis elements
    F2Matrix matrix;
    F2Row rhs;
};

struct ReductionTrace {
    std::vector<FieldElt> alphas;
    int padding = 0;
    std::vector<PrimeIdeal> enlarged_primes;
    F2Row solution_vector;
    std::optional<F2System> system;
    std::optional<DiagonalForm> final_part;
};

/// Coefficientwise square-class representatives in O_K with rational square
/// factors removed; isometric to q.
DiagonalForm normalized(const DiagonalForm& q);

/// alpha with adim(q + <-alpha>) = d - 1, for adim(q) = d >= 4.
FieldElt reduce_high(const DiagonalForm& q, int d);

/// alpha with adim(q + <-alpha>) = 2, for adim(q) = 3.
FieldElt reduce_adim3(const DiagonalForm& q);

/// Anisotropic binary form similar to q, for adim(q) = 2.
DiagonalForm binary_part(const DiagonalForm& q, ReductionTrace* trace = nullptr);

struct AnisotropicResult {
    DiagonalForm part;
    int witt_index = 0;
    ReductionTrace trace;
};

/// Verified decomposition q = part + witt_index hyperbolic planes.
AnisotropicResult anisotropic_part(const DiagonalForm& q);

/// Throws unless q = qa + w hyperbolic planes with qa anisotropic.
void verify_decomposition(const DiagonalForm& q, const DiagonalForm& qa, int w);

} // namespace qf
