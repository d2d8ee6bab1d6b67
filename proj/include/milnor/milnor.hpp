#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/grading.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

// Cross-checked Milnor number computation. The three routes are the closed
// weight formula, the Hilbert-series division, and the brute-force graded
// rank oracle; `consistent` records that every computed route agreed,
// including the per-degree dimensions against the Poincare coefficients.
struct MilnorReport {
    WeightSystem weight_system;
    mpq_class mu_formula;
    std::optional<mpz_class> mu_series;  // absent: series is not a polynomial
    std::optional<mpz_class> mu_oracle;  // absent: singularity not isolated
    std::vector<std::int64_t> per_degree_dims;  // dim (M_f)_alpha, alpha = 0..B+W
    bool isolated = false;
    bool consistent = false;
};

// prod_i (d - w_i) / w_i as an exact rational; never rounded.
mpq_class mu_formula(const WeightSystem& ws);

// dim (M_f)_alpha for alpha = 0..bound: the codimension in S_alpha of the
// degree-alpha slice of the Jacobian ideal, by exact rank computation on the
// matrix whose columns are f_i * (monomial of degree alpha - (d - w_i)).
std::vector<std::int64_t> milnor_algebra_dims(const Polynomial& f,
                                              const WeightSystem& ws,
                                              std::int64_t bound);

// Socle-degree bound B = max(0, r*d - 2*sum w) and window width W = max w_i
// used by the finiteness certificate.
std::int64_t socle_bound(const WeightSystem& ws);

// Total dimension of the Milnor algebra. Finiteness certificate: dimensions
// must vanish on the window (B, B+W]; every monomial of degree > B is
// divisible by some x_i, so a zero window of width W propagates upward.
// Throws NotIsolated when the window is not identically zero.
mpz_class mu_oracle(const Polynomial& f, const WeightSystem& ws);

// Runs all three routes and assembles the cross-checked report. A
// non-isolated singularity yields isolated = false rather than an error;
// weight-system inference failures propagate.
MilnorReport full_report(const Polynomial& f,
                         std::optional<WeightSystem> ws = std::nullopt);

}  // namespace milnor
