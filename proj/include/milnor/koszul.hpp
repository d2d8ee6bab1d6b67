#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/grading.hpp"
#include "milnor/linalg.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/series.hpp"

namespace milnor {

// Free generator e_T at homological position |T|; T is an ascending list of
// 0-based variable indices and the grading shift is |T|*d - sum_{i in T} w_i.
struct KoszulGenerator {
    std::vector<int> subset;
    std::int64_t shift;

    bool operator==(const KoszulGenerator&) const = default;
};

// Terms of the Koszul complex on (f_1,...,f_r): terms[k] holds the C(r,k)
// generators at position k = 0..r, in lexicographic subset order.
struct GradedFreeResolution {
    std::vector<std::vector<KoszulGenerator>> terms;
};

GradedFreeResolution koszul_shifts(const WeightSystem& ws);

// Alternating sum over the resolution of the shifted ring series,
// sum_k (-1)^k sum_{a in terms[k]} t^a * HS_S(t), truncated at `order`.
TruncatedSeries euler_series(const GradedFreeResolution& res,
                             const std::vector<Weight>& weights,
                             std::int64_t order);

// Basis vector of a graded slice: generator subset plus monomial.
struct BasisElement {
    std::vector<int> subset;
    ExponentVector monomial;

    bool operator==(const BasisElement&) const = default;
};

// Degree-alpha slice of the k-th Koszul differential
//   d(e_{i_1...i_k} (x) m) = sum_j (-1)^{j+1} f_{i_j}*m (x) e_{...i_j gone...}
// Rows are the position-(k-1) basis, columns the position-k basis, both in
// lexicographic (subset, then monomial) order, so the matrix is reproducible
// bit for bit.
struct GradedMatrix {
    std::vector<BasisElement> row_basis;
    std::vector<BasisElement> column_basis;
    QMatrix entries;
};

GradedMatrix differential_matrix(const Polynomial& f, const WeightSystem& ws,
                                 int k, std::int64_t alpha);

struct SliceResult {
    int k;
    std::int64_t alpha;
    std::size_t rank;        // rank of the degree-alpha slice of d_k
    std::size_t kernel_dim;  // dim ker of that slice
    bool exact;              // homology vanishes at (k, alpha)
    bool composition_zero;   // d_k . d_{k+1} = 0 on this slice
};

struct ExactnessReport {
    std::vector<SliceResult> slices;       // alpha-major, then k = 1..r
    std::vector<std::int64_t> coker_dims;  // dim coker d_1 per degree 0..alpha_max
    // Coefficients of the Milnor Poincare polynomial, absent when the series
    // is not a polynomial (then no isolated singularity of this type exists).
    std::optional<std::vector<mpz_class>> expected_coker;
    bool all_exact = false;
    bool compositions_zero = false;
    bool coker_matches = false;
};

// Checks degreewise exactness of the Koszul complex up to alpha_max: ranks
// and kernels per slice, d . d = 0, and the cokernel dimensions of d_1
// against the Milnor Poincare polynomial.
ExactnessReport verify_exactness(const Polynomial& f, const WeightSystem& ws,
                                 std::int64_t alpha_max);

}  // namespace milnor
