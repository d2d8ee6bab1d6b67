#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor {

using Weight = std::int64_t;

// The type (w_1,...,w_r; d): positive integer weights plus the common
// weighted degree of a polynomial's monomials.
//
// The canonical representative among the equivalent types (c*w; c*d) is the
// primitive one with gcd(w_1,...,w_r,d) = 1; scaled systems stay
// representable since they occur as inputs. Degree 0 is admitted only so
// that derivative_type can report the type of a derivative when d = w_i.
struct WeightSystem {
    std::vector<Weight> weights;
    Weight degree = 0;

    WeightSystem(std::vector<Weight> weights, Weight degree);

    std::size_t variable_count() const { return weights.size(); }
    Weight max_weight() const;
    Weight weight_sum() const;
    bool is_primitive() const;
    WeightSystem primitive() const;

    std::string to_string() const;  // "w1,w2,...,wr;d"

    bool operator==(const WeightSystem&) const = default;
};

// Parses "w1,w2,...,wr;d", positive integers throughout.
WeightSystem parse_weight_system(const std::string& text);

// Sum of m_i * w_i.
std::int64_t weighted_degree(const ExponentVector& exponents,
                             const std::vector<Weight>& weights);
std::int64_t weighted_degree(const ExponentVector& exponents,
                             const WeightSystem& ws);

// True iff every monomial in the support of p has weighted degree ws.degree.
bool is_weighted_homogeneous(const Polynomial& p, const WeightSystem& ws);

// Solves { <alpha, w> = 1 : alpha in supp(p) } exactly over the rationals
// and scales the unique positive solution to the primitive integer type.
// Throws NotWeightedHomogeneous when the system is inconsistent or some
// weight comes out nonpositive, AmbiguousWeights when the solution space has
// positive dimension (in particular when a variable does not occur in p).
WeightSystem infer_weight_system(const Polynomial& p);

// Type of the var-th partial derivative: same weights, degree d - w_var.
// Deliberately not re-primitivized; shifts must stay in the ambient grading.
WeightSystem derivative_type(const WeightSystem& ws, std::size_t var);

// All exponent vectors of weighted degree exactly target, lexicographically
// ascending. The count equals denumerant(target, weights).
std::vector<ExponentVector> enumerate_monomials(
    const std::vector<Weight>& weights, std::int64_t target_degree);

}  // namespace milnor
