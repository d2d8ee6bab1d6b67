#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/grading.hpp"

namespace milnor {

// Polynomial in t with arbitrary-precision integer coefficients; dense,
// trailing zeros stripped, so the zero polynomial has an empty list and
// degree -1.
class IntegerPolynomial {
  public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<mpz_class> coeffs);

    static IntegerPolynomial one();

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    mpz_class coefficient(std::int64_t exponent) const;

    IntegerPolynomial operator+(const IntegerPolynomial& rhs) const;
    IntegerPolynomial operator-(const IntegerPolynomial& rhs) const;
    IntegerPolynomial operator*(const IntegerPolynomial& rhs) const;

    std::string to_string() const;  // e.g. "1 - 2*t^2 + t^4"

    bool operator==(const IntegerPolynomial&) const = default;

  private:
    void strip();
    std::vector<mpz_class> coeffs_;
};

// Power series truncated at order N: exactly N+1 coefficients for t^0..t^N.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::int64_t order);
    explicit TruncatedSeries(std::vector<mpz_class> coeffs);

    std::int64_t order() const {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    mpz_class& at(std::int64_t exponent) { return coeffs_[exponent]; }
    const mpz_class& at(std::int64_t exponent) const { return coeffs_[exponent]; }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;

    bool operator==(const TruncatedSeries&) const = default;

  private:
    std::vector<mpz_class> coeffs_;
};

// Number of monomials of weighted degree alpha, i.e. nonnegative solutions
// of sum w_i a_i = alpha, by the coin-counting DP in O(r * alpha).
mpz_class denumerant(std::int64_t alpha, const std::vector<Weight>& weights);

// Hilbert series of the weighted polynomial ring, prod_i 1/(1 - t^{w_i}),
// truncated at `order`; the coefficient of t^alpha is denumerant(alpha, w).
TruncatedSeries ring_hilbert_series(const std::vector<Weight>& weights,
                                    std::int64_t order);

// Multiplication by t^a (the grading shift M(-a)); coefficients pushed past
// the truncation order fall off.
TruncatedSeries shift_series(const TruncatedSeries& s, std::int64_t a);

// prod_i (1 - t^{d - w_i}), expanded by direct multiplication. Zero when
// d = w_i for some i.
IntegerPolynomial product_numerator(const WeightSystem& ws);

// The same product expanded subset by subset:
//   1 + sum_{k=1..r} (-1)^k sum_{i_1<...<i_k} t^{kd - (w_{i_1}+...+w_{i_k})},
// with colliding exponents accumulated. Exists to check the expansion
// literally against product_numerator, which is the fast path.
IntegerPolynomial lemma_expansion(const WeightSystem& ws);

// Hilbert series of the Milnor algebra of type ws,
// prod_i (1-t^{d-w_i})/(1-t^{w_i}), by exact long division. Throws
// NotPolynomial when the division leaves a remainder, i.e. no
// weighted-homogeneous polynomial of this type has an isolated singularity.
IntegerPolynomial milnor_poincare_polynomial(const WeightSystem& ws);

// Sum of coefficients: exact evaluation at t = 1.
mpz_class evaluate_at_one(const IntegerPolynomial& p);

// First order+1 coefficients of p viewed as a series.
TruncatedSeries truncate(const IntegerPolynomial& p, std::int64_t order);

}  // namespace milnor
