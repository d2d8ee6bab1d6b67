#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

// Exponent vector of a monomial; entry i is the exponent of variable i.
// std::vector's lexicographic operator< fixes the monomial order used
// everywhere downstream.
using ExponentVector = std::vector<int>;

// Sparse multivariate polynomial over exact rationals.
//
// Canonical form: no zero coefficient is ever stored and every exponent
// vector has the same length as the variable list, so two polynomials are
// equal iff their variable lists and term maps are equal.
class Polynomial {
  public:
    using TermMap = std::map<ExponentVector, mpq_class>;

    explicit Polynomial(std::vector<std::string> variables);
    Polynomial(std::vector<std::string> variables, TermMap terms);

    static Polynomial monomial(std::vector<std::string> variables,
                               ExponentVector exponents, mpq_class coeff);
    static Polynomial constant(std::vector<std::string> variables,
                               mpq_class value);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t variable_count() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds coeff * x^exponents, dropping the term if it cancels to zero.
    void add_term(const ExponentVector& exponents, const mpq_class& coeff);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;

    Polynomial partial_derivative(std::size_t var) const;

    // Canonical text form; parse_polynomial(to_string(), variables()) is the
    // identity.
    std::string to_string() const;

    bool operator==(const Polynomial& rhs) const = default;

  private:
    void check_same_variables(const Polynomial& rhs) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Parses the expanded-polynomial grammar (whitespace insignificant):
//   poly   := ["-"] term (("+"|"-") term)*
//   term   := coeff ("*"? mono)? | mono
//   mono   := factor ("*"? factor)*
//   factor := var ("^" nat)?
//   coeff  := nat ("/" nat)?
//   var    := letter (letter|digit)*
// No parentheses; inputs are expanded polynomials.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// Identifiers of `text` in order of first occurrence, for callers that do
// not pass an explicit variable list.
std::vector<std::string> scan_variables(const std::string& text);

}  // namespace milnor
