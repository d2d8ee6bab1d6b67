#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Polynomial text violates the grammar.
class SyntaxError : public Error {
  public:
    SyntaxError(std::size_t position, std::string expected)
        : Error("syntax error at position " + std::to_string(position) +
                ", expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

  private:
    std::size_t position_;
    std::string expected_;
};

class UnknownVariable : public Error {
  public:
    explicit UnknownVariable(std::string name)
        : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

// Binary operation on polynomials over different variable lists.
class VariableMismatch : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

// Operation needs a nonzero polynomial (the zero polynomial has no degree).
class ZeroPolynomial : public Error {
  public:
    using Error::Error;
};

// No positive weight system fits the support of the polynomial.
class NotWeightedHomogeneous : public Error {
  public:
    using Error::Error;
};

// The weight-system equations have a positive-dimensional solution space.
class AmbiguousWeights : public Error {
  public:
    explicit AmbiguousWeights(std::size_t dimension)
        : Error("weight system is ambiguous, solution space has dimension " +
                std::to_string(dimension)),
          dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }

  private:
    std::size_t dimension_;
};

// d < w_i where d >= w_i is required.
class DegreeUnderflow : public Error {
  public:
    using Error::Error;
};

// Guard against enumerating 2^r subsets for unreasonably large r.
class SubsetOverflow : public Error {
  public:
    using Error::Error;
};

// The candidate Hilbert series of the Milnor algebra is not a polynomial;
// no weighted-homogeneous polynomial of this type has an isolated singularity.
class NotPolynomial : public Error {
  public:
    using Error::Error;
};

// Polynomial is not weighted homogeneous for the given weight system.
class NotHomogeneous : public Error {
  public:
    using Error::Error;
};

// The partial derivatives do not cut out an isolated singularity.
class NotIsolated : public Error {
  public:
    using Error::Error;
};

}  // namespace milnor
