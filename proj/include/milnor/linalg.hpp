#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace milnor {

// Dense matrix over Q; the workhorse behind every rank computation in the
// Koszul and Milnor-algebra degree slices.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpq_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    QMatrix multiply(const QMatrix& rhs) const;
    bool is_zero() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> data_;
};

// Exact rank over Q. Rows are scaled integral, then eliminated with the
// fraction-free (Bareiss) scheme; no thresholds anywhere.
std::size_t matrix_rank(const QMatrix& m);

// Exact Gauss-Jordan solve of A x = b.
struct LinearSolveResult {
    enum class Kind { Unique, Inconsistent, Underdetermined };
    Kind kind;
    std::vector<mpq_class> solution;  // meaningful when kind == Unique
    std::size_t null_dimension = 0;   // meaningful when kind == Underdetermined
};

LinearSolveResult solve_linear_system(QMatrix a, std::vector<mpq_class> b);

}  // namespace milnor
