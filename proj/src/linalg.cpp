#include "milnor/linalg.hpp"

#include <cassert>
#include <utility>

#include "milnor/errors.hpp"

namespace milnor {

QMatrix QMatrix::multiply(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error("matrix product dimension mismatch: " +
                    std::to_string(cols_) + " vs " + std::to_string(rhs.rows_));
    QMatrix result(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                result.at(i, j) += a * rhs.at(k, j);
        }
    return result;
}

bool QMatrix::is_zero() const {
    for (const mpq_class& v : data_)
        if (v != 0) return false;
    return true;
}

std::size_t matrix_rank(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class scale = lcm / m.at(i, j).get_den();
            a[i][j] = m.at(i, j).get_num() * scale;
        }
    }

    // Bareiss: every division below is exact.
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

LinearSolveResult solve_linear_system(QMatrix a, std::vector<mpq_class> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    assert(b.size() == rows);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a.at(rank, j), a.at(pivot, j));
            std::swap(b[rank], b[pivot]);
        }
        mpq_class inv = a.at(rank, col);
        for (std::size_t j = col; j < cols; ++j) a.at(rank, j) /= inv;
        b[rank] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            mpq_class factor = a.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                a.at(i, j) -= factor * a.at(rank, j);
            b[i] -= factor * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // Rows below the rank have all-zero coefficients once every column has
    // been processed; a nonzero right-hand side there means inconsistency.
    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0)
            return {LinearSolveResult::Kind::Inconsistent, {}, 0};

    if (rank < cols)
        return {LinearSolveResult::Kind::Underdetermined, {}, cols - rank};

    std::vector<mpq_class> solution(cols);
    for (std::size_t k = 0; k < rank; ++k) solution[pivot_col[k]] = b[k];
    return {LinearSolveResult::Kind::Unique, std::move(solution), 0};
}

}  // namespace milnor
