#include <doctest.h>

#include <random>

#include "milnor/linalg.hpp"

using namespace milnor;

namespace {

// Independent rank oracle: plain Gaussian elimination on mpq entries.
std::size_t naive_rank(QMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(rank, j), m.at(pivot, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            mpq_class factor = m.at(i, col) / m.at(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    QMatrix zero(3, 4);
    CHECK(matrix_rank(zero) == 0);
    CHECK(matrix_rank(QMatrix()) == 0);

    QMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(matrix_rank(id) == 3);

    QMatrix dependent(2, 2);
    dependent.at(0, 0) = mpq_class(1, 2);
    dependent.at(0, 1) = 1;
    dependent.at(1, 0) = mpq_class(1, 4);
    dependent.at(1, 1) = mpq_class(1, 2);
    CHECK(matrix_rank(dependent) == 1);
}

TEST_CASE("Bareiss rank agrees with naive elimination on random matrices") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(0, 7);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> sparsity(0, 2);
    for (int iter = 0; iter < 300; ++iter) {
        QMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (sparsity(rng) == 0) continue;
                mpq_class v(num(rng), den(rng));
                v.canonicalize();
                m.at(i, j) = v;
            }
        CHECK(matrix_rank(m) == naive_rank(m));
    }
}

TEST_CASE("matrix product and zero test") {
    QMatrix a(2, 3), b(3, 1);
    a.at(0, 0) = 1;
    a.at(0, 2) = 2;
    a.at(1, 1) = mpq_class(1, 3);
    b.at(0, 0) = 3;
    b.at(2, 0) = -1;
    QMatrix c = a.multiply(b);
    REQUIRE(c.rows() == 2);
    REQUIRE(c.cols() == 1);
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(1, 0) == 0);
    CHECK_FALSE(c.is_zero());
    CHECK_THROWS_AS(b.multiply(a).is_zero(), Error);
}

TEST_CASE("linear solve distinguishes the three outcomes") {
    // Unique: x = 2, y = -1.
    QMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -1;
    auto r = solve_linear_system(a, {mpq_class(1), mpq_class(3)});
    REQUIRE(r.kind == LinearSolveResult::Kind::Unique);
    CHECK(r.solution[0] == 2);
    CHECK(r.solution[1] == -1);

    // Inconsistent: x = 1 and x = 2.
    QMatrix b(2, 1);
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    auto rb = solve_linear_system(b, {mpq_class(1), mpq_class(2)});
    CHECK(rb.kind == LinearSolveResult::Kind::Inconsistent);

    // Underdetermined: one equation, two unknowns.
    QMatrix c(1, 2);
    c.at(0, 0) = 1;
    c.at(0, 1) = 1;
    auto rc = solve_linear_system(c, {mpq_class(1)});
    REQUIRE(rc.kind == LinearSolveResult::Kind::Underdetermined);
    CHECK(rc.null_dimension == 1);
}
