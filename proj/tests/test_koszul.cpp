#include <doctest.h>

#include <random>

#include "milnor/koszul.hpp"
#include "milnor/milnor.hpp"
#include "test_util.hpp"

using namespace milnor;

namespace {

const std::vector<std::string> XY{"x", "y"};

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
    return result;
}

}  // namespace

TEST_CASE("Koszul shifts on the worked examples") {
    GradedFreeResolution res = koszul_shifts(WeightSystem({1, 1}, 3));
    REQUIRE(res.terms.size() == 3);
    CHECK(res.terms[0].size() == 1);
    CHECK(res.terms[0][0].shift == 0);
    CHECK(res.terms[0][0].subset.empty());
    REQUIRE(res.terms[1].size() == 2);
    CHECK(res.terms[1][0].shift == 2);
    CHECK(res.terms[1][1].shift == 2);
    REQUIRE(res.terms[2].size() == 1);
    CHECK(res.terms[2][0].shift == 4);
    CHECK(res.terms[2][0].subset == std::vector<int>{0, 1});

    GradedFreeResolution quasi = koszul_shifts(WeightSystem({5, 3}, 15));
    CHECK(quasi.terms[1][0].shift == 10);
    CHECK(quasi.terms[1][1].shift == 12);
    CHECK(quasi.terms[2][0].shift == 22);

    GradedFreeResolution single = koszul_shifts(WeightSystem({2}, 6));
    CHECK(single.terms[0][0].shift == 0);
    CHECK(single.terms[1][0].shift == 4);

    CHECK_THROWS_AS(koszul_shifts(WeightSystem({5, 3}, 4)), DegreeUnderflow);
    CHECK_THROWS_AS(koszul_shifts(WeightSystem(std::vector<Weight>(21, 1), 2)),
                    SubsetOverflow);
}

TEST_CASE("term k has C(r,k) generators, 2^r in total") {
    std::mt19937 rng(404);
    for (int iter = 0; iter < 10; ++iter) {
        WeightSystem ws = test_util::random_weight_system(rng, 7, 9, 45);
        GradedFreeResolution res = koszul_shifts(ws);
        const std::size_t r = ws.variable_count();
        std::size_t total = 0;
        for (std::size_t k = 0; k <= r; ++k) {
            CHECK(res.terms[k].size() == binomial(r, k));
            total += res.terms[k].size();
        }
        CHECK(total == (std::size_t{1} << r));
    }
}

TEST_CASE("Euler series on the worked examples") {
    WeightSystem cusp({1, 1}, 3);
    CHECK(euler_series(koszul_shifts(cusp), cusp.weights, 4).coefficients() ==
          std::vector<mpz_class>{1, 2, 1, 0, 0});

    WeightSystem w23({2, 3}, 6);
    CHECK(euler_series(koszul_shifts(w23), w23.weights, 6).coefficients() ==
          std::vector<mpz_class>{1, 0, 1, 0, 0, 0, 0});

    WeightSystem single({2}, 6);
    CHECK(euler_series(koszul_shifts(single), single.weights, 5).coefficients() ==
          std::vector<mpz_class>{1, 0, 1, 0, 1, 0});
}

TEST_CASE("Euler series equals the truncated Poincare polynomial") {
    std::mt19937 rng(90210);
    int checked = 0;
    while (checked < 25) {
        WeightSystem ws = test_util::random_weight_system(rng, 5, 8, 30);
        IntegerPolynomial poincare;
        try {
            poincare = milnor_poincare_polynomial(ws);
        } catch (const NotPolynomial&) {
            continue;
        }
        for (std::int64_t order : {std::int64_t{10}, std::int64_t{37},
                                   std::int64_t{60}}) {
            CHECK(euler_series(koszul_shifts(ws), ws.weights, order) ==
                  truncate(poincare, order));
        }
        ++checked;
    }
}

TEST_CASE("differential matrix of x^3 + y^3 in degree 2, position 1") {
    Polynomial f = parse_polynomial("x^3 + y^3", XY);
    WeightSystem ws({1, 1}, 3);
    GradedMatrix m = differential_matrix(f, ws, 1, 2);

    // Columns e_0 (x) 1 and e_1 (x) 1; rows are the degree-2 monomials
    // y^2, xy, x^2 in lexicographic order.
    REQUIRE(m.column_basis.size() == 2);
    CHECK(m.column_basis[0].subset == std::vector<int>{0});
    CHECK(m.column_basis[1].subset == std::vector<int>{1});
    REQUIRE(m.row_basis.size() == 3);
    CHECK(m.row_basis[0].monomial == ExponentVector{0, 2});
    CHECK(m.row_basis[1].monomial == ExponentVector{1, 1});
    CHECK(m.row_basis[2].monomial == ExponentVector{2, 0});

    CHECK(m.entries.at(2, 0) == 3);  // f_x = 3x^2 lands on the x^2 row
    CHECK(m.entries.at(0, 1) == 3);  // f_y = 3y^2 lands on the y^2 row
    CHECK(m.entries.at(0, 0) == 0);
    CHECK(m.entries.at(1, 0) == 0);
    CHECK(m.entries.at(1, 1) == 0);
    CHECK(m.entries.at(2, 1) == 0);
}

TEST_CASE("differential matrix sign convention at position 2") {
    Polynomial f = parse_polynomial("x^3 + y^3", XY);
    WeightSystem ws({1, 1}, 3);
    GradedMatrix m = differential_matrix(f, ws, 2, 4);

    // d(e_01 (x) 1) = f_x e_1 - f_y e_0.
    REQUIRE(m.column_basis.size() == 1);
    CHECK(m.column_basis[0].subset == std::vector<int>{0, 1});
    REQUIRE(m.row_basis.size() == 6);  // degree-2 monomials for e_0 and e_1

    for (std::size_t row = 0; row < m.row_basis.size(); ++row) {
        const BasisElement& b = m.row_basis[row];
        mpq_class expected = 0;
        if (b.subset == std::vector<int>{1} && b.monomial == ExponentVector{2, 0})
            expected = 3;  // +f_x e_1
        if (b.subset == std::vector<int>{0} && b.monomial == ExponentVector{0, 2})
            expected = -3;  // -f_y e_0
        CHECK(m.entries.at(row, 0) == expected);
    }
}

TEST_CASE("empty degree slices give empty matrices") {
    Polynomial f = parse_polynomial("x^3 + y^3", XY);
    WeightSystem ws({1, 1}, 3);
    GradedMatrix m = differential_matrix(f, ws, 2, 3);  // shift 4 > 3
    CHECK(m.column_basis.empty());
    CHECK(m.entries.cols() == 0);

    CHECK_THROWS_AS(differential_matrix(f, ws, 0, 2), IndexOutOfRange);
    CHECK_THROWS_AS(differential_matrix(f, ws, 3, 2), IndexOutOfRange);
    CHECK_THROWS_AS(
        differential_matrix(parse_polynomial("x^3 + y^2", XY), ws, 1, 2),
        NotHomogeneous);
}

TEST_CASE("d . d = 0 regardless of regularity") {
    std::mt19937 rng(6174);
    const std::vector<std::string> vars{"x", "y", "z"};
    int checked = 0;
    while (checked < 12) {
        WeightSystem ws = test_util::random_weight_system(rng, 3, 4, 12);
        if (ws.variable_count() != 3) continue;
        auto monomials = enumerate_monomials(ws.weights, ws.degree);
        if (monomials.empty()) continue;
        // Random homogeneous f, no isolation requirement at all.
        Polynomial f{vars};
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (const auto& m : monomials) f.add_term(m, coeff(rng));
        if (f.is_zero()) continue;
        for (std::int64_t alpha = 0; alpha <= 8; ++alpha) {
            GradedMatrix d1 = differential_matrix(f, ws, 1, alpha);
            GradedMatrix d2 = differential_matrix(f, ws, 2, alpha);
            GradedMatrix d3 = differential_matrix(f, ws, 3, alpha);
            CHECK(d1.entries.multiply(d2.entries).is_zero());
            CHECK(d2.entries.multiply(d3.entries).is_zero());
        }
        ++checked;
    }
}

TEST_CASE("exactness verified for x^3 + y^3") {
    Polynomial f = parse_polynomial("x^3 + y^3", XY);
    WeightSystem ws({1, 1}, 3);
    ExactnessReport report = verify_exactness(f, ws, 8);
    CHECK(report.all_exact);
    CHECK(report.compositions_zero);
    CHECK(report.coker_matches);
    REQUIRE(report.coker_dims.size() == 9);
    CHECK(report.coker_dims[0] == 1);
    CHECK(report.coker_dims[1] == 2);
    CHECK(report.coker_dims[2] == 1);
    for (std::size_t alpha = 3; alpha <= 8; ++alpha)
        CHECK(report.coker_dims[alpha] == 0);
}

TEST_CASE("exactness verified for x^2 + y^2") {
    ExactnessReport report = verify_exactness(parse_polynomial("x^2 + y^2", XY),
                                              WeightSystem({1, 1}, 2), 6);
    CHECK(report.all_exact);
    CHECK(report.coker_matches);
    CHECK(report.coker_dims[0] == 1);
    for (std::size_t alpha = 1; alpha <= 6; ++alpha)
        CHECK(report.coker_dims[alpha] == 0);
}

TEST_CASE("exactness fails at position 1 for x^2 y^2") {
    Polynomial f = parse_polynomial("x^2*y^2", XY);
    ExactnessReport report = verify_exactness(f, WeightSystem({1, 1}, 4), 10);
    CHECK_FALSE(report.all_exact);
    CHECK(report.compositions_zero);  // it is still a complex
    bool failure_at_one = false;
    for (const SliceResult& s : report.slices)
        if (s.k == 1 && !s.exact) failure_at_one = true;
    CHECK(failure_at_one);
    // The syzygy x f_x - y f_y = 0 lives in degree 4.
    for (const SliceResult& s : report.slices)
        if (s.k == 1 && s.alpha == 4) CHECK(s.kernel_dim == 1);
}
