#include "milnor/koszul.hpp"

#include <cassert>
#include <map>

namespace milnor {

namespace {

void combinations_rec(int r, int k, int start, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int i = start; i <= r - (k - static_cast<int>(current.size())); ++i) {
        current.push_back(i);
        combinations_rec(r, k, i + 1, current, out);
        current.pop_back();
    }
}

// All ascending k-subsets of {0..r-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int r, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    combinations_rec(r, k, 0, current, out);
    return out;
}

void require_homogeneous(const Polynomial& f, const WeightSystem& ws) {
    if (f.variable_count() != ws.variable_count())
        throw VariableMismatch("polynomial has " +
                               std::to_string(f.variable_count()) +
                               " variables but the weight system has " +
                               std::to_string(ws.variable_count()));
    if (!is_weighted_homogeneous(f, ws))
        throw NotHomogeneous("polynomial is not weighted homogeneous of type " +
                             ws.to_string());
}

}  // namespace

GradedFreeResolution koszul_shifts(const WeightSystem& ws) {
    const std::size_t r = ws.variable_count();
    if (r > 20)
        throw SubsetOverflow("refusing to build a Koszul complex on " +
                             std::to_string(r) + " variables");
    for (Weight w : ws.weights)
        if (ws.degree < w)
            throw DegreeUnderflow("degree " + std::to_string(ws.degree) +
                                  " is smaller than weight " + std::to_string(w));

    GradedFreeResolution res;
    res.terms.resize(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        for (auto& subset : combinations(static_cast<int>(r), static_cast<int>(k))) {
            std::int64_t wsum = 0;
            for (int i : subset) wsum += ws.weights[i];
            const std::int64_t shift = static_cast<std::int64_t>(k) * ws.degree - wsum;
            res.terms[k].push_back({std::move(subset), shift});
        }
    }
    return res;
}

TruncatedSeries euler_series(const GradedFreeResolution& res,
                             const std::vector<Weight>& weights,
                             std::int64_t order) {
    const TruncatedSeries hs = ring_hilbert_series(weights, order);
    TruncatedSeries acc(order);
    for (std::size_t k = 0; k < res.terms.size(); ++k) {
        for (const KoszulGenerator& gen : res.terms[k]) {
            const TruncatedSeries shifted = shift_series(hs, gen.shift);
            acc = (k % 2 == 0) ? acc + shifted : acc - shifted;
        }
    }
    return acc;
}

namespace {

struct SliceBasis {
    std::vector<BasisElement> elements;
    // Per generator: offset of its first monomial and the monomial -> local
    // index lookup within the degree slice.
    std::vector<std::size_t> offsets;
    std::vector<std::map<ExponentVector, std::size_t>> lookup;
};

SliceBasis build_slice_basis(const std::vector<KoszulGenerator>& generators,
                             const std::vector<Weight>& weights,
                             std::int64_t alpha) {
    SliceBasis basis;
    for (const KoszulGenerator& gen : generators) {
        basis.offsets.push_back(basis.elements.size());
        basis.lookup.emplace_back();
        auto monomials = enumerate_monomials(weights, alpha - gen.shift);
        auto& table = basis.lookup.back();
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            table.emplace(monomials[i], i);
            basis.elements.push_back({gen.subset, std::move(monomials[i])});
        }
    }
    return basis;
}

}  // namespace

GradedMatrix differential_matrix(const Polynomial& f, const WeightSystem& ws,
                                 int k, std::int64_t alpha) {
    require_homogeneous(f, ws);
    const std::size_t r = ws.variable_count();
    if (k < 1 || static_cast<std::size_t>(k) > r)
        throw IndexOutOfRange("homological position " + std::to_string(k) +
                              " out of range 1.." + std::to_string(r));

    const GradedFreeResolution res = koszul_shifts(ws);
    const SliceBasis rows = build_slice_basis(res.terms[k - 1], ws.weights, alpha);
    const SliceBasis cols = build_slice_basis(res.terms[k], ws.weights, alpha);

    // Generator subset -> ordinal among the (k-1)-subsets.
    std::map<std::vector<int>, std::size_t> row_gen_index;
    for (std::size_t g = 0; g < res.terms[k - 1].size(); ++g)
        row_gen_index.emplace(res.terms[k - 1][g].subset, g);

    std::vector<Polynomial> partials;
    partials.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        partials.push_back(f.partial_derivative(i));

    GradedMatrix m;
    m.entries = QMatrix(rows.elements.size(), cols.elements.size());
    ExponentVector shifted(r);
    for (std::size_t g = 0; g < res.terms[k].size(); ++g) {
        const std::vector<int>& subset = res.terms[k][g].subset;
        for (const auto& [mono, local] : cols.lookup[g]) {
            const std::size_t column = cols.offsets[g] + local;
            for (std::size_t j = 0; j < subset.size(); ++j) {
                const int var = subset[j];
                std::vector<int> sub = subset;
                sub.erase(sub.begin() + j);
                const std::size_t urow = row_gen_index.at(sub);
                const int sign = (j % 2 == 0) ? 1 : -1;
                for (const auto& [exps, coeff] : partials[var].terms()) {
                    for (std::size_t i = 0; i < r; ++i)
                        shifted[i] = exps[i] + mono[i];
                    const std::size_t row =
                        rows.offsets[urow] + rows.lookup[urow].at(shifted);
                    m.entries.at(row, column) += sign > 0 ? coeff : mpq_class(-coeff);
                }
            }
        }
    }
    m.row_basis = rows.elements;
    m.column_basis = cols.elements;
    return m;
}

ExactnessReport verify_exactness(const Polynomial& f, const WeightSystem& ws,
                                 std::int64_t alpha_max) {
    require_homogeneous(f, ws);
    const std::size_t r = ws.variable_count();

    std::optional<IntegerPolynomial> poincare;
    try {
        poincare = milnor_poincare_polynomial(ws);
    } catch (const NotPolynomial&) {
        // Leave expected cokernel dimensions absent; they cannot match.
    }

    ExactnessReport report;
    report.all_exact = true;
    report.compositions_zero = true;
    report.coker_matches = poincare.has_value();
    std::vector<mpz_class> expected;

    for (std::int64_t alpha = 0; alpha <= alpha_max; ++alpha) {
        std::vector<GradedMatrix> mats;
        mats.reserve(r);
        for (std::size_t k = 1; k <= r; ++k)
            mats.push_back(differential_matrix(f, ws, static_cast<int>(k), alpha));

        std::vector<std::size_t> ranks(r + 2, 0);
        for (std::size_t k = 1; k <= r; ++k)
            ranks[k] = matrix_rank(mats[k - 1].entries);

        for (std::size_t k = 1; k <= r; ++k) {
            const std::size_t cols = mats[k - 1].column_basis.size();
            const std::size_t kernel = cols - ranks[k];
            const bool exact = kernel == ranks[k + 1];
            bool dd_zero = true;
            if (k < r) {
                assert(mats[k - 1].entries.cols() == mats[k].entries.rows());
                dd_zero = mats[k - 1].entries.multiply(mats[k].entries).is_zero();
            }
            report.slices.push_back({static_cast<int>(k), alpha, ranks[k],
                                     kernel, exact, dd_zero});
            report.all_exact = report.all_exact && exact;
            report.compositions_zero = report.compositions_zero && dd_zero;
        }

        // Rows of d_1 are exactly the monomial basis of S_alpha.
        const std::int64_t coker =
            static_cast<std::int64_t>(mats[0].row_basis.size()) -
            static_cast<std::int64_t>(ranks[1]);
        report.coker_dims.push_back(coker);
        if (poincare) {
            mpz_class want = poincare->coefficient(alpha);
            expected.push_back(want);
            if (want != coker) report.coker_matches = false;
        }
    }
    if (poincare) report.expected_coker = std::move(expected);
    return report;
}

}  // namespace milnor
