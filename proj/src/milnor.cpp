#include "milnor/milnor.hpp"

#include <map>
#include <utility>

#include "milnor/linalg.hpp"
#include "milnor/series.hpp"

namespace milnor {

namespace {

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

mpq_class mu_formula(const WeightSystem& ws) {
    mpq_class product = 1;
    for (Weight w : ws.weights) {
        if (ws.degree < w)
            throw DegreeUnderflow("degree " + std::to_string(ws.degree) +
                                  " is smaller than weight " + std::to_string(w));
        mpq_class factor(ws.degree - w, w);
        factor.canonicalize();
        product *= factor;
    }
    return product;
}

std::int64_t socle_bound(const WeightSystem& ws) {
    const std::int64_t b =
        static_cast<std::int64_t>(ws.variable_count()) * ws.degree -
        2 * ws.weight_sum();
    return b > 0 ? b : 0;
}

std::vector<std::int64_t> milnor_algebra_dims(const Polynomial& f,
                                              const WeightSystem& ws,
                                              std::int64_t bound) {
    require_homogeneous(f, ws);
    if (bound < 0) throw Error("degree bound must be non-negative");
    const std::size_t r = ws.variable_count();

    std::vector<Polynomial> partials;
    partials.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        partials.push_back(f.partial_derivative(i));

    std::vector<std::int64_t> dims;
    dims.reserve(bound + 1);
    ExponentVector shifted(r);
    for (std::int64_t alpha = 0; alpha <= bound; ++alpha) {
        const auto rows = enumerate_monomials(ws.weights, alpha);
        std::map<ExponentVector, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

        // Columns span the degree-alpha slice of the Jacobian ideal.
        std::vector<std::pair<std::size_t, ExponentVector>> columns;
        for (std::size_t i = 0; i < r; ++i) {
            if (partials[i].is_zero()) continue;
            const std::int64_t gdeg = alpha - (ws.degree - ws.weights[i]);
            for (auto& g : enumerate_monomials(ws.weights, gdeg))
                columns.emplace_back(i, std::move(g));
        }

        QMatrix m(rows.size(), columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto& [i, g] = columns[c];
            for (const auto& [exps, coeff] : partials[i].terms()) {
                for (std::size_t v = 0; v < r; ++v) shifted[v] = exps[v] + g[v];
                m.at(row_index.at(shifted), c) = coeff;
            }
        }
        dims.push_back(static_cast<std::int64_t>(rows.size()) -
                       static_cast<std::int64_t>(matrix_rank(m)));
    }
    return dims;
}

namespace {

struct OracleRun {
    std::vector<std::int64_t> dims;  // alpha = 0..B+W
    std::int64_t socle;              // B
    bool isolated;                   // window (B, B+W] identically zero
    mpz_class total;                 // sum of dims up to B (valid when isolated)
};

OracleRun run_oracle(const Polynomial& f, const WeightSystem& ws) {
    OracleRun run;
    run.socle = socle_bound(ws);
    const std::int64_t window = ws.max_weight();
    run.dims = milnor_algebra_dims(f, ws, run.socle + window);
    run.isolated = true;
    for (std::int64_t alpha = run.socle + 1; alpha <= run.socle + window; ++alpha)
        if (run.dims[alpha] != 0) run.isolated = false;
    run.total = 0;
    if (run.isolated)
        for (std::int64_t alpha = 0; alpha <= run.socle; ++alpha)
            run.total += run.dims[alpha];
    return run;
}

}  // namespace

mpz_class mu_oracle(const Polynomial& f, const WeightSystem& ws) {
    OracleRun run = run_oracle(f, ws);
    if (!run.isolated)
        throw NotIsolated("Milnor algebra dimensions do not vanish beyond the "
                          "socle bound " + std::to_string(run.socle) +
                          "; the singularity is not isolated");
    return run.total;
}

MilnorReport full_report(const Polynomial& f, std::optional<WeightSystem> ws_opt) {
    if (f.is_zero())
        throw ZeroPolynomial("the zero polynomial has no Milnor number");
    WeightSystem ws = ws_opt ? *ws_opt : infer_weight_system(f);
    require_homogeneous(f, ws);

    MilnorReport report{ws, mu_formula(ws), std::nullopt, std::nullopt, {},
                        false, false};

    std::optional<IntegerPolynomial> poincare;
    try {
        poincare = milnor_poincare_polynomial(ws);
        report.mu_series = evaluate_at_one(*poincare);
    } catch (const NotPolynomial&) {
        // Series route reports "not a polynomial"; the oracle decides below.
    }

    OracleRun run = run_oracle(f, ws);
    report.per_degree_dims = std::move(run.dims);
    report.isolated = run.isolated;
    if (run.isolated) report.mu_oracle = run.total;

    report.consistent = false;
    if (report.isolated && report.mu_series && poincare &&
        report.mu_formula.get_den() == 1) {
        const mpz_class& mu = *report.mu_oracle;
        bool ok = report.mu_formula.get_num() == mu && *report.mu_series == mu;
        // The series identity at full strength: per-degree dimensions match
        // the Poincare coefficients termwise.
        for (std::size_t alpha = 0; alpha < report.per_degree_dims.size(); ++alpha)
            if (poincare->coefficient(static_cast<std::int64_t>(alpha)) !=
                report.per_degree_dims[alpha])
                ok = false;
        report.consistent = ok;
    }
    return report;
}

}  // namespace milnor
