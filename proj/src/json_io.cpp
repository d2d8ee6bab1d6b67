#include "milnor/json_io.hpp"

namespace milnor {

namespace {

using nlohmann::json;

// Numbers that fit a signed 64-bit slot stay numeric; anything larger
// becomes a canonical decimal string.
json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json coeff_array(const std::vector<mpz_class>& coeffs) {
    json arr = json::array();
    for (const mpz_class& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

}  // namespace

nlohmann::json to_json(const WeightSystem& ws) {
    return {{"weights", ws.weights}, {"degree", ws.degree}};
}

nlohmann::json to_json(const IntegerPolynomial& p) {
    return {{"coeffs", coeff_array(p.coefficients())}};
}

nlohmann::json to_json(const TruncatedSeries& s) {
    return {{"coeffs", coeff_array(s.coefficients())}};
}

nlohmann::json to_json(const ExactnessReport& report) {
    json slices = json::array();
    for (const SliceResult& s : report.slices) {
        slices.push_back({{"k", s.k},
                          {"alpha", s.alpha},
                          {"rank", s.rank},
                          {"kernel_dim", s.kernel_dim},
                          {"exact", s.exact}});
    }
    json j;
    j["slices"] = std::move(slices);
    j["coker_dims"] = report.coker_dims;
    j["expected_coker"] = report.expected_coker
                              ? coeff_array(*report.expected_coker)
                              : json(nullptr);
    j["all_exact"] = report.all_exact;
    j["compositions_zero"] = report.compositions_zero;
    j["coker_matches"] = report.coker_matches;
    return j;
}

nlohmann::json to_json(const MilnorReport& report) {
    json j;
    j["weights"] = report.weight_system.weights;
    j["degree"] = report.weight_system.degree;
    j["mu_formula"] = report.mu_formula.get_str();
    j["mu_series"] = report.mu_series ? mpz_to_json(*report.mu_series) : json(nullptr);
    j["mu_oracle"] = report.mu_oracle ? mpz_to_json(*report.mu_oracle) : json(nullptr);
    j["isolated"] = report.isolated;
    j["consistent"] = report.consistent;
    j["dims"] = report.per_degree_dims;
    return j;
}

}  // namespace milnor
