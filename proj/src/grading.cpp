#include "milnor/grading.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>

#include "milnor/linalg.hpp"

namespace milnor {

namespace {

constexpr Weight kMaxWeight = 1000000000;

Weight parse_positive_int(const std::string& text, const char* what) {
    if (text.empty()) throw Error(std::string("empty ") + what);
    for (char c : text)
        if (c < '0' || c > '9')
            throw Error(std::string("invalid ") + what + " '" + text + "'");
    mpz_class big(text, 10);
    if (big < 1 || big > kMaxWeight)
        throw Error(std::string(what) + " '" + text + "' out of range [1, " +
                    std::to_string(kMaxWeight) + "]");
    return static_cast<Weight>(big.get_si());
}

}  // namespace

WeightSystem::WeightSystem(std::vector<Weight> w, Weight d)
    : weights(std::move(w)), degree(d) {
    if (weights.empty()) throw Error("weight system needs at least one weight");
    for (Weight wi : weights)
        if (wi < 1) throw Error("weights must be positive integers");
    if (degree < 0) throw Error("weighted degree must be non-negative");
}

Weight WeightSystem::max_weight() const {
    Weight m = weights[0];
    for (Weight w : weights)
        if (w > m) m = w;
    return m;
}

Weight WeightSystem::weight_sum() const {
    Weight s = 0;
    for (Weight w : weights) s += w;
    return s;
}

bool WeightSystem::is_primitive() const {
    Weight g = degree;
    for (Weight w : weights) g = std::gcd(g, w);
    return g == 1;
}

WeightSystem WeightSystem::primitive() const {
    Weight g = degree;
    for (Weight w : weights) g = std::gcd(g, w);
    if (g <= 1) return *this;
    std::vector<Weight> w = weights;
    for (Weight& wi : w) wi /= g;
    return WeightSystem(std::move(w), degree / g);
}

std::string WeightSystem::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ",";
        os << weights[i];
    }
    os << ";" << degree;
    return os.str();
}

WeightSystem parse_weight_system(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw Error("weight system must look like \"w1,w2,...,wr;d\"");
    std::vector<Weight> weights;
    std::string head = text.substr(0, semi);
    std::size_t start = 0;
    while (true) {
        const auto comma = head.find(',', start);
        std::string field = head.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        // Trim surrounding spaces.
        const auto a = field.find_first_not_of(" \t");
        const auto b = field.find_last_not_of(" \t");
        field = a == std::string::npos ? "" : field.substr(a, b - a + 1);
        weights.push_back(parse_positive_int(field, "weight"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    std::string tail = text.substr(semi + 1);
    const auto a = tail.find_first_not_of(" \t");
    const auto b = tail.find_last_not_of(" \t");
    tail = a == std::string::npos ? "" : tail.substr(a, b - a + 1);
    const Weight degree = parse_positive_int(tail, "degree");
    return WeightSystem(std::move(weights), degree);
}

std::int64_t weighted_degree(const ExponentVector& exponents,
                             const std::vector<Weight>& weights) {
    if (exponents.size() != weights.size())
        throw VariableMismatch("exponent vector length " +
                               std::to_string(exponents.size()) +
                               " does not match weight count " +
                               std::to_string(weights.size()));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        total += static_cast<std::int64_t>(exponents[i]) * weights[i];
    return total;
}

std::int64_t weighted_degree(const ExponentVector& exponents,
                             const WeightSystem& ws) {
    return weighted_degree(exponents, ws.weights);
}

bool is_weighted_homogeneous(const Polynomial& p, const WeightSystem& ws) {
    if (p.is_zero())
        throw ZeroPolynomial("the zero polynomial has no weighted degree");
    for (const auto& [exps, coeff] : p.terms())
        if (weighted_degree(exps, ws.weights) != ws.degree) return false;
    return true;
}

WeightSystem infer_weight_system(const Polynomial& p) {
    if (p.is_zero())
        throw ZeroPolynomial("cannot infer a weight system for the zero polynomial");
    const std::size_t r = p.variable_count();

    // One equation <alpha, w> = 1 per support monomial (normalization d = 1).
    QMatrix a(p.terms().size(), r);
    std::vector<mpq_class> rhs(p.terms().size(), mpq_class(1));
    std::size_t row = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        for (std::size_t j = 0; j < r; ++j) a.at(row, j) = exps[j];
        ++row;
    }

    LinearSolveResult res = solve_linear_system(std::move(a), std::move(rhs));
    if (res.kind == LinearSolveResult::Kind::Inconsistent)
        throw NotWeightedHomogeneous(
            "no weight system fits the support of the polynomial");
    if (res.kind == LinearSolveResult::Kind::Underdetermined)
        throw AmbiguousWeights(res.null_dimension);

    for (const mpq_class& w : res.solution)
        if (w <= 0)
            throw NotWeightedHomogeneous(
                "the unique weight solution is not positive");

    mpz_class lcm = 1;
    for (const mpq_class& w : res.solution)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den().get_mpz_t());

    mpz_class g = lcm;  // degree after scaling
    std::vector<mpz_class> scaled;
    scaled.reserve(r);
    for (const mpq_class& w : res.solution) {
        mpz_class v = w.get_num() * (lcm / w.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(v);
    }

    std::vector<Weight> weights;
    weights.reserve(r);
    for (mpz_class& v : scaled) {
        mpz_class reduced = v / g;
        if (!reduced.fits_slong_p())
            throw NotWeightedHomogeneous("inferred weights exceed the supported range");
        weights.push_back(static_cast<Weight>(reduced.get_si()));
    }
    mpz_class degree = lcm / g;
    if (!degree.fits_slong_p())
        throw NotWeightedHomogeneous("inferred degree exceeds the supported range");
    return WeightSystem(std::move(weights), static_cast<Weight>(degree.get_si()));
}

WeightSystem derivative_type(const WeightSystem& ws, std::size_t var) {
    if (var >= ws.weights.size())
        throw IndexOutOfRange("variable index " + std::to_string(var) +
                              " out of range for " +
                              std::to_string(ws.weights.size()) + " weights");
    if (ws.degree < ws.weights[var])
        throw DegreeUnderflow("degree " + std::to_string(ws.degree) +
                              " is smaller than weight " +
                              std::to_string(ws.weights[var]));
    return WeightSystem(ws.weights, ws.degree - ws.weights[var]);
}

namespace {

void enumerate_rec(const std::vector<Weight>& weights, std::size_t pos,
                   std::int64_t remaining, ExponentVector& current,
                   std::vector<ExponentVector>& out) {
    if (pos + 1 == weights.size()) {
        if (remaining % weights[pos] == 0) {
            current[pos] = static_cast<int>(remaining / weights[pos]);
            out.push_back(current);
        }
        return;
    }
    for (std::int64_t e = 0; e * weights[pos] <= remaining; ++e) {
        current[pos] = static_cast<int>(e);
        enumerate_rec(weights, pos + 1, remaining - e * weights[pos], current, out);
    }
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(
    const std::vector<Weight>& weights, std::int64_t target_degree) {
    if (weights.empty()) throw Error("weight list must be nonempty");
    std::vector<ExponentVector> out;
    if (target_degree < 0) return out;
    ExponentVector current(weights.size(), 0);
    enumerate_rec(weights, 0, target_degree, current, out);
    return out;
}

}  // namespace milnor
