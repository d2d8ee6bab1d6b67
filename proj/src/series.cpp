#include "milnor/series.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace milnor {

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    strip();
}

IntegerPolynomial IntegerPolynomial::one() {
    return IntegerPolynomial({mpz_class(1)});
}

void IntegerPolynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntegerPolynomial::coefficient(std::int64_t exponent) const {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[exponent];
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntegerPolynomial();
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const mpz_class& c = coeffs_[e];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        mpz_class a = abs(c);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

TruncatedSeries::TruncatedSeries(std::int64_t order) {
    if (order < 0) throw Error("truncation order must be non-negative");
    coeffs_.assign(order + 1, mpz_class(0));
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw Error("a truncated series needs at least the t^0 coefficient");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    if (order() != rhs.order()) throw Error("series truncation orders differ");
    std::vector<mpz_class> out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    if (order() != rhs.order()) throw Error("series truncation orders differ");
    std::vector<mpz_class> out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

mpz_class denumerant(std::int64_t alpha, const std::vector<Weight>& weights) {
    if (alpha < 0) return 0;
    if (weights.empty()) throw Error("weight list must be nonempty");
    std::vector<mpz_class> dp(alpha + 1);
    dp[0] = 1;
    for (Weight w : weights)
        for (std::int64_t j = w; j <= alpha; ++j) dp[j] += dp[j - w];
    return dp[alpha];
}

TruncatedSeries ring_hilbert_series(const std::vector<Weight>& weights,
                                    std::int64_t order) {
    if (weights.empty()) throw Error("weight list must be nonempty");
    TruncatedSeries s(order);
    s.at(0) = 1;
    // In-place accumulation is exactly multiplication by 1/(1 - t^w).
    for (Weight w : weights)
        for (std::int64_t j = w; j <= order; ++j) s.at(j) += s.at(j - w);
    return s;
}

TruncatedSeries shift_series(const TruncatedSeries& s, std::int64_t a) {
    if (a < 0) throw Error("shift must be non-negative");
    TruncatedSeries out(s.order());
    for (std::int64_t i = a; i <= s.order(); ++i) out.at(i) = s.at(i - a);
    return out;
}

namespace {

void require_degree_at_least_weights(const WeightSystem& ws) {
    for (Weight w : ws.weights)
        if (ws.degree < w)
            throw DegreeUnderflow("degree " + std::to_string(ws.degree) +
                                  " is smaller than weight " + std::to_string(w));
}

}  // namespace

IntegerPolynomial product_numerator(const WeightSystem& ws) {
    require_degree_at_least_weights(ws);
    IntegerPolynomial acc = IntegerPolynomial::one();
    for (Weight w : ws.weights) {
        std::vector<mpz_class> factor(ws.degree - w + 1);
        factor[0] = 1;
        factor[ws.degree - w] -= 1;  // (1 - t^0) collapses to the zero polynomial
        acc = acc * IntegerPolynomial(std::move(factor));
    }
    return acc;
}

IntegerPolynomial lemma_expansion(const WeightSystem& ws) {
    require_degree_at_least_weights(ws);
    const std::size_t r = ws.variable_count();
    if (r > 30)
        throw SubsetOverflow("refusing to enumerate 2^" + std::to_string(r) +
                             " subsets");
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(r) * ws.degree + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        std::int64_t k = 0, wsum = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) {
                ++k;
                wsum += ws.weights[i];
            }
        const std::int64_t exponent = k * ws.degree - wsum;
        if (k % 2 == 0)
            coeffs[exponent] += 1;
        else
            coeffs[exponent] -= 1;
    }
    return IntegerPolynomial(std::move(coeffs));
}

IntegerPolynomial milnor_poincare_polynomial(const WeightSystem& ws) {
    IntegerPolynomial num = product_numerator(ws);
    if (num.is_zero()) return IntegerPolynomial();  // some d = w_i: mu = 0

    IntegerPolynomial den = IntegerPolynomial::one();
    for (Weight w : ws.weights) {
        std::vector<mpz_class> factor(w + 1);
        factor[0] = 1;
        factor[w] = -1;
        den = den * IntegerPolynomial(std::move(factor));
    }

    const std::int64_t dn = num.degree(), dd = den.degree();
    const mpz_class& lead = den.coefficients().back();
    assert(lead == 1 || lead == -1);
    if (dn < dd)
        throw NotPolynomial("Hilbert series of type " + ws.to_string() +
                            " is not a polynomial");

    std::vector<mpz_class> rem = num.coefficients();
    std::vector<mpz_class> quo(dn - dd + 1);
    const std::vector<mpz_class>& d = den.coefficients();
    for (std::int64_t e = dn; e >= dd; --e) {
        if (rem[e] == 0) continue;
        mpz_class q = lead == 1 ? rem[e] : mpz_class(-rem[e]);
        quo[e - dd] = q;
        for (std::int64_t j = 0; j <= dd; ++j) rem[e - dd + j] -= q * d[j];
    }
    for (const mpz_class& c : rem)
        if (c != 0)
            throw NotPolynomial("Hilbert series of type " + ws.to_string() +
                                " is not a polynomial");
    return IntegerPolynomial(std::move(quo));
}

mpz_class evaluate_at_one(const IntegerPolynomial& p) {
    mpz_class total = 0;
    for (const mpz_class& c : p.coefficients()) total += c;
    return total;
}

TruncatedSeries truncate(const IntegerPolynomial& p, std::int64_t order) {
    TruncatedSeries out(order);
    for (std::int64_t i = 0; i <= order && i <= p.degree(); ++i)
        out.at(i) = p.coefficients()[i];
    return out;
}

}  // namespace milnor
