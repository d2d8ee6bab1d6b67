#include "milnor/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace milnor {

namespace {

// Exponents stay well inside int64 weighted-degree arithmetic.
constexpr long kMaxExponent = 1000000;

void check_exponents(const ExponentVector& exponents, std::size_t nvars) {
    if (exponents.size() != nvars)
        throw VariableMismatch("exponent vector length " +
                               std::to_string(exponents.size()) +
                               " does not match variable count " +
                               std::to_string(nvars));
    for (int e : exponents)
        if (e < 0) throw Error("negative exponent in exponent vector");
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {
    if (vars_.empty()) throw Error("polynomial needs at least one variable");
}

Polynomial::Polynomial(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
    if (vars_.empty()) throw Error("polynomial needs at least one variable");
    for (auto it = terms_.begin(); it != terms_.end();) {
        check_exponents(it->first, vars_.size());
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::monomial(std::vector<std::string> variables,
                                ExponentVector exponents, mpq_class coeff) {
    Polynomial p(std::move(variables));
    p.add_term(exponents, coeff);
    return p;
}

Polynomial Polynomial::constant(std::vector<std::string> variables,
                                mpq_class value) {
    Polynomial p(std::move(variables));
    p.add_term(ExponentVector(p.variable_count(), 0), value);
    return p;
}

void Polynomial::add_term(const ExponentVector& exponents,
                          const mpq_class& coeff) {
    check_exponents(exponents, vars_.size());
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_variables(const Polynomial& rhs) const {
    if (vars_ != rhs.vars_)
        throw VariableMismatch("polynomials have different variable lists");
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same_variables(rhs);
    Polynomial result = *this;
    for (const auto& [exps, coeff] : rhs.terms_) result.add_term(exps, coeff);
    return result;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_same_variables(rhs);
    Polynomial result = *this;
    for (const auto& [exps, coeff] : rhs.terms_)
        result.add_term(exps, mpq_class(-coeff));
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial result(vars_);
    for (const auto& [exps, coeff] : terms_)
        result.terms_.emplace(exps, mpq_class(-coeff));
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same_variables(rhs);
    Polynomial result(vars_);
    ExponentVector prod(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ea[i] + eb[i];
            result.add_term(prod, mpq_class(ca * cb));
        }
    }
    return result;
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
    if (var >= vars_.size())
        throw IndexOutOfRange("variable index " + std::to_string(var) +
                              " out of range for " +
                              std::to_string(vars_.size()) + " variables");
    Polynomial result(vars_);
    for (const auto& [exps, coeff] : terms_) {
        if (exps[var] == 0) continue;
        ExponentVector lowered = exps;
        --lowered[var];
        result.add_term(lowered, mpq_class(coeff * exps[var]));
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        const bool negative = coeff < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        mpq_class a = abs(coeff);
        bool constant_term = true;
        for (int e : exps)
            if (e != 0) constant_term = false;
        if (constant_term) {
            os << a.get_str();
        } else {
            bool need_star = false;
            if (a != 1) {
                os << a.get_str();
                need_star = true;
            }
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (need_star) os << "*";
                os << vars_[i];
                if (exps[i] > 1) os << "^" << exps[i];
                need_star = true;
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    enum class Kind { Nat, Ident, Plus, Minus, Star, Slash, Caret, End };
    Kind kind;
    std::size_t pos;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ == text_.size()) {
            current_ = {Token::Kind::End, start, ""};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = {Token::Kind::Nat, start, text_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = {Token::Kind::Ident, start,
                        text_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {Token::Kind::Plus, start, "+"}; return;
            case '-': current_ = {Token::Kind::Minus, start, "-"}; return;
            case '*': current_ = {Token::Kind::Star, start, "*"}; return;
            case '/': current_ = {Token::Kind::Slash, start, "/"}; return;
            case '^': current_ = {Token::Kind::Caret, start, "^"}; return;
            default:
                throw SyntaxError(start, "a number, a variable or an operator");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, 0, ""};
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : lexer_(text), nvars_(variables.size()) {
        for (std::size_t i = 0; i < variables.size(); ++i)
            index_[variables[i]] = i;
    }

    Polynomial::TermMap parse() {
        Polynomial::TermMap terms;
        bool negative = false;
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            negative = true;
        }
        while (true) {
            auto [coeff, exps] = parse_term();
            if (negative) coeff = -coeff;
            if (coeff != 0) {
                auto [it, inserted] = terms.emplace(exps, coeff);
                if (!inserted) {
                    it->second += coeff;
                    if (it->second == 0) terms.erase(it);
                }
            }
            const Token& next = lexer_.peek();
            if (next.kind == Token::Kind::End) break;
            if (next.kind == Token::Kind::Plus) {
                negative = false;
            } else if (next.kind == Token::Kind::Minus) {
                negative = true;
            } else {
                throw SyntaxError(next.pos, "'+' or '-'");
            }
            lexer_.take();
        }
        return terms;
    }

  private:
    std::pair<mpq_class, ExponentVector> parse_term() {
        mpq_class coeff = 1;
        ExponentVector exps(nvars_, 0);
        const Token& t = lexer_.peek();
        if (t.kind == Token::Kind::Nat) {
            coeff = parse_coeff();
            if (lexer_.peek().kind == Token::Kind::Star) {
                lexer_.take();
                parse_mono(exps);
            } else if (lexer_.peek().kind == Token::Kind::Ident) {
                parse_mono(exps);
            }
        } else if (t.kind == Token::Kind::Ident) {
            parse_mono(exps);
        } else {
            throw SyntaxError(t.pos, "a number or a variable");
        }
        return {coeff, exps};
    }

    mpq_class parse_coeff() {
        Token nat = expect(Token::Kind::Nat, "a number");
        mpz_class num(nat.text, 10);
        mpz_class den = 1;
        if (lexer_.peek().kind == Token::Kind::Slash) {
            lexer_.take();
            Token d = expect(Token::Kind::Nat, "a denominator");
            den = mpz_class(d.text, 10);
            if (den == 0) throw SyntaxError(d.pos, "a nonzero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    void parse_mono(ExponentVector& exps) {
        parse_factor(exps);
        while (true) {
            if (lexer_.peek().kind == Token::Kind::Star) {
                lexer_.take();
                parse_factor(exps);
            } else if (lexer_.peek().kind == Token::Kind::Ident) {
                parse_factor(exps);
            } else {
                break;
            }
        }
    }

    void parse_factor(ExponentVector& exps) {
        Token id = expect(Token::Kind::Ident, "a variable");
        auto it = index_.find(id.text);
        if (it == index_.end()) throw UnknownVariable(id.text);
        long e = 1;
        if (lexer_.peek().kind == Token::Kind::Caret) {
            lexer_.take();
            Token nat = expect(Token::Kind::Nat, "an exponent");
            mpz_class big(nat.text, 10);
            if (big > kMaxExponent)
                throw SyntaxError(nat.pos, "an exponent at most " +
                                               std::to_string(kMaxExponent));
            e = big.get_si();
        }
        if (exps[it->second] > kMaxExponent - e)
            throw SyntaxError(id.pos, "a total exponent at most " +
                                          std::to_string(kMaxExponent));
        exps[it->second] += static_cast<int>(e);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (lexer_.peek().kind != kind)
            throw SyntaxError(lexer_.peek().pos, what);
        return lexer_.take();
    }

    Lexer lexer_;
    std::size_t nvars_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
    Parser parser(text, variables);
    return Polynomial(variables, parser.parse());
}

std::vector<std::string> scan_variables(const std::string& text) {
    Lexer lexer(text);
    std::vector<std::string> vars;
    while (lexer.peek().kind != Token::Kind::End) {
        Token t = lexer.take();
        if (t.kind != Token::Kind::Ident) continue;
        bool seen = false;
        for (const auto& v : vars)
            if (v == t.text) seen = true;
        if (!seen) vars.push_back(t.text);
    }
    return vars;
}

}  // namespace milnor
