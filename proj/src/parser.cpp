#include "irredpoly/parser.hpp"

#include <cctype>
#include <map>

namespace irredpoly {

namespace {

struct RawTerm {
    Rational coeff;
    std::map<std::string, int> exponents;  // repeated factors accumulate
};

class Parser {
public:
    Parser(const std::string& text, const std::optional<std::vector<std::string>>& order)
        : text_(text), fixed_order_(order.has_value()) {
        if (order) {
            for (const auto& name : *order) {
                if (var_index_.count(name))
                    throw std::invalid_argument("duplicate variable in order: " + name);
                var_index_[name] = static_cast<int>(var_names_.size());
                var_names_.push_back(name);
            }
        }
    }

    ParsedPolynomial run() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);
        int sign = read_sign();
        terms.push_back(term(sign));
        skip_ws();
        while (!at_end()) {
            char c = text_[pos_];
            if (c != '+' && c != '-')
                throw ParseError(std::string("expected '+' or '-', got '") + c + "'", pos_);
            ++pos_;
            skip_ws();
            terms.push_back(term(c == '-' ? -1 : 1));
            skip_ws();
        }

        Polynomial p(static_cast<int>(var_names_.size()));
        for (const auto& t : terms) {
            ExponentVector alpha(var_names_.size(), 0);
            for (const auto& [name, e] : t.exponents) alpha[var_index_.at(name)] += e;
            p.add_term(alpha, t.coeff);
        }
        return {std::move(p), var_names_};
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek_letter() const {
        return !at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }
    bool peek_digit() const {
        return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    int read_sign() {
        int sign = 1;
        while (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -sign;
            ++pos_;
            skip_ws();
        }
        return sign;
    }

    std::string uint_digits() {
        if (!peek_digit()) throw ParseError("expected a number", pos_);
        size_t start = pos_;
        while (peek_digit()) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Rational rational() {
        BigInt num(uint_digits());
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            size_t den_pos = pos_;
            BigInt den(uint_digits());
            if (den == 0) throw ParseError("zero denominator", den_pos);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    std::string ident() {
        size_t start = pos_;
        if (!peek_letter()) throw ParseError("expected a variable name", pos_);
        ++pos_;
        while (peek_letter() || peek_digit()) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int resolve(const std::string& name, size_t at) {
        auto it = var_index_.find(name);
        if (it != var_index_.end()) return it->second;
        if (fixed_order_)
            throw ParseError("unknown variable '" + name + "'", at);
        var_index_[name] = static_cast<int>(var_names_.size());
        var_names_.push_back(name);
        return var_index_[name];
    }

    void factor(RawTerm& t) {
        size_t at = pos_;
        std::string name = ident();
        resolve(name, at);
        int exp = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (!at_end() && text_[pos_] == '-')
                throw ParseError("negative exponent", pos_);
            size_t exp_pos = pos_;
            std::string digits = uint_digits();
            if (digits.size() > 6) throw ParseError("exponent too large", exp_pos);
            exp = std::stoi(digits);
        }
        t.exponents[name] += exp;
    }

    RawTerm term(int sign) {
        RawTerm t;
        t.coeff = sign;
        if (peek_digit()) {
            t.coeff *= rational();
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                factor(t);
            } else if (peek_letter()) {
                factor(t);  // implicit multiplication: 2z1
            } else {
                return t;  // bare constant
            }
        } else {
            if (!peek_letter()) throw ParseError("expected a coefficient or variable", pos_);
            factor(t);
        }
        skip_ws();
        while (!at_end()) {
            if (text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                factor(t);
            } else if (peek_letter()) {
                factor(t);
            } else {
                break;
            }
            skip_ws();
        }
        return t;
    }

    const std::string& text_;
    size_t pos_ = 0;
    bool fixed_order_;
    std::map<std::string, int> var_index_;
    std::vector<std::string> var_names_;
};

}  // namespace

ParsedPolynomial parse_polynomial(const std::string& text,
                                  const std::optional<std::vector<std::string>>& variable_order) {
    return Parser(text, variable_order).run();
}

}  // namespace irredpoly
