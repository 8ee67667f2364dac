#include "lefschetz/parser.hpp"

#include <cctype>

namespace lefschetz::poly {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars, char var_letter)
        : text_(text), nvars_(nvars), var_(var_letter) {}

    Polynomial run() {
        Polynomial acc(nvars_);
        skip_ws();
        if (at_end()) fail("empty input");
        int sign = read_optional_sign();
        acc += parse_term() * Rational(sign);
        skip_ws();
        while (!at_end()) {
            const char c = peek();
            int s;
            if (c == '+') s = 1;
            else if (c == '-') s = -1;
            else fail(std::string("expected '+' or '-' before next term, got '") + c + "'");
            ++pos_;
            acc += parse_term() * Rational(s);
            skip_ws();
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int read_optional_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            const int s = peek() == '-' ? -1 : 1;
            ++pos_;
            return s;
        }
        return 1;
    }

    bool next_is_digit() {
        skip_ws();
        return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    bool next_is_var() {
        skip_ws();
        return !at_end() && peek() == var_;
    }

    mpz_class parse_integer() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return mpz_class(digits);
    }

    Rational parse_coeff() {
        mpz_class num = parse_integer();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            mpz_class den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return Rational(mpq_class(num, den));
        }
        return Rational(num);
    }

    // var [ '^' positive-integer ]
    void parse_factor(Monomial& m) {
        skip_ws();
        if (at_end() || peek() != var_) fail(std::string("expected variable '") + var_ + "'");
        ++pos_;
        if (!at_end() && peek() == '_') ++pos_;  // 'x_3' alias of 'x3'
        const std::size_t at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        mpz_class idx = parse_integer();
        if (idx >= static_cast<long>(nvars_))
            throw ParseError("variable index " + idx.get_str() + " out of range (nvars = " +
                                 std::to_string(nvars_) + ")",
                             at);
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const std::size_t eat = pos_;
            mpz_class ev = parse_integer();
            if (ev <= 0) throw ParseError("exponent must be a positive integer", eat);
            if (ev > 1000) throw ParseError("exponent too large (limit 1000)", eat);
            e = static_cast<std::uint32_t>(ev.get_ui());
        }
        m.exponents[idx.get_ui()] += e;
    }

    Polynomial parse_term() {
        skip_ws();
        Rational coeff(1);
        Monomial m(nvars_);
        bool have_factor = false;
        if (next_is_digit()) {
            coeff = parse_coeff();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                parse_factor(m);
                have_factor = true;
            }
        } else {
            parse_factor(m);
            have_factor = true;
        }
        while (have_factor) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            parse_factor(m);
        }
        Polynomial p(nvars_);
        p.add_term(m, coeff);
        return p;
    }

    std::string_view text_;
    std::size_t nvars_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
    return Parser(text, nvars, 'x').run();
}

DiffOperator parse_operator(std::string_view text, std::size_t nvars) {
    return DiffOperator{Parser(text, nvars, 'X').run()};
}

}  // namespace lefschetz::poly
