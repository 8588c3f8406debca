#pragma once

#include <cctype>
#include <string>

#include "nsfusion/halfint.hpp"
#include "nsfusion/radical.hpp"

namespace nsf::parse {

namespace detail {

/// Recursive-descent evaluator for exact scalar expressions:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | '(' expr ')' | 'sqrt' '(' expr ')' | integer
/// No floating point anywhere; sqrt radicands must be nonnegative rationals.
class Scanner {
  public:
    explicit Scanner(const std::string& s) : s_(s) {}

    RadicalNumber parse() {
        RadicalNumber v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at '" + s_.substr(pos_) + "'");
        return v;
    }

  private:
    RadicalNumber expr() {
        RadicalNumber v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }
    RadicalNumber term() {
        RadicalNumber v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= factor();
            } else if (peek() == '/') {
                ++pos_;
                v *= factor().inverse();
            } else {
                return v;
            }
        }
    }
    RadicalNumber factor() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            RadicalNumber v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) word += s_[pos_++];
            if (word != "sqrt") throw ParseError("unknown name '" + word + "'");
            expect('(');
            RadicalNumber arg = expr();
            expect(')');
            if (!arg.is_rational()) throw ParseError("sqrt radicand must be rational");
            Rational r = arg.rational_part();
            if (r.sign() < 0) throw ParseError("sqrt radicand must be nonnegative");
            return RadicalNumber::sqrt_of(r);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            if (peek() == '.') throw ParseError("floating point literals rejected");
            return RadicalNumber(Rational::from_string(digits));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Exact scalar from an expression such as "15/2-3*sqrt(5)".
inline RadicalNumber radical(const std::string& s) { return detail::Scanner(s).parse(); }

/// Exact rational; rejects anything irrational.
inline Rational rational(const std::string& s) {
    RadicalNumber v = radical(s);
    if (!v.is_rational()) throw ParseError("expected a rational, got " + v.to_string());
    return v.rational_part();
}

/// Half-integer written as "3/2", "-1/2" or "2".
inline HalfInt half_int(const std::string& s) {
    Rational r = rational(s);
    Rational tw = r * Rational(2);
    if (!tw.is_integer()) throw ParseError("expected a half-integer, got " + s);
    if (!tw.numerator().fits_slong_p()) throw ParseError("half-integer out of range");
    return HalfInt(tw.numerator().get_si());
}

/// Odd positive integer (fusion labels).
inline long odd_label(const std::string& s) {
    Rational r = rational(s);
    if (!r.is_integer()) throw ParseError("expected an integer, got " + s);
    if (!r.numerator().fits_slong_p()) throw ParseError("integer out of range");
    long v = r.numerator().get_si();
    if (v < 1 || v % 2 == 0) throw ParseError("expected an odd positive integer, got " + s);
    return v;
}

}  // namespace nsf::parse
