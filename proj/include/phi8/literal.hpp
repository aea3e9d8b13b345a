// Parser for golden-field literals such as "1/2 + (3/2)φ - (1/2)√φ" or "(1-phi)/(2 sqrtphi)".
//
// Grammar (whitespace ignored, juxtaposition multiplies):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := integer | 'φ' | 'phi' | '√φ' | 'sqrtphi' | 'sqrt(phi)' | '√5' | 'sqrt5' | 'sqrt(5)'
//            | '(' expr ')'
#pragma once

#include "phi8/field.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace phi8 {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string_view input, std::size_t pos)
        : Error("cannot parse '" + std::string(input) + "' at offset " + std::to_string(pos) + ": " + what) {}
};

namespace detail {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : text_(text) {}

    GoldenExt parse() {
        GoldenExt value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, text_, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool starts_primary() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
        const auto rest = text_.substr(pos_);
        return rest.starts_with("φ") || rest.starts_with("√") || rest.starts_with("phi") ||
               rest.starts_with("sqrt");
    }

    GoldenExt expr() {
        GoldenExt value = term();
        for (;;) {
            if (accept("+")) {
                value += term();
            } else if (accept("-")) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    GoldenExt term() {
        GoldenExt value = unary();
        for (;;) {
            if (accept("*")) {
                value *= unary();
            } else if (accept("/")) {
                const std::size_t at = pos_;
                GoldenExt divisor = unary();
                if (divisor.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                value /= divisor;
            } else if (starts_primary()) {
                value *= power();
            } else {
                return value;
            }
        }
    }

    GoldenExt unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    GoldenExt power() {
        GoldenExt base = primary();
        if (!accept("^")) return base;
        const bool negative = accept("-");
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (negative && base.is_zero()) fail("zero to a negative power");
        return base.pow(negative ? -k : k);
    }

    GoldenExt primary() {
        skip_space();
        if (accept("(")) {
            GoldenExt value = expr();
            if (!accept(")")) fail("expected ')'");
            return value;
        }
        if (accept("√φ") || accept("sqrt(phi)") || accept("sqrtphi")) return GoldenExt::sqrt_phi();
        if (accept("√5") || accept("sqrt(5)") || accept("sqrt5")) return GoldenExt(GoldenScalar::sqrt5());
        if (accept("φ") || accept("phi")) return GoldenExt::phi();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number, φ, √φ, √5 or '('");
        return GoldenExt(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
};

}  // namespace detail

inline GoldenExt parse_golden(std::string_view text) { return detail::LiteralParser(text).parse(); }

}  // namespace phi8
