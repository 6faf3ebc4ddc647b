#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chowlef/element.hpp"
#include "chowlef/presentation.hpp"

namespace chowlef {

// Expression grammar shared by the CLI and model files:
//   element  := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := coeff | gen ['^' int]
//   coeff    := int ['/' int]
// Generator names are ASCII identifiers (theta, z, D0, H, e1, ...).

namespace detail {

class ExprParser {
public:
    ExprParser(const std::vector<GeneratorSpec>& gens, std::string_view text)
        : gens_(gens), text_(text) {}

    RawTerms parse() {
        RawTerms terms;
        skip_ws();
        int sign = consume_sign();
        parse_term(terms, sign);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            parse_term(terms, c == '-' ? -1 : 1);
            skip_ws();
        }
        return terms;
    }

private:
    void parse_term(RawTerms& terms, int sign) {
        Rational coeff = sign;
        Monomial mono(gens_.size());
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_coeff();
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                auto [gen, e] = parse_gen_power();
                mono.exp(gen) += e;
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("expected a term");
        terms.emplace_back(std::move(mono), std::move(coeff));
    }

    Rational parse_coeff() {
        Integer num = parse_int();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            Integer den = parse_int();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::pair<std::size_t, int> parse_gen_power() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        std::size_t gen = gens_.size();
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) {
                gen = i;
                break;
            }
        if (gen == gens_.size()) fail("unknown generator '" + name + "'");
        int e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            Integer n = parse_int();
            if (n < 0 || n > 1000000) fail("bad exponent");
            e = static_cast<int>(n);
        }
        return {gen, e};
    }

    Integer parse_int() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int consume_sign() {
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return -1;
        }
        if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
        return 1;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos_) + ": " +
                                    msg + " in '" + std::string(text_) + "'");
    }

    const std::vector<GeneratorSpec>& gens_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RawTerms parse_raw_terms(const std::vector<GeneratorSpec>& gens, std::string_view text) {
    return detail::ExprParser(gens, text).parse();
}

inline RingElement parse_element(const PresPtr& pres, std::string_view text) {
    return RingElement::from_raw(pres, parse_raw_terms(pres->generators(), text));
}

}  // namespace chowlef
