#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "apolar/mpoly.hpp"

namespace apolar {

// Parser for the polynomial grammar:
//   poly   ::= ["+"|"-"] term (("+"|"-") term)*
//   term   ::= coeff | [coeff "*"] factor ("*" factor)*
//   factor ::= var ["^" uint]
//   coeff  ::= integer | integer "/" integer
// Whitespace is insignificant. Variable lookup is case-insensitive so that
// dual polynomials written in uppercase (X1*X2^2) parse against the same
// ring as the operators (x1, x2).
template <class F>
class PolyParser {
public:
    PolyParser(std::string text, RingPtr ring, const F& K)
        : text_(std::move(text)), ring_(std::move(ring)), K_(K) {}

    MPoly<F> parse() {
        skip_ws();
        if (eof()) throw SyntaxError("empty polynomial (position 0)");
        MPoly<F> acc(ring_);
        bool neg = consume_sign();
        acc = acc.plus(parse_term(neg), K_);
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = text_[pos_];
            if (c != '+' && c != '-')
                throw SyntaxError("expected '+' or '-' at position " + std::to_string(pos_) +
                                  " in \"" + text_ + "\"");
            ++pos_;
            acc = acc.plus(parse_term(c == '-'), K_);
        }
        return acc;
    }

private:
    std::string text_;
    RingPtr ring_;
    const F& K_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool consume_sign() {
        skip_ws();
        if (!eof() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    std::string read_uint() {
        skip_ws();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start)
            throw SyntaxError("expected a number at position " + std::to_string(start) +
                              " in \"" + text_ + "\"");
        return text_.substr(start, pos_ - start);
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    MPoly<F> parse_term(bool negate) {
        skip_ws();
        if (eof()) throw SyntaxError("dangling sign at position " + std::to_string(pos_));
        typename F::Elem coef = K_.one();
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::string num = read_uint();
            skip_ws();
            if (!eof() && text_[pos_] == '/') {
                ++pos_;
                std::string den = read_uint();
                coef = K_.from_rat_string(num, den);
            } else {
                coef = K_.from_bigint(BigInt::from_string(num));
            }
            saw_coeff = true;
        }
        Expo mono = expo_zero();
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (saw_coeff || saw_factor) {
                if (eof() || text_[pos_] != '*') break;
                ++pos_;
                skip_ws();
            }
            if (eof() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                if (saw_factor || saw_coeff)
                    if (!saw_factor && saw_coeff && !eof() && text_[pos_] == '*')
                        throw SyntaxError("expected a variable at position " + std::to_string(pos_));
                if (!saw_factor && !saw_coeff)
                    throw SyntaxError("expected a term at position " + std::to_string(pos_) +
                                      " in \"" + text_ + "\"");
                break;
            }
            size_t ident_pos = pos_;
            std::string ident = read_ident();
            int vi = lookup_var(ident);
            if (vi < 0)
                throw UnknownVariable("'" + ident + "' at position " + std::to_string(ident_pos) +
                                      " is not a declared variable");
            int exp = 1;
            skip_ws();
            if (!eof() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                if (!eof() && text_[pos_] == '^')
                    throw SyntaxError("'^^' at position " + std::to_string(pos_));
                size_t npos = pos_;
                std::string num = read_uint();
                skip_ws();
                if (!eof() && (text_[pos_] == '/' || text_[pos_] == '.'))
                    throw NonIntegerExponent("exponent at position " + std::to_string(npos) +
                                             " must be a nonnegative integer");
                exp = std::stoi(num);
                if (exp > 255)
                    throw SyntaxError("exponent too large at position " + std::to_string(npos));
            } else if (!eof() && text_[pos_] == '*' && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '*') {
                throw SyntaxError("'**' at position " + std::to_string(pos_) +
                                  "; use '^' for powers");
            }
            if (mono[vi] + exp > 255)
                throw SyntaxError("exponent overflow on variable " + ident);
            mono[vi] = static_cast<uint8_t>(mono[vi] + exp);
            saw_factor = true;
        }
        if (negate) coef = K_.neg(coef);
        return MPoly<F>::monomial(ring_, K_, mono, coef);
    }

    int lookup_var(const std::string& ident) const {
        int vi = ring_->var_index(ident);
        if (vi >= 0) return vi;
        std::string lower = ident;
        for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return ring_->var_index(lower);
    }
};

template <class F>
MPoly<F> parse_poly(const std::string& text, RingPtr ring, const F& K) {
    return PolyParser<F>(text, std::move(ring), K).parse();
}

// Collect the identifiers appearing in a polynomial expression, lowercased,
// sorted by (alphabetic stem, numeric suffix). Used by the CLI to infer the
// ring when none is declared.
std::vector<std::string> collect_variables(const std::string& text);

}  // namespace apolar
