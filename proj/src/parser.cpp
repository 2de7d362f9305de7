#include "germlab/parser.hpp"

#include <cctype>

namespace germlab {
namespace {

class Parser {
public:
    Parser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) error("SyntaxError", "unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& code, const std::string& what) const {
        fail("algebra." + code,
             what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                error("NegativeExponent", "negative exponent");
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                error("SyntaxError", "expected exponent");
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 100000) error("SyntaxError", "exponent too large");
                ++pos_;
            }
            return b.pow(e);
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) error("SyntaxError", "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) error("SyntaxError", "expected ')'");
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_ref();
        error("SyntaxError", std::string("unexpected character '") + c + "'");
    }

    Polynomial rational_literal() {
        Integer num = integer_literal();
        if (accept('/')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                error("SyntaxError", "expected positive denominator");
            Integer den = digits();
            if (den == 0) {
                pos_ = at;
                error("SyntaxError", "zero denominator");
            }
            return Polynomial::constant(ring_, make_rational(num, den));
        }
        return Polynomial::constant(ring_, Rational(num));
    }

    Integer integer_literal() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            error("SyntaxError", "expected digits");
        Integer v = digits();
        return neg ? Integer(-v) : v;
    }

    Integer digits() {
        Integer v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Polynomial variable_ref() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') ++pos_;
            else break;
        }
        std::string name = text_.substr(start, pos_ - start);
        if (!ring_.contains(name)) {
            pos_ = start;
            error("UnknownVariable", "unknown variable '" + name + "'");
        }
        return Polynomial::variable(ring_, name);
    }

    const std::string& text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    return Parser(text, ring).run();
}

}  // namespace germlab
