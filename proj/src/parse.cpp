#include "specfm/parse.hpp"

#include <cctype>

#include "specfm/error.hpp"

namespace specfm {

namespace {

class Parser {
public:
    Parser(const std::string& text, VarSet vars, bool allow_lambda)
        : text_(text), vars_(vars), allow_lambda_(allow_lambda) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    VarSet vars_;
    bool allow_lambda_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& msg) const {
        fail_input("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (!d.is_constant()) error("division by a non-constant expression");
                Scalar s = d.constant_value();
                if (s.is_zero()) error("division by zero");
                acc = acc.scaled(s.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Poly base = atom();
        if (eat('^')) {
            const std::uint32_t k = natural();
            base = base.pow(k);
        }
        return base;
    }

    std::uint32_t natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            error("expected a non-negative integer exponent");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + std::uint64_t(text_[pos_] - '0');
            if (v > 64) error("exponent too large (at most 64)");
            ++pos_;
        }
        return std::uint32_t(v);
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return Poly::constant(vars_, Scalar(Rational(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                name += text_[pos_];
                ++pos_;
            }
            if (name == "lambda") {
                if (!allow_lambda_) error("parameter lambda not allowed here");
                return Poly::constant(vars_, Scalar::param(Param::Lambda));
            }
            auto v = var_from_name(name);
            if (!v) error("unknown identifier '" + name + "'");
            if (*v == Var::w) error("variable w is reserved");
            if (!vars_.contains(*v))
                error("variable '" + name + "' not in the declared variable set");
            return Poly::variable(vars_, *v);
        }
        error(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, VarSet vars) {
    return Parser(text, vars, /*allow_lambda=*/true).parse();
}

Scalar parse_scalar(const std::string& text, bool allow_lambda) {
    Poly p = Parser(text, VarSet{}, allow_lambda).parse();
    return p.constant_value();
}

}  // namespace specfm
