#include "wkit/parse.hpp"

#include "wkit/errors.hpp"

#include <cctype>
#include <string>

namespace wkit {

namespace {

class Parser {
public:
    Parser(std::string_view text, Grammar grammar) : text_(text), grammar_(grammar) {}

    Poly parse()
    {
        Poly p = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor()
    {
        char c = peek();
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    }

    Poly expression()
    {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        Poly acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Poly rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '/') {
                ++pos_;
                Poly divisor = power();
                if (!divisor.is_constant() || divisor.is_zero())
                    fail("division by a non-constant or zero expression");
                acc *= Rational(1) / divisor.constant_term();
            } else if (starts_factor()) {
                acc *= power();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly power()
    {
        Poly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected a non-negative integer exponent");
            unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 1000)
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return identifier();
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    Poly number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        // `p/q` is one token only when digits follow the slash directly.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.')
            fail("floating-point literals are not supported");
        return Poly(parse_rational(text_.substr(start, pos_ - start)));
    }

    Poly identifier()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (grammar_.coefficient_vars) {
            if (name == "D")
                return Poly::var(Var::D);
            if (name == "t")
                return Poly::var(Var::t);
            if (name == "u")
                return Poly::var(Var::u);
            if (name == "t1")
                return Poly::var(Var::t1);
            if (name == "t2")
                return Poly::var(Var::t2);
            if (name == "t3")
                return -Poly::var(Var::t1) - Poly::var(Var::t2);
        }
        if (grammar_.z && name == "z")
            return Poly::var(Var::z);
        if (grammar_.q && name == "q")
            return Poly::var(Var::q);
        if (grammar_.shuffle_vars) {
            if (name == "x")
                return Poly::var(Var::x1);
            if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '8')
                return Poly::var(shuffle_var(static_cast<std::size_t>(name[1] - '1')));
        }
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    std::string_view text_;
    Grammar grammar_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, Grammar grammar)
{
    return Parser(text, grammar).parse();
}

} // namespace wkit
