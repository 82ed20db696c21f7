#include <eform/poly/parser.hpp>

#include <cctype>

#include <fmt/format.h>

#include <eform/errors.hpp>

namespace eform::poly {

namespace {

class Parser {
public:
    Parser(std::string_view src, const VarList& vars) : src_(src), vars_(vars) {}

    Polynomial run()
    {
        skip_ws();
        if (at_end())
            throw ParseError("empty expression", pos_);
        Polynomial p = expression();
        skip_ws();
        if (!at_end())
            throw ParseError(fmt::format("unexpected '{}'", src_[pos_]), pos_);
        return p;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (!at_end() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression()
    {
        Polynomial acc = signed_term();
        for (;;) {
            if (accept('+'))
                acc += signed_term();
            else if (accept('-'))
                acc -= signed_term();
            else
                return acc;
        }
    }

    Polynomial signed_term()
    {
        if (accept('-'))
            return -signed_term();
        if (accept('+'))
            return signed_term();
        return term();
    }

    Polynomial term()
    {
        Polynomial acc = power();
        for (;;) {
            if (accept('*')) {
                acc *= power();
                continue;
            }
            skip_ws();
            if (!at_end() && src_[pos_] == '/')
                throw ParseError("division is only allowed inside a rational literal", pos_);
            return acc;
        }
    }

    Polynomial power()
    {
        Polynomial base = primary();
        if (!accept('^'))
            return base;
        skip_ws();
        std::size_t start = pos_;
        if (!at_end() && src_[pos_] == '-')
            throw ParseError("negative exponent", start);
        if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a nonnegative integer", start);
        unsigned long e = digits();
        if (!at_end() && (src_[pos_] == '.' || src_[pos_] == '/'))
            throw ParseError("non-integer exponent", start);
        if (e > 1000)
            throw ParseError("exponent too large", start);
        Polynomial out(vars_, Rational(1));
        for (unsigned long k = 0; k < e; ++k)
            out *= base;
        return out;
    }

    unsigned long digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::string_view d = src_.substr(start, pos_ - start);
        if (d.size() > 9)
            throw ParseError("integer too long", start);
        return std::stoul(std::string(d));
    }

    Polynomial primary()
    {
        skip_ws();
        if (at_end())
            throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        throw ParseError(fmt::format("unexpected '{}'", c), pos_);
    }

    Polynomial number()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        mpz_class num(std::string(src_.substr(start, pos_ - start)));
        if (!at_end() && src_[pos_] == '.')
            throw ParseError("decimal numbers are not supported", pos_);
        std::size_t save = pos_;
        skip_ws();
        if (!at_end() && src_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("division is only allowed inside a rational literal", dstart);
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            mpz_class den(std::string(src_.substr(dstart, pos_ - dstart)));
            if (den == 0)
                throw ParseError("zero denominator", dstart);
            Rational q(num, den);
            q.canonicalize();
            return Polynomial(vars_, q);
        }
        pos_ = save;
        return Polynomial(vars_, Rational(num));
    }

    Polynomial identifier()
    {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name)
                return Polynomial::variable(vars_, i);
        throw ParseError(fmt::format("unknown variable '{}'", name), start);
    }

    std::string_view src_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view source, const VarList& vars)
{
    return Parser(source, vars).run();
}

}  // namespace eform::poly
