#include <cctype>

#include <fmt/format.h>

#include <eform/errors.hpp>
#include <eform/graded/element.hpp>

namespace eform::graded {

namespace {

class GradedParser {
public:
    GradedParser(std::string_view src, const ContextPtr& ctx) : src_(src), ctx_(ctx) {}

    GradedElement run()
    {
        skip_ws();
        if (at_end())
            throw ParseError("empty expression", pos_);
        GradedElement e = expression();
        skip_ws();
        if (!at_end())
            throw ParseError(fmt::format("unexpected '{}'", src_[pos_]), pos_);
        return e;
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

    GradedElement expression()
    {
        GradedElement acc = signed_term();
        for (;;) {
            if (accept('+'))
                acc += signed_term();
            else if (accept('-'))
                acc -= signed_term();
            else
                return acc;
        }
    }

    GradedElement signed_term()
    {
        if (accept('-'))
            return -signed_term();
        if (accept('+'))
            return signed_term();
        GradedElement acc = power();
        while (accept('*'))
            acc = acc * power();
        skip_ws();
        if (!at_end() && src_[pos_] == '/')
            throw ParseError("division is only allowed inside a rational literal", pos_);
        return acc;
    }

    GradedElement power()
    {
        GradedElement base = primary();
        if (!accept('^'))
            return base;
        skip_ws();
        std::size_t start = pos_;
        if (!at_end() && src_[pos_] == '-')
            throw ParseError("negative exponent", start);
        if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a nonnegative integer", start);
        unsigned long e = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(src_[pos_] - '0');
            if (e > 1000)
                throw ParseError("exponent too large", start);
            ++pos_;
        }
        if (!at_end() && (src_[pos_] == '.' || src_[pos_] == '/'))
            throw ParseError("non-integer exponent", start);
        GradedElement out(ctx_, poly::Rational(1));
        for (unsigned long k = 0; k < e; ++k)
            out = out * base;
        return out;
    }

    GradedElement primary()
    {
        skip_ws();
        if (at_end())
            throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            GradedElement inner = expression();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (!at_end() && src_[pos_] == '.')
                throw ParseError("decimal numbers are not supported", pos_);
            std::size_t save = pos_;
            skip_ws();
            if (!at_end() && src_[pos_] == '/') {
                ++pos_;
                skip_ws();
                std::size_t dstart = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
                if (dstart == pos_)
                    throw ParseError("division is only allowed inside a rational literal", dstart);
                std::string lit(src_.substr(start, save - start));
                lit += '/';
                lit += src_.substr(dstart, pos_ - dstart);
                return GradedElement(ctx_, poly::parse_rational(lit));
            }
            pos_ = save;
            return GradedElement(ctx_, poly::parse_rational(src_.substr(start, save - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            auto name = src_.substr(start, pos_ - start);
            auto coord = ctx_->find(name);
            if (!coord)
                throw ParseError(fmt::format("unknown variable '{}'", name), start);
            return GradedElement::coordinate(ctx_, *coord);
        }
        throw ParseError(fmt::format("unexpected '{}'", c), pos_);
    }

    std::string_view src_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

GradedElement parse_graded(std::string_view source, const ContextPtr& ctx)
{
    return GradedParser(source, ctx).run();
}

}  // namespace eform::graded
