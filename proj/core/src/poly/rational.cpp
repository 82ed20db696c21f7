#include <eform/poly/rational.hpp>

#include <cctype>

#include <eform/errors.hpp>

namespace eform::poly {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == start)
            throw ParseError("expected digits in rational", start);
        return j;
    };
    std::size_t end = digits(i);
    mpz_class num(std::string(text.substr(i, end - i)));
    mpz_class den = 1;
    if (end < text.size()) {
        if (text[end] != '/')
            throw ParseError("unexpected character in rational", end);
        std::size_t dend = digits(end + 1);
        if (dend != text.size())
            throw ParseError("trailing characters in rational", dend);
        den = mpz_class(std::string(text.substr(end + 1, dend - end - 1)));
        if (den == 0)
            throw ParseError("zero denominator", end + 1);
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace eform::poly
