#include "algdef/rational.hpp"

#include <algorithm>
#include <cctype>

#include "algdef/errors.hpp"

namespace algdef {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational literal \"" + std::string(text) + "\"");
    mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw ParseError("zero denominator in rational literal \"" + std::string(text) + "\"");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return sgn(e) == 0; });
}

}  // namespace algdef
