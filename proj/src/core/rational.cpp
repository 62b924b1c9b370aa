#include "credal/rational.hpp"

#include <cctype>

#include "credal/error.hpp"

namespace credal {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_natural_literal(std::string_view s)
{
    return !s.empty() && s.front() != '-' && s.front() != '+' && is_integer_literal(s);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_natural_literal(den))) {
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational out(n, d);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

}  // namespace credal
