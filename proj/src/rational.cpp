#include "rspin/rational.hpp"

#include <cctype>

namespace rspin {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
        throw DomainError("malformed rational: " + std::string(text));
    Integer d(std::string(den), 10);
    if (d == 0)
        throw DomainError("zero denominator: " + std::string(text));
    Rational q(Integer(std::string(num), 10), d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational frac(long n, long d)
{
    if (d == 0)
        throw DomainError("zero denominator");
    Rational q{Integer(n), Integer(d)};
    q.canonicalize();
    return q;
}

Rational factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

} // namespace rspin
