#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace tropres {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q)   { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/**
 * Parse a decimal integer ("-12") or fraction ("3/4") into a rational.
 * Throws InputError on malformed text or a zero denominator.
 */
inline Rational parse_rational(std::string_view text)
{
    auto parse_integer = [](std::string_view s) -> Integer {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size())
            throw InputError("malformed integer '" + std::string(s) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw InputError("malformed integer '" + std::string(s) + "'");
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/** Least common multiple of the denominators of all given rationals. */
inline Integer common_denominator(const std::vector<Rational>& values)
{
    Integer l = 1;
    for (const auto& q : values)
        l = boost::multiprecision::lcm(l, denominator(q));
    return l;
}

/** Binomial coefficient with overflow detection. */
inline std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
    {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > UINT64_MAX)
            throw std::overflow_error("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

}   // namespace tropres
