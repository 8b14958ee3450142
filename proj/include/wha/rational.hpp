#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "wha/errors.hpp"

namespace wha {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backing type.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(std::string_view s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(s)));
        BigInt num((std::string(s.substr(0, slash))));
        BigInt den((std::string(s.substr(slash + 1))));
        if (den == 0)
            throw ParseError("zero denominator in rational literal");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + std::string(s) + "': " + e.what());
    }
}

inline Rational rational_pow(const Rational& r, long e)
{
    if (e == 0)
        return Rational(1);
    if (e < 0) {
        if (r == 0)
            throw PoleError("0 raised to a negative power");
        return rational_pow(Rational(1) / r, -e);
    }
    Rational acc(1), base(r);
    long k = e;
    while (k > 0) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace wha
