#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace magus
{
    using Rational = boost::multiprecision::cpp_rational;
    using BigInt = boost::multiprecision::cpp_int;

    /// "p/q", or "p" when q == 1.
    auto to_string(const Rational & q) -> std::string;

    /// Inverse of to_string. Throws std::invalid_argument.
    auto parse_rational(const std::string & text) -> Rational;

    inline auto is_integer(const Rational & q) -> bool
    {
        return boost::multiprecision::denominator(q) == 1;
    }
}
