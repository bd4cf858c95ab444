#include <magus/rational.hpp>

#include <stdexcept>

namespace magus
{
    auto to_string(const Rational & q) -> std::string
    {
        auto num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }

    auto parse_rational(const std::string & text) -> Rational
    {
        try {
            auto slash = text.find('/');
            if (slash == std::string::npos)
                return Rational{BigInt{text}};
            BigInt den{text.substr(slash + 1)};
            if (den == 0)
                throw std::invalid_argument("zero denominator");
            return Rational{BigInt{text.substr(0, slash)}, den};
        }
        catch (const std::runtime_error &) {
            throw std::invalid_argument("bad rational '" + text + "'");
        }
    }
}
