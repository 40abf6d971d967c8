#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace raag {

/// Exact rational used for every width, distance and length.
using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q", "p" and finite decimals such as "1.25".
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0, e.g. "0/1", "3/2".
std::string format_rational(const Rational& r);

double approximate(const Rational& r);

}  // namespace raag
