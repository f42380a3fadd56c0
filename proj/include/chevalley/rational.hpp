#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace chevalley {

/// Exact rational used for every inner product, length and intermediate value.
using Rational = boost::rational<std::int64_t>;

/// Integers render bare, everything else as "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

} // namespace chevalley
