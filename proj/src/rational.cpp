#include "chevalley/rational.hpp"

#include <stdexcept>

namespace chevalley {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (used != part.size()) throw std::invalid_argument("not a rational: '" + text + "'");
    return static_cast<std::int64_t>(value);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace chevalley
