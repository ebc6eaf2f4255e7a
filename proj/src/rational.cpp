#include "metricsat/rational.hpp"

#include <cctype>

#include "metricsat/errors.hpp"

namespace metricsat {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s))
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  if (s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("denominator must be unsigned in '" + std::string(text) +
                     "'");
  Integer den = parse_integer(den_text, text);
  if (den == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational &value) {
  if (denominator(value) == 1)
    return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace metricsat
