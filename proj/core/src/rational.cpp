#include "rainbowlab/rational.hpp"

#include <cctype>
#include <string>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InputError("malformed rational: '" + std::string(text) + "'");
  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
      throw InputError("malformed rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    value = Rational(parse_integer(num), d);
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace rainbowlab
