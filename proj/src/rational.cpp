#include "recolor/rational.hpp"

#include <cstdlib>

#include "recolor/instance.hpp"

namespace recolor {

std::string to_string(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

namespace {

long long parse_integer(const std::string& s) {
  if (s.empty()) throw ValidationError("empty number in rational");
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError("malformed rational component '" + s + "'");
  }
  if (pos != s.size())
    throw ValidationError("malformed rational component '" + s + "'");
  return value;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Weight(parse_integer(text));
  long long num = parse_integer(text.substr(0, slash));
  long long den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  return Weight(num, den);
}

}  // namespace recolor
