#include "qglab/numeric.hpp"

#include <cmath>
#include <limits>

#include "qglab/errors.hpp"

namespace qgl {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InvalidParameter("bad rational: '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) throw InvalidParameter("bad rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw InvalidParameter("bad rational: '" + std::string(whole) + "'");
  }
  Integer z(std::string(text[0] == '+' ? text.substr(1) : text));
  return z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidParameter("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer ceil(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (q * den < num) q += 1;
  return q;
}

Rational conservative_lower(double x) {
  constexpr double kScale = 1048576.0;  // 2^20
  if (!std::isfinite(x)) return Rational(0);
  double scaled = std::floor((x - 1.0 / kScale) * kScale);
  if (scaled <= 0) return Rational(0);
  return Rational(Integer(static_cast<long long>(scaled)), Integer(1048576));
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw InvalidParameter("value exceeds 64-bit key range: " + z.str());
  return static_cast<std::int64_t>(z);
}

}  // namespace qgl
