#include "gpm/numeric.hpp"

#include <cctype>
#include <sstream>

namespace gpm {

BigInt pow_int(const BigInt& base, long exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  if (exp == 0) return BigInt(1);
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp < 0) throw std::invalid_argument("pow_rational: negative exponent");
  if (exp == 0) return Rational(1);
  return Rational(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw internal_error("exact_div: zero divisor");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw internal_error("exact_div: " + num.str() + " is not divisible by " +
                         den.str());
  }
  return q;
}

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bare sign is not a number");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("invalid integer '" + std::string(text) + "'");
  }
  // drop leading zeros: cpp_int's string constructor would read them as an
  // octal prefix
  std::size_t first = start;
  while (first + 1 < text.size() && text[first] == '0') ++first;
  BigInt magnitude((std::string(text.substr(first))));
  return text[0] == '-' ? BigInt(-magnitude) : magnitude;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string digits = std::string(text.substr(0, dot)) + std::string(frac);
    BigInt num = parse_integer(digits);
    BigInt den = pow_int(BigInt(10), static_cast<long>(frac.size()));
    return Rational(num, den);
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

const Rational& Scalar::rational() const {
  if (mode() != NumericMode::exact)
    throw std::logic_error("scalar is not exact");
  return std::get<Rational>(value_);
}

double Scalar::as_double() const {
  if (mode() == NumericMode::exact)
    return std::get<Rational>(value_).convert_to<double>();
  return std::get<double>(value_);
}

std::string Scalar::str() const {
  if (mode() == NumericMode::exact) return to_string(std::get<Rational>(value_));
  return to_string(std::get<double>(value_));
}

}  // namespace gpm
