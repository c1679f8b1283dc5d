#ifndef GPM_NUMERIC_HPP
#define GPM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace gpm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class NumericMode { exact, floating };

/// Thrown when an internal exactness invariant breaks (for example a
/// coefficient division leaving a remainder). Indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Integer powers with the convention 0^0 = 1.
BigInt pow_int(const BigInt& base, long exp);
Rational pow_rational(const Rational& base, long exp);

/// Exact quotient num/den; throws internal_error if den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q" or a decimal string like "-1.25" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);  // "p/q", or "p" when q == 1
std::string to_string(double value);           // round-trip precision

/// One scalar result, exact or floating depending on the evaluation mode.
class Scalar {
public:
  explicit Scalar(Rational value) : value_(std::move(value)) {}
  explicit Scalar(double value) : value_(value) {}

  NumericMode mode() const {
    return std::holds_alternative<Rational>(value_) ? NumericMode::exact
                                                    : NumericMode::floating;
  }

  const Rational& rational() const;
  double as_double() const;
  std::string str() const;

  bool operator==(const Scalar&) const = default;

private:
  std::variant<Rational, double> value_;
};

}  // namespace gpm

#endif  // GPM_NUMERIC_HPP
