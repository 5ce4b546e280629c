#ifndef QOSADMIT_RATIONAL_HPP
#define QOSADMIT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qosadmit {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP so sums over large enumerations never overflow.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q", "p", or a finite decimal such as "2.49" (read exactly as
  /// 249/100). Throws ParseError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  std::string numerator_str() const;
  std::string denominator_str() const;
  /// Numerator/denominator as machine integers; throws InvalidArgument if
  /// they do not fit.
  std::int64_t numerator_int() const;
  std::int64_t denominator_int() const;
  bool is_integer() const;
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

}  // namespace qosadmit

#endif  // QOSADMIT_RATIONAL_HPP
