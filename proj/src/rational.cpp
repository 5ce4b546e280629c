#include "qosadmit/rational.hpp"

#include <cctype>
#include <ostream>

#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_digits(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(static_cast<long>(numerator), static_cast<long>(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpq_class value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + original + "'");
    }
    mpz_class d = parse_digits(den);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    value = mpq_class(parse_digits(num), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + original + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : parse_digits(whole);
    value = mpq_class(w * scale + parse_digits(frac), scale);
  } else {
    if (!all_digits(text)) throw ParseError("malformed rational '" + original + "'");
    value = mpq_class(parse_digits(text));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }
std::int64_t Rational::numerator_int() const {
  if (!value_.get_num().fits_slong_p()) throw InvalidArgument("numerator too large: " + str());
  return value_.get_num().get_si();
}

std::int64_t Rational::denominator_int() const {
  if (!value_.get_den().fits_slong_p()) throw InvalidArgument("denominator too large: " + str());
  return value_.get_den().get_si();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (sgn(other.value_) == 0) throw InvalidArgument("division by zero rational");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << value.str();
}

}  // namespace qosadmit
