#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symconn {

using Rational = mpq_class;

/// Exact coefficient: a univariate polynomial with rational coefficients in
/// at most one named formal parameter. Degree-0 values are plain rationals.
///
/// Terms are kept sorted by ascending degree with no zero coefficients; the
/// parameter name is dropped whenever the value is constant, so two equal
/// values always have identical representations.
class Scalar {
 public:
  struct Term {
    unsigned degree;
    Rational coeff;
  };

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Scalar monomial(const Rational& coeff, unsigned degree,
                         const std::string& parameter);
  /// The parameter itself, i.e. the monomial of degree one.
  static Scalar parameter(const std::string& name);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0);
  }
  /// Value of a degree-0 scalar; throws ParameterError otherwise.
  Rational rational() const;

  unsigned degree() const noexcept {
    return terms_.empty() ? 0 : terms_.back().degree;
  }
  Rational coefficient(unsigned degree) const;
  std::span<const Term> terms() const noexcept { return terms_; }
  /// Empty for constants.
  const std::string& parameter_name() const noexcept { return parameter_; }

  Scalar substitute(const Rational& value) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Division is only defined by nonzero rationals.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend Scalar operator-(Scalar value);

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical literal, parseable by parse_scalar.
  std::string to_string() const;

 private:
  void normalize();
  static std::string merge_parameter(const Scalar& a, const Scalar& b);

  std::vector<Term> terms_;
  std::string parameter_;
};

/// Parses the sum-of-monomials literal grammar, e.g. "-b+2/3", "3/2*b^2",
/// "-1/3". Whitespace is rejected. Throws ParseError with a byte offset.
Scalar parse_scalar(std::string_view text);

/// Parses a plain rational literal ("-7/3"); throws ParseError otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace symconn
