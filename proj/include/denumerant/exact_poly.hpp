#pragma once

/**
 * Exact rational scalars and dense rational-coefficient polynomials.
 *
 * Rational wraps a GMP mpq_class and keeps it canonical at all times:
 * lowest terms, positive denominator, zero stored as 0/1. Two values are
 * equal iff their numerators and denominators are equal.
 *
 * Polynomial stores coefficients by ascending power with no trailing
 * zeros, so the zero polynomial is the empty vector.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace denumerant {

using BigInt = mpz_class;

enum class Rounding {
  TowardZero, ///< truncate the digits past the last place
  HalfEven,   ///< round to nearest, ties to the even digit
};

class Rational {
public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(unsigned long value) : value_(value) {}
  Rational(const BigInt& value) : value_(value) {}
  /// Throws std::domain_error when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);
  /// Accepts a finite decimal such as "-0.4277" or "13".
  static Rational parse_decimal(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Always "p/q", with q = 1 for integers.
  std::string to_fraction_string() const;
  /// Fixed-point rendering with exactly `places` digits after the point.
  std::string to_decimal(unsigned places, Rounding mode = Rounding::TowardZero) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class Polynomial {
public:
  Polynomial() = default;
  /// Coefficients by ascending power; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^power; zero past the degree.
  Rational coefficient(std::size_t power) const;
  /// Zero for the zero polynomial.
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scale);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Plain-text rendering, e.g. "1/7500 x^3 + 9/1000 x^2 - 1/228 x + 1".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Rational eval_poly(const Polynomial& p, const Rational& x);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Rational constant_term(const Polynomial& p);
/// Same polynomial with the x^0 coefficient set to zero.
Polynomial drop_constant(const Polynomial& p);

/// Index of the lowest power at which the two differ, or -1 if equal.
int first_difference(const Polynomial& a, const Polynomial& b);

struct InterpolationPoint {
  Rational x;
  Rational y;
};

/**
 * The unique polynomial of degree below points.size() through every point.
 *
 * Lagrange basis form: with P(x) = prod (x - x_i), each basis numerator is
 * P(x) / (x - x_j) by synthetic division and its weight is that quotient
 * evaluated at x_j. Throws DuplicateAbscissa if two x values coincide and
 * std::invalid_argument for an empty point list.
 */
Polynomial lagrange_interpolate(std::span<const InterpolationPoint> points);

} // namespace denumerant
