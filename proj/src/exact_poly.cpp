#include "denumerant/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "denumerant/error.hpp"

namespace denumerant {

namespace {

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned places) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, places);
  return p;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto s = trim_ws(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  BigInt num = parse_integer(trim_ws(s.substr(0, slash)), text);
  auto den_text = trim_ws(s.substr(slash + 1));
  if (!is_digits(den_text)) throw ParseError("not a rational number: '" + std::string(text) + "'");
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::parse_decimal(std::string_view text) {
  auto s = trim_ws(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (!is_digits(whole) || (dot != std::string_view::npos && !is_digits(frac)))
    throw ParseError("not a decimal number: '" + std::string(text) + "'");
  BigInt num(std::string(whole) + std::string(frac), 10);
  Rational r(num, pow10(static_cast<unsigned>(frac.size())));
  return negative ? -r : r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned places, Rounding mode) const {
  BigInt scaled = abs(value_.get_num()) * pow10(places);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());
  if (mode == Rounding::HalfEven) {
    int c = cmp(BigInt(2 * r), value_.get_den());
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  }
  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (sign() < 0 && q != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - places, places);
  }
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational() : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int power = p.degree(); power >= 0; --power) {
    Rational c = p.coefficient(static_cast<std::size_t>(power));
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = c.sign() < 0 ? -c : c;
    bool unit = mag == Rational(1);
    if (!unit || power == 0) os << mag;
    if (power > 0) {
      if (!unit) os << ' ';
      os << 'x';
      if (power > 1) os << '^' << power;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

Rational eval_poly(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return a - b; }

Rational constant_term(const Polynomial& p) { return p.coefficient(0); }

Polynomial drop_constant(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  c[0] = Rational();
  return Polynomial(std::move(c));
}

int first_difference(const Polynomial& a, const Polynomial& b) {
  auto n = std::max(a.coefficients().size(), b.coefficients().size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.coefficient(i) != b.coefficient(i)) return static_cast<int>(i);
  return -1;
}

Polynomial lagrange_interpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const std::size_t k = points.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i].x == points[j].x) throw DuplicateAbscissa(points[i].x.to_string());

  // master[i] is the x^i coefficient of prod (x - x_j); degree k, monic.
  std::vector<Rational> master(k + 1);
  master[0] = Rational(1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = j + 1; i > 0; --i) {
      master[i] = master[i - 1] - points[j].x * master[i];
    }
    master[0] = -(points[j].x * master[0]);
  }

  std::vector<Rational> result(k);
  std::vector<Rational> quotient(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (points[j].y.is_zero()) continue;
    const Rational& xj = points[j].x;
    // master / (x - xj), highest power first.
    quotient[k - 1] = master[k];
    for (std::size_t i = k - 1; i > 0; --i) quotient[i - 1] = master[i] + xj * quotient[i];
    Rational weight;
    for (std::size_t i = k; i > 0; --i) {
      weight *= xj;
      weight += quotient[i - 1];
    }
    Rational scale = points[j].y / weight;
    for (std::size_t i = 0; i < k; ++i) result[i] += scale * quotient[i];
  }
  return Polynomial(std::move(result));
}

} // namespace denumerant
