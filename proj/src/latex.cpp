#include "denumerant/latex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "denumerant/conjecture_lab.hpp"
#include "denumerant/error.hpp"

namespace denumerant {

namespace {

std::string latex_magnitude(const Rational& mag) {
  if (mag.is_integer()) return mag.to_string();
  return "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
}

class LatexCursor {
public:
  explicit LatexCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string digits() {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("LaTeX polynomial '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string latex_rational(const Rational& r) {
  return (r.sign() < 0 ? "-" : "") + latex_magnitude(r.sign() < 0 ? -r : r);
}

std::string emit_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int power = p.degree(); power >= 0; --power) {
    const Rational c = p.coefficient(static_cast<std::size_t>(power));
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    if (power == 0 || mag != Rational(1)) out += latex_magnitude(mag);
    if (power == 1) out += 'x';
    if (power > 1) out += "x^{" + std::to_string(power) + "}";
  }
  return out;
}

std::string emit_latex(const QuasiPolynomial& q) {
  std::ostringstream os;
  for (std::uint64_t r = 0; r < q.period(); ++r)
    os << "h_{" << r << "}(x) = " << emit_latex(q.piece(r)) << '\n';
  return os.str();
}

std::string emit_latex(const Decomposition& dec) {
  std::ostringstream os;
  for (std::size_t s = 0; s < dec.shared().size(); ++s)
    os << "h_{" << s << "}'(x) = " << emit_latex(dec.shared()[s]) << '\n';
  for (std::size_t r = 0; r < dec.offsets().size(); ++r)
    os << "b_{" << r << "} = " << latex_rational(dec.offsets()[r]) << '\n';
  auto offsets = dec.offsets();
  auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
  os << "% smallest b = " << latex_rational(*lo) << " = " << lo->to_decimal(kReportPlaces)
     << ", largest b = " << latex_rational(*hi) << " = " << hi->to_decimal(kReportPlaces)
     << ", difference " << (*hi - *lo).to_decimal(kReportPlaces) << '\n';
  return os.str();
}

Polynomial parse_latex_polynomial(std::string_view text) {
  LatexCursor cur(text);
  std::map<std::size_t, Rational> terms;
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept("-")) {
      negative = true;
    } else if (cur.accept("+")) {
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff(1);
    bool has_coeff = false;
    if (cur.accept("\\frac")) {
      cur.expect("{");
      BigInt num(cur.digits(), 10);
      cur.expect("}");
      cur.expect("{");
      BigInt den(cur.digits(), 10);
      cur.expect("}");
      if (den == 0) cur.fail("zero denominator");
      coeff = Rational(num, den);
      has_coeff = true;
    } else if (cur.at_digit()) {
      coeff = Rational(BigInt(cur.digits(), 10));
      has_coeff = true;
    }

    std::size_t power = 0;
    if (cur.accept("x")) {
      power = 1;
      if (cur.accept("^")) {
        const bool braced = cur.accept("{");
        power = std::stoul(cur.digits());
        if (braced) cur.expect("}");
      }
    } else if (!has_coeff) {
      cur.fail("expected a coefficient or x");
    }
    terms[power] += negative ? -coeff : coeff;
  }
  if (first) cur.fail("empty polynomial");

  std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [power, c] : terms) coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

} // namespace denumerant
