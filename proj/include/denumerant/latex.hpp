#pragma once

#include <string>
#include <string_view>

#include "denumerant/exact_poly.hpp"
#include "denumerant/quasi_poly.hpp"

namespace denumerant {

/// "\frac{p}{q}" or a bare integer; a leading '-' for negatives.
std::string latex_rational(const Rational& r);

/**
 * Descending powers, fractions as \frac{p}{q}, unit coefficients dropped
 * on x terms, zero terms omitted, binary " + " / " - " between terms.
 * The zero polynomial renders as "0".
 */
std::string emit_latex(const Polynomial& p);

/// One "h_{r}(x) = ..." line per residue.
std::string emit_latex(const QuasiPolynomial& q);

/// "h_{s}'(x) = ..." lines, then "b_{r} = ..." lines, then a "%" summary line.
std::string emit_latex(const Decomposition& dec);

/// Inverse of emit_latex(Polynomial); also accepts "x^3" for "x^{3}" and
/// arbitrary spacing. Throws ParseError.
Polynomial parse_latex_polynomial(std::string_view text);

} // namespace denumerant
