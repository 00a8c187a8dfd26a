#pragma once

/**
 * Empirical scans over built quasi-polynomials:
 *
 *  - sign census of every coefficient, with zero non-constant coefficients
 *    listed apart from negative ones so "positive" and "nonnegative" can
 *    both be read off;
 *  - integrality of 2 (L-1) a_1...a_L c for every coefficient c (taken over
 *    the reduced set, matching the variable the pieces are written in);
 *  - min, max and spread of the offsets b_r.
 *
 * Each report function fills only its own group of fields; merge_reports
 * combines them.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denumerant/coin_set.hpp"
#include "denumerant/exact_poly.hpp"
#include "denumerant/quasi_poly.hpp"

namespace denumerant {

/// Places used for every decimal rendering in reports.
inline constexpr unsigned kReportPlaces = 4;

struct CoefficientRef {
  std::uint64_t residue;
  std::size_t power;

  friend bool operator==(const CoefficientRef&, const CoefficientRef&) = default;
};

struct IntegralityViolation {
  std::uint64_t residue;
  std::size_t power;
  Rational coefficient;
  Rational scaled; ///< 2 (L-1) prod(a_i) * coefficient
};

struct ConjectureReport {
  CoinSet coins;
  std::uint64_t residue_count = 0;

  // positivity
  std::vector<std::uint64_t> negative_constant;
  std::vector<CoefficientRef> negative_nonconstant;
  std::vector<CoefficientRef> zero_nonconstant;

  // integrality
  BigInt integrality_scale;
  std::vector<IntegralityViolation> integrality_violations;

  // offsets
  std::optional<Rational> b_min;
  std::optional<Rational> b_max;
  std::optional<Rational> b_spread;

  bool nonnegative_nonconstant() const { return negative_nonconstant.empty(); }
  bool positive_nonconstant() const { return negative_nonconstant.empty() && zero_nonconstant.empty(); }
  /// Residues whose x^1 coefficient is negative.
  std::size_t negative_linear_count() const;
};

ConjectureReport positivity_report(const QuasiPolynomial& q);
ConjectureReport integrality_report(const QuasiPolynomial& q);
ConjectureReport b_spread_report(const Decomposition& dec, const CoinSet& coins);

/// 2 (L-1) prod(a_i) over the reduced set.
BigInt integrality_scale(const CoinSet& coins);

/// Integrality scan over arbitrary pieces; piece index is the residue.
std::vector<IntegralityViolation> integrality_violations(const CoinSet& coins,
                                                         std::span<const Polynomial> pieces);

/// Union of the field groups filled by the three reports above.
ConjectureReport merge_reports(const ConjectureReport& positivity, const ConjectureReport& integrality,
                               const ConjectureReport& offsets);

/// Builds, decomposes and runs all three scans.
ConjectureReport full_report(const CoinSet& coins);

struct OffsetBounds {
  Rational low;
  Rational high;
};

struct BatchSummary {
  std::vector<ConjectureReport> reports;
  Rational b_min;
  Rational b_max;
  Rational narrowest_spread;
  Rational widest_spread;
  std::optional<OffsetBounds> bounds;
  /// Every offset of every set lies in bounds (true when no bounds given).
  bool within_bounds = true;
};

/// Offsets are compared exactly against the bounds.
BatchSummary run_batch(std::span<const CoinSet> sets, std::optional<OffsetBounds> bounds = std::nullopt);
BatchSummary summarize(std::vector<ConjectureReport> reports, std::optional<OffsetBounds> bounds = std::nullopt);

} // namespace denumerant
