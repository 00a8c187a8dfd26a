#include "denumerant/conjecture_lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace denumerant {

std::size_t ConjectureReport::negative_linear_count() const {
  return static_cast<std::size_t>(std::count_if(negative_nonconstant.begin(), negative_nonconstant.end(),
                                                [](const CoefficientRef& c) { return c.power == 1; }));
}

ConjectureReport positivity_report(const QuasiPolynomial& q) {
  ConjectureReport report{.coins = q.coins()};
  report.residue_count = q.period();
  const auto top = q.reduced_coins().size() - 1;
  for (std::uint64_t r = 0; r < q.period(); ++r) {
    const Polynomial& h = q.piece(r);
    if (constant_term(h).sign() < 0) report.negative_constant.push_back(r);
    for (std::size_t power = 1; power <= top; ++power) {
      int s = h.coefficient(power).sign();
      if (s < 0) report.negative_nonconstant.push_back({r, power});
      if (s == 0) report.zero_nonconstant.push_back({r, power});
    }
  }
  return report;
}

BigInt integrality_scale(const CoinSet& coins) {
  const CoinSet base = reduced(coins);
  return BigInt(2) * static_cast<unsigned long>(base.size() - 1) * base.product();
}

std::vector<IntegralityViolation> integrality_violations(const CoinSet& coins,
                                                         std::span<const Polynomial> pieces) {
  const Rational scale(integrality_scale(coins));
  std::vector<IntegralityViolation> out;
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    auto coeffs = pieces[r].coefficients();
    for (std::size_t power = 0; power < coeffs.size(); ++power) {
      Rational scaled = scale * coeffs[power];
      if (!scaled.is_integer()) out.push_back({r, power, coeffs[power], scaled});
    }
  }
  return out;
}

ConjectureReport integrality_report(const QuasiPolynomial& q) {
  ConjectureReport report{.coins = q.coins()};
  report.residue_count = q.period();
  report.integrality_scale = integrality_scale(q.coins());
  report.integrality_violations = integrality_violations(q.coins(), q.pieces());
  return report;
}

ConjectureReport b_spread_report(const Decomposition& dec, const CoinSet& coins) {
  ConjectureReport report{.coins = coins};
  auto offsets = dec.offsets();
  report.residue_count = offsets.size();
  if (offsets.empty()) return report;
  auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
  report.b_min = *lo;
  report.b_max = *hi;
  report.b_spread = *hi - *lo;
  return report;
}

ConjectureReport merge_reports(const ConjectureReport& positivity, const ConjectureReport& integrality,
                               const ConjectureReport& offsets) {
  ConjectureReport out = positivity;
  out.integrality_scale = integrality.integrality_scale;
  out.integrality_violations = integrality.integrality_violations;
  out.b_min = offsets.b_min;
  out.b_max = offsets.b_max;
  out.b_spread = offsets.b_spread;
  return out;
}

ConjectureReport full_report(const CoinSet& coins) {
  const QuasiPolynomial q = build_quasi_polynomial(coins);
  const Decomposition dec = decompose(q);
  return merge_reports(positivity_report(q), integrality_report(q), b_spread_report(dec, coins));
}

BatchSummary summarize(std::vector<ConjectureReport> reports, std::optional<OffsetBounds> bounds) {
  if (reports.empty()) throw std::invalid_argument("batch needs at least one coin set");
  BatchSummary out;
  out.bounds = bounds;
  bool first = true;
  for (const auto& rep : reports) {
    if (!rep.b_min || !rep.b_max || !rep.b_spread)
      throw std::invalid_argument("report for " + rep.coins.to_string() + " has no offset statistics");
    if (first) {
      out.b_min = *rep.b_min;
      out.b_max = *rep.b_max;
      out.narrowest_spread = out.widest_spread = *rep.b_spread;
      first = false;
    } else {
      out.b_min = std::min(out.b_min, *rep.b_min);
      out.b_max = std::max(out.b_max, *rep.b_max);
      out.narrowest_spread = std::min(out.narrowest_spread, *rep.b_spread);
      out.widest_spread = std::max(out.widest_spread, *rep.b_spread);
    }
  }
  if (bounds) out.within_bounds = bounds->low <= out.b_min && out.b_max <= bounds->high;
  out.reports = std::move(reports);
  return out;
}

BatchSummary run_batch(std::span<const CoinSet> sets, std::optional<OffsetBounds> bounds) {
  std::vector<ConjectureReport> reports;
  reports.reserve(sets.size());
  for (const auto& cs : sets) reports.push_back(full_report(cs));
  return summarize(std::move(reports), std::move(bounds));
}

} // namespace denumerant
