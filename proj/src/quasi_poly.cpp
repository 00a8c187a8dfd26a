#include "denumerant/quasi_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "denumerant/denumerant_oracle.hpp"
#include "denumerant/error.hpp"

namespace denumerant {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("sample range exceeds 64 bits");
  return out;
}

// Runs body(r) for every residue, split into contiguous blocks across threads.
template <typename Body>
void for_each_residue(std::uint64_t count, Body body) {
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, count / 256 + 1);
  if (workers <= 1) {
    for (std::uint64_t r = 0; r < count; ++r) body(r);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::uint64_t block = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::uint64_t end = std::min(count, (w + 1) * block);
        for (std::uint64_t r = w * block; r < end; ++r) body(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

BigInt evaluate_piece(const Polynomial& piece, std::uint64_t n, std::uint64_t m) {
  Rational v = piece(Rational(static_cast<unsigned long>(m)));
  if (!v.is_integer() || v.sign() < 0) throw NonIntegerValue(n, v.to_string());
  return v.numerator();
}

} // namespace

QuasiPolynomial::QuasiPolynomial(CoinSet coins, std::vector<Polynomial> pieces,
                                 std::uint64_t verified_upto)
    : coins_(std::move(coins)), reduced_(reduced(coins_)), pieces_(std::move(pieces)),
      verified_upto_(verified_upto) {
  if (pieces_.size() != reduced_.period())
    throw std::invalid_argument("quasi-polynomial needs exactly M = " +
                                std::to_string(reduced_.period()) + " pieces, got " +
                                std::to_string(pieces_.size()));
}

Decomposition::Decomposition(CoinSet coins, std::vector<Polynomial> shared, std::vector<Rational> offsets)
    : coins_(std::move(coins)), shared_(std::move(shared)), offsets_(std::move(offsets)) {
  if (shared_.size() != coins_.shared_period() || offsets_.size() != coins_.period())
    throw std::invalid_argument("decomposition needs M' shared polynomials and M offsets");
  for (std::size_t s = 0; s < shared_.size(); ++s)
    if (!constant_term(shared_[s]).is_zero())
      throw std::invalid_argument("shared polynomial h'_" + std::to_string(s) +
                                  " has a nonzero constant term");
}

Polynomial Decomposition::piece(std::uint64_t residue) const {
  return shared_.at(residue % shared_.size()) + Polynomial::constant(offsets_.at(residue));
}

QuasiPolynomial build_quasi_polynomial(const CoinSet& coins, std::optional<std::uint64_t> extra_checks) {
  const CoinSet base = reduced(coins);
  const std::uint64_t period = base.period();
  const std::uint64_t samples = base.size();
  const std::uint64_t checks = extra_checks.value_or(samples);
  const std::uint64_t span = checked_mul(samples + checks, period);
  const CountTable table = count_range(base, span - 1);

  std::vector<Polynomial> pieces(period);
  for_each_residue(period, [&](std::uint64_t r) {
    std::vector<InterpolationPoint> points;
    points.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const std::uint64_t m = r + i * period;
      points.push_back({Rational(static_cast<unsigned long>(m)), Rational(table.counts[m])});
    }
    Polynomial piece = lagrange_interpolate(points);
    for (std::uint64_t i = samples; i < samples + checks; ++i) {
      const std::uint64_t m = r + i * period;
      Rational got = piece(Rational(static_cast<unsigned long>(m)));
      if (got != Rational(table.counts[m]))
        throw VerificationFailure(m * coins.common_divisor(), table.counts[m].get_str(), got.to_string());
    }
    pieces[r] = std::move(piece);
  });

  return QuasiPolynomial(coins, std::move(pieces), (span - 1) * coins.common_divisor());
}

BigInt evaluate_quasi(const QuasiPolynomial& q, std::uint64_t n) {
  const std::uint64_t d = q.coins().common_divisor();
  if (n % d != 0) return 0;
  const std::uint64_t m = n / d;
  return evaluate_piece(q.piece(m % q.period()), n, m);
}

BigInt evaluate_decomposed(const Decomposition& dec, std::uint64_t n) {
  const std::uint64_t d = dec.coins().common_divisor();
  if (n % d != 0) return 0;
  const std::uint64_t m = n / d;
  return evaluate_piece(dec.piece(m % dec.offsets().size()), n, m);
}

Decomposition decompose(const QuasiPolynomial& q) {
  const std::uint64_t shared_period = q.reduced_coins().shared_period();
  std::vector<Polynomial> shared;
  shared.reserve(shared_period);
  for (std::uint64_t s = 0; s < shared_period; ++s) shared.push_back(drop_constant(q.piece(s)));

  std::vector<Rational> offsets;
  offsets.reserve(q.period());
  for (std::uint64_t r = 0; r < q.period(); ++r) {
    const Polynomial& h = q.piece(r);
    int diff = first_difference(drop_constant(h), shared[r % shared_period]);
    if (diff >= 0) throw DecompositionMismatch(r, static_cast<std::size_t>(diff));
    offsets.push_back(constant_term(h));
  }
  return Decomposition(q.coins(), std::move(shared), std::move(offsets));
}

Rational expected_leading_coefficient(const CoinSet& coins) {
  const CoinSet base = reduced(coins);
  BigInt denom = base.product();
  for (std::size_t k = 2; k < base.size(); ++k) denom *= static_cast<unsigned long>(k);
  return Rational(BigInt(1), denom);
}

Rational leading_coefficient_check(const QuasiPolynomial& q) {
  const Rational expected = expected_leading_coefficient(q.coins());
  const std::size_t top = q.reduced_coins().size() - 1;
  for (std::uint64_t r = 0; r < q.period(); ++r) {
    const Polynomial& h = q.piece(r);
    if (h.degree() != static_cast<int>(top) || h.coefficient(top) != expected)
      throw LeadingCoefficientMismatch(r, h.coefficient(top).to_string(), expected.to_string());
  }
  return expected;
}

} // namespace denumerant
