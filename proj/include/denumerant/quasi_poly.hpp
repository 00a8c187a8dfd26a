#pragma once

/**
 * Exact piecewise-polynomial form of CH(n).
 *
 * For a coin set with gcd d, the pieces are built over the reduced set
 * a_i / d in the reduced variable m = n / d:
 *
 *   CH(n) = 0                         if d does not divide n
 *   CH(n) = h_{m mod M}(m),  m = n/d  otherwise
 *
 * For coprime sets m = n and this is the usual h_{n mod M}(n). Indexing by
 * n mod M with argument n is not valid once d > 1 and gcd(d, M) > 1; the
 * coins {2,4} already break it.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "denumerant/coin_set.hpp"
#include "denumerant/exact_poly.hpp"

namespace denumerant {

class QuasiPolynomial {
public:
  /// `pieces.size()` must equal the reduced period M.
  QuasiPolynomial(CoinSet coins, std::vector<Polynomial> pieces, std::uint64_t verified_upto);

  const CoinSet& coins() const { return coins_; }
  const CoinSet& reduced_coins() const { return reduced_; }
  std::uint64_t period() const { return reduced_.period(); }
  std::span<const Polynomial> pieces() const { return pieces_; }
  const Polynomial& piece(std::uint64_t residue) const { return pieces_.at(residue); }
  /// Largest n (original units) such that every n' <= n was checked against the oracle.
  std::uint64_t verified_upto() const { return verified_upto_; }

private:
  CoinSet coins_;
  CoinSet reduced_;
  std::vector<Polynomial> pieces_;
  std::uint64_t verified_upto_;
};

/// h'_0..h'_{M'-1} with zero constant term, and offsets b_0..b_{M-1}.
class Decomposition {
public:
  Decomposition(CoinSet coins, std::vector<Polynomial> shared, std::vector<Rational> offsets);

  const CoinSet& coins() const { return coins_; }
  std::span<const Polynomial> shared() const { return shared_; }
  std::span<const Rational> offsets() const { return offsets_; }

  /// h'_{r mod M'} + b_r.
  Polynomial piece(std::uint64_t residue) const;

private:
  CoinSet coins_;
  std::vector<Polynomial> shared_;
  std::vector<Rational> offsets_;
};

/**
 * Interpolates each residue class r through the oracle values at
 * r, r+M, ..., r+(L-1)M, then checks `extra_checks` further points
 * r+LM, ... of the same class (L when not given). Throws
 * VerificationFailure on any disagreement.
 */
QuasiPolynomial build_quasi_polynomial(const CoinSet& coins,
                                       std::optional<std::uint64_t> extra_checks = std::nullopt);

/// CH(n) read off the pieces. Throws NonIntegerValue if a piece yields a
/// negative or fractional value.
BigInt evaluate_quasi(const QuasiPolynomial& q, std::uint64_t n);

/// Same contract as evaluate_quasi, going through h' + b instead.
BigInt evaluate_decomposed(const Decomposition& dec, std::uint64_t n);

/// Throws DecompositionMismatch if some h_r disagrees with h'_{r mod M'}
/// away from the constant term.
Decomposition decompose(const QuasiPolynomial& q);

/// 1 / ((L-1)! * prod a_i) over the reduced set.
Rational expected_leading_coefficient(const CoinSet& coins);

/// Checks every piece against expected_leading_coefficient and returns it.
/// Throws LeadingCoefficientMismatch otherwise.
Rational leading_coefficient_check(const QuasiPolynomial& q);

} // namespace denumerant
