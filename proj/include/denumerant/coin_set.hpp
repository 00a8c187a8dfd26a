#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "denumerant/exact_poly.hpp"

namespace denumerant {

/**
 * A validated multiset of coin denominations.
 *
 * Repeated denominations are kept: each list slot is a distinct coin type,
 * so {1,19,19,20} and {1,19,20} count differently. Denominations are held
 * sorted ascending. The derived constants are always taken over the
 * reduced set a_i / d:
 *
 *   d              gcd of all denominations
 *   period         M  = lcm of the reduced denominations
 *   shared_period  M' = lcm over pairs i < j of gcd(a_i/d, a_j/d), 1 if L = 1
 *
 * Immutable after construction.
 */
class CoinSet {
public:
  /// Throws EmptyCoinSet, NonPositiveDenomination, or std::overflow_error
  /// when M does not fit in 64 bits.
  explicit CoinSet(std::span<const std::int64_t> denominations);
  CoinSet(std::initializer_list<std::int64_t> denominations);

  std::span<const std::uint64_t> denominations() const { return denoms_; }
  std::size_t size() const { return denoms_.size(); }
  std::uint64_t smallest() const { return denoms_.front(); }

  std::uint64_t common_divisor() const { return d_; }
  std::uint64_t period() const { return period_; }
  std::uint64_t shared_period() const { return shared_period_; }
  bool coprime() const { return d_ == 1; }

  /// Product of the denominations.
  BigInt product() const;

  /// "1,5,10,25"
  std::string to_string() const;

  friend bool operator==(const CoinSet&, const CoinSet&) = default;

private:
  std::vector<std::uint64_t> denoms_;
  std::uint64_t d_ = 1;
  std::uint64_t period_ = 1;
  std::uint64_t shared_period_ = 1;
};

CoinSet new_coin_set(std::span<const std::int64_t> denominations);

/// Every denomination divided by the common divisor.
CoinSet reduced(const CoinSet& coins);

} // namespace denumerant
