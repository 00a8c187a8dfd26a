#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "denumerant/coin_set.hpp"
#include "denumerant/exact_poly.hpp"

namespace denumerant {

/// counts[n] = CH(n) for 0 <= n <= upto().
struct CountTable {
  CoinSet coins;
  std::vector<BigInt> counts;

  std::uint64_t upto() const { return counts.size() - 1; }
};

/// Number of (x_1..x_L), x_i >= 0, with sum a_i x_i = n.
BigInt count_change(const CoinSet& coins, std::uint64_t n);

/// All counts up to n_max in O(L * n_max) big-integer additions.
CountTable count_range(const CoinSet& coins, std::uint64_t n_max);

/// Largest n with CH(n) = 0, or nullopt when every n is representable
/// (exactly when some denomination is 1). Throws NotCoprime if d > 1.
std::optional<std::uint64_t> frobenius(const CoinSet& coins);

} // namespace denumerant
