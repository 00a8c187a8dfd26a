#include "denumerant/denumerant_oracle.hpp"

#include "denumerant/error.hpp"

namespace denumerant {

namespace {

// Coin slots in the outer loop, amounts ascending in the inner: this counts
// multisets per slot, not orderings.
std::vector<BigInt> fill_counts(const CoinSet& coins, std::uint64_t n_max) {
  std::vector<BigInt> c(n_max + 1);
  c[0] = 1;
  for (auto a : coins.denominations()) {
    for (std::uint64_t n = a; n <= n_max; ++n) c[n] += c[n - a];
  }
  return c;
}

} // namespace

BigInt count_change(const CoinSet& coins, std::uint64_t n) { return fill_counts(coins, n)[n]; }

CountTable count_range(const CoinSet& coins, std::uint64_t n_max) {
  return CountTable{coins, fill_counts(coins, n_max)};
}

std::optional<std::uint64_t> frobenius(const CoinSet& coins) {
  if (!coins.coprime()) throw NotCoprime(coins.common_divisor());

  // Once min(a) consecutive amounts are representable, adding the smallest
  // coin covers everything above, so the last zero seen is final.
  const std::uint64_t need = coins.smallest();
  std::vector<bool> representable;
  std::optional<std::uint64_t> last_zero;
  std::uint64_t run = 0;
  for (std::uint64_t n = 0; run < need; ++n) {
    bool hit = n == 0;
    for (auto a : coins.denominations()) {
      if (a > n) break;
      if (representable[n - a]) {
        hit = true;
        break;
      }
    }
    representable.push_back(hit);
    if (hit) {
      ++run;
    } else {
      run = 0;
      last_zero = n;
    }
  }
  return last_zero;
}

} // namespace denumerant
