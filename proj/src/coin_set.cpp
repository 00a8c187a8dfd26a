#include "denumerant/coin_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "denumerant/error.hpp"

namespace denumerant {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t step = b / std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, step, &out))
    throw std::overflow_error("coin set period exceeds 64 bits");
  return out;
}

} // namespace

CoinSet::CoinSet(std::span<const std::int64_t> denominations) {
  if (denominations.empty()) throw EmptyCoinSet();
  denoms_.reserve(denominations.size());
  for (std::size_t i = 0; i < denominations.size(); ++i) {
    if (denominations[i] < 1) throw NonPositiveDenomination(denominations[i], i);
    denoms_.push_back(static_cast<std::uint64_t>(denominations[i]));
  }
  std::sort(denoms_.begin(), denoms_.end());

  d_ = 0;
  for (auto a : denoms_) d_ = std::gcd(d_, a);

  period_ = 1;
  for (auto a : denoms_) period_ = checked_lcm(period_, a / d_);

  // Every pairwise gcd divides M, so this cannot overflow once M fits.
  shared_period_ = 1;
  for (std::size_t i = 0; i < denoms_.size(); ++i)
    for (std::size_t j = i + 1; j < denoms_.size(); ++j)
      shared_period_ = std::lcm(shared_period_, std::gcd(denoms_[i] / d_, denoms_[j] / d_));
}

CoinSet::CoinSet(std::initializer_list<std::int64_t> denominations)
    : CoinSet(std::span<const std::int64_t>(denominations.begin(), denominations.size())) {}

BigInt CoinSet::product() const {
  BigInt p = 1;
  for (auto a : denoms_) p *= static_cast<unsigned long>(a);
  return p;
}

std::string CoinSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < denoms_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(denoms_[i]);
  }
  return out;
}

CoinSet new_coin_set(std::span<const std::int64_t> denominations) { return CoinSet(denominations); }

CoinSet reduced(const CoinSet& coins) {
  std::vector<std::int64_t> out;
  out.reserve(coins.size());
  for (auto a : coins.denominations()) out.push_back(static_cast<std::int64_t>(a / coins.common_divisor()));
  return CoinSet(out);
}

} // namespace denumerant
