#include <random>

#include <gtest/gtest.h>

#include "denumerant/denumerant_oracle.hpp"
#include "denumerant/error.hpp"
#include "denumerant/quasi_poly.hpp"
#include "support/oracles.hpp"

using namespace denumerant;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

struct Piece {
  long x_num, x_den, c_num, c_den;
};

// Independently computed with Python fractions.
const Piece kPieces234[12] = {
    {1, 4, 1, 1},  {1, 8, -7, 48}, {1, 4, 5, 12}, {1, 8, 7, 16}, {1, 4, 2, 3},  {1, 8, -7, 48},
    {1, 4, 3, 4},  {1, 8, 5, 48},  {1, 4, 2, 3},  {1, 8, 3, 16}, {1, 4, 5, 12}, {1, 8, 5, 48},
};

const Piece kPieces356[30] = {
    {2, 15, 1, 1},     {1, 45, -1, 36},    {7, 90, -8, 45},  {2, 15, 11, 20},  {1, 45, -8, 45},
    {7, 90, 17, 36},   {2, 15, 1, 1},      {1, 45, -77, 180}, {7, 90, 1, 45},  {2, 15, 7, 20},
    {1, 45, 2, 9},     {7, 90, 17, 36},    {2, 15, 3, 5},    {1, 45, -41, 180}, {7, 90, -8, 45},
    {2, 15, 3, 4},     {1, 45, 2, 9},      {7, 90, 13, 180}, {2, 15, 4, 5},    {1, 45, -77, 180},
    {7, 90, 2, 9},     {2, 15, 3, 4},      {1, 45, -8, 45},  {7, 90, 49, 180}, {2, 15, 3, 5},
    {1, 45, -1, 36},   {7, 90, 2, 9},      {2, 15, 7, 20},   {1, 45, 1, 45},   {7, 90, 13, 180},
};

Polynomial quadratic(const Piece& p, const Rational& lead) {
  return Polynomial({q(p.c_num, p.c_den), q(p.x_num, p.x_den), lead});
}

} // namespace

TEST(BuildQuasi, FrozenPiecesSmallSet) {
  const QuasiPolynomial qp = build_quasi_polynomial(CoinSet{2, 3, 4});
  ASSERT_EQ(qp.period(), 12u);
  for (std::uint64_t r = 0; r < 12; ++r) EXPECT_EQ(qp.piece(r), quadratic(kPieces234[r], q(1, 48))) << r;
}

TEST(BuildQuasi, FrozenPiecesThreeFiveSix) {
  const QuasiPolynomial qp = build_quasi_polynomial(CoinSet{3, 5, 6});
  ASSERT_EQ(qp.period(), 30u);
  for (std::uint64_t r = 0; r < 30; ++r) EXPECT_EQ(qp.piece(r), quadratic(kPieces356[r], q(1, 180))) << r;
}

TEST(BuildQuasi, SingleUnitCoin) {
  const QuasiPolynomial qp = build_quasi_polynomial(CoinSet{1});
  ASSERT_EQ(qp.pieces().size(), 1u);
  EXPECT_EQ(qp.piece(0), Polynomial::constant(q(1)));
}

TEST(BuildQuasi, RepeatedDenominationPieces) {
  const QuasiPolynomial qp = build_quasi_polynomial(CoinSet{1, 19, 19, 20});
  ASSERT_EQ(qp.period(), 380u);
  EXPECT_EQ(constant_term(qp.piece(0)), q(1));
  EXPECT_EQ(constant_term(qp.piece(19)), q(35, 16));
  EXPECT_EQ(constant_term(qp.piece(17)), q(10707, 28880));
  EXPECT_EQ(constant_term(qp.piece(36)), q(782, 1805));
  // residues 19k share everything but the constant
  EXPECT_EQ(drop_constant(qp.piece(0)), drop_constant(qp.piece(19)));
  EXPECT_EQ(drop_constant(qp.piece(0)), drop_constant(qp.piece(361)));
}

TEST(BuildQuasi, VerifiedUpto) {
  // ((L + extra) M - 1) d
  EXPECT_EQ(build_quasi_polynomial(CoinSet{1, 5, 10, 25}).verified_upto(), 399u);
  EXPECT_EQ(build_quasi_polynomial(CoinSet{2, 3, 4}, 0).verified_upto(), 35u);
  EXPECT_EQ(build_quasi_polynomial(CoinSet{2, 4, 6}).verified_upto(), 2u * (6 * 6 - 1));
}

TEST(BuildQuasi, PiecesMatchOracleFarBeyondTheChecks) {
  const CoinSet cs{1, 4, 6, 11};
  const QuasiPolynomial qp = build_quasi_polynomial(cs);
  const CountTable t = count_range(cs, 4000);
  for (std::uint64_t n = 0; n <= 4000; n += 7) EXPECT_EQ(evaluate_quasi(qp, n), t.counts[n]) << n;
}

TEST(Evaluate, Examples) {
  const QuasiPolynomial qp = build_quasi_polynomial(CoinSet{1, 5, 10, 25});
  EXPECT_EQ(evaluate_quasi(qp, 50), 49);
  EXPECT_EQ(evaluate_quasi(qp, 100), 242);
  const QuasiPolynomial even = build_quasi_polynomial(CoinSet{2, 4, 6});
  EXPECT_EQ(evaluate_quasi(even, 3), 0);
  EXPECT_EQ(evaluate_quasi(even, 12), count_change(CoinSet{2, 4, 6}, 12));
  const Decomposition dec = decompose(even);
  EXPECT_EQ(evaluate_decomposed(dec, 7), 0);
  EXPECT_EQ(evaluate_decomposed(dec, 12), count_change(CoinSet{2, 4, 6}, 12));
}

TEST(Evaluate, RejectsFractionalPieces) {
  const CoinSet cs{2, 3};
  std::vector<Polynomial> pieces(6, Polynomial::constant(q(1)));
  pieces[4] = Polynomial::constant(q(1, 2));
  const QuasiPolynomial broken(cs, pieces, 0);
  EXPECT_EQ(evaluate_quasi(broken, 3), 1);
  try {
    evaluate_quasi(broken, 10);
    FAIL() << "no exception";
  } catch (const NonIntegerValue& e) {
    EXPECT_EQ(e.n(), 10u);
  }
  pieces[4] = Polynomial::constant(q(-1));
  EXPECT_THROW(evaluate_quasi(QuasiPolynomial(cs, pieces, 0), 4), NonIntegerValue);
}

TEST(QuasiPolynomial, RejectsWrongPieceCount) {
  EXPECT_THROW(QuasiPolynomial(CoinSet{2, 3}, std::vector<Polynomial>(5), 0), std::invalid_argument);
}

TEST(Decompose, QuarterSet) {
  const Decomposition dec = decompose(build_quasi_polynomial(CoinSet{1, 5, 10, 25}));
  ASSERT_EQ(dec.shared().size(), 5u);
  ASSERT_EQ(dec.offsets().size(), 50u);
  EXPECT_EQ(dec.offsets()[0], q(1));
  for (const auto& s : dec.shared()) EXPECT_EQ(constant_term(s), q(0));
}

TEST(Decompose, RebuildsEveryPiece) {
  for (const CoinSet& cs : {CoinSet{2, 3, 4}, CoinSet{3, 5, 6}, CoinSet{1, 4, 6, 11}, CoinSet{6, 10, 15}}) {
    const QuasiPolynomial qp = build_quasi_polynomial(cs);
    const Decomposition dec = decompose(qp);
    ASSERT_EQ(dec.shared().size(), cs.shared_period());
    for (std::uint64_t r = 0; r < qp.period(); ++r) {
      EXPECT_EQ(dec.piece(r), qp.piece(r)) << cs.to_string() << " r=" << r;
      EXPECT_EQ(dec.offsets()[r], constant_term(qp.piece(r)));
    }
  }
}

TEST(Decompose, DetectsBrokenSharing) {
  const QuasiPolynomial good = build_quasi_polynomial(CoinSet{2, 3, 4});
  std::vector<Polynomial> pieces(good.pieces().begin(), good.pieces().end());
  pieces[5] += Polynomial({q(0), q(1, 1000)});
  try {
    decompose(QuasiPolynomial(CoinSet{2, 3, 4}, pieces, 0));
    FAIL() << "no exception";
  } catch (const DecompositionMismatch& e) {
    EXPECT_EQ(e.residue(), 5u);
    EXPECT_EQ(e.power(), 1u);
  }
}

TEST(Decomposition, RejectsConstantInSharedPart) {
  EXPECT_THROW(Decomposition(CoinSet{2, 3}, {Polynomial::constant(q(1))}, std::vector<Rational>(6)),
               std::invalid_argument);
}

TEST(LeadingCoefficient, KnownValues) {
  EXPECT_EQ(expected_leading_coefficient(CoinSet{1, 5, 10, 25}), q(1, 7500));
  EXPECT_EQ(expected_leading_coefficient(CoinSet{3, 5, 6}), q(1, 180));
  EXPECT_EQ(expected_leading_coefficient(CoinSet{1, 19, 19, 20}), q(1, 43320));
  EXPECT_EQ(expected_leading_coefficient(CoinSet{2, 4, 6}), q(1, 12));
  EXPECT_EQ(leading_coefficient_check(build_quasi_polynomial(CoinSet{1, 5, 10, 25})), q(1, 7500));
  EXPECT_EQ(leading_coefficient_check(build_quasi_polynomial(CoinSet{2, 4, 6})), q(1, 12));
}

TEST(LeadingCoefficient, DetectsWrongLeadingTerm) {
  const QuasiPolynomial good = build_quasi_polynomial(CoinSet{2, 3, 4});
  std::vector<Polynomial> pieces(good.pieces().begin(), good.pieces().end());
  pieces[7] += Polynomial({q(0), q(0), q(1, 48)});
  try {
    leading_coefficient_check(QuasiPolynomial(CoinSet{2, 3, 4}, pieces, 0));
    FAIL() << "no exception";
  } catch (const LeadingCoefficientMismatch& e) {
    EXPECT_EQ(e.residue(), 7u);
    EXPECT_EQ(e.found(), "1/24");
  }
  pieces[7] = Polynomial({q(1), q(1)});
  EXPECT_THROW(leading_coefficient_check(QuasiPolynomial(CoinSet{2, 3, 4}, pieces, 0)), LeadingCoefficientMismatch);
}

TEST(BuildQuasiProperty, RandomSetsSweep) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const CoinSet cs(oracle::random_coins(rng, 1 + rng() % 4, 14));
    const QuasiPolynomial qp = build_quasi_polynomial(cs);
    const Decomposition dec = decompose(qp);
    const Rational lead = leading_coefficient_check(qp);
    EXPECT_EQ(lead, expected_leading_coefficient(cs));
    const std::uint64_t upto = 3 * cs.period() * cs.common_divisor();
    const CountTable t = count_range(cs, upto);
    for (std::uint64_t n = 0; n <= upto; ++n) {
      ASSERT_EQ(evaluate_quasi(qp, n), t.counts[n]) << cs.to_string() << " n=" << n;
      ASSERT_EQ(evaluate_decomposed(dec, n), t.counts[n]) << cs.to_string() << " n=" << n;
    }
    for (const auto& p : qp.pieces()) EXPECT_EQ(p.degree(), static_cast<int>(cs.size()) - 1) << cs.to_string();
  }
}

TEST(BuildQuasiProperty, ExtraChecksDoNotChangeThePieces) {
  const CoinSet cs{3, 5, 6};
  const QuasiPolynomial a = build_quasi_polynomial(cs, 0);
  const QuasiPolynomial b = build_quasi_polynomial(cs, 10);
  for (std::uint64_t r = 0; r < cs.period(); ++r) EXPECT_EQ(a.piece(r), b.piece(r));
  EXPECT_LT(a.verified_upto(), b.verified_upto());
}
