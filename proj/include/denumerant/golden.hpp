#pragma once

/**
 * Golden tables: appendix polynomials stored as text, one LaTeX row per
 * line with the residue label exactly as printed.
 *
 *   # free-form comment
 *   appendix: C
 *   coins: 2,3,4
 *   table: h            (pieces h_r, residues mod M)
 *        | h_prime      (shared parts h'_r, residues mod M')
 *   family: k 0 19      (optional; labels may then read "19k+17")
 *   h_{0}(x) = \frac{1}{48}x^{2} + \frac{1}{4}x + 1
 *
 * Rows whose label reaches past the modulus fold onto label mod modulus;
 * a fold that disagrees with the row already there is recorded, not
 * dropped. Shared tables are compared on non-constant coefficients only.
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "denumerant/coin_set.hpp"
#include "denumerant/exact_poly.hpp"
#include "denumerant/quasi_poly.hpp"

namespace denumerant {

enum class GoldenKind { Pieces, Shared };

struct GoldenRow {
  std::string label;     ///< as printed, e.g. "19k+17" expanded to "19k+17 (k=3)"
  std::uint64_t printed; ///< residue as printed, before folding
  Polynomial poly;
};

struct GoldenMismatch {
  enum class Kind { Coefficient, FoldConflict };

  Kind kind;
  std::string label;
  std::uint64_t residue;
  std::size_t power;
  Rational expected; ///< golden value (for folds, the row folded onto)
  Rational got;      ///< rebuilt value (for folds, the later duplicate row)

  std::string describe() const;
};

struct GoldenTable {
  char source = '?';
  CoinSet coins;
  GoldenKind kind = GoldenKind::Pieces;
  std::vector<GoldenRow> rows;
  std::map<std::uint64_t, Polynomial> entries;
  std::vector<GoldenMismatch> fold_conflicts;

  std::uint64_t modulus() const { return kind == GoldenKind::Pieces ? coins.period() : coins.shared_period(); }
};

struct GoldenDiff {
  std::size_t rows_total = 0;
  std::size_t rows_matching = 0;
  std::vector<GoldenMismatch> mismatches;
  std::vector<std::string> notes;

  bool ok() const { return mismatches.empty(); }
};

/// Throws MissingGoldenFile or ParseError.
GoldenTable load_golden(const std::filesystem::path& file);
/// appendix_<which>.tex inside `dir`.
GoldenTable load_golden(const std::filesystem::path& dir, char which);

GoldenTable parse_golden(const std::string& text, const std::string& origin = "<memory>");

/// Exact comparison of every folded entry plus the fold conflicts.
GoldenDiff diff_golden(const GoldenTable& golden, const QuasiPolynomial& q, const Decomposition& dec);

/// Builds and decomposes golden.coins, then diffs.
GoldenDiff rebuild_and_diff(const GoldenTable& golden);

/// Appendix letters that ship with the project.
inline constexpr std::string_view kAppendices = "ABCDEFGHIJ";

/// Where the bundled tables live unless overridden.
std::filesystem::path default_golden_dir();

} // namespace denumerant
