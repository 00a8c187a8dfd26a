#pragma once

/**
 * JSON, CSV and plain-text forms of the library's values.
 *
 * Rationals travel as lowest-terms "num/den" strings and big counts as
 * decimal strings, so no consumer ever sees a rounded number. Polynomials
 * are arrays of coefficients by ascending power. Keys keep schema order:
 *
 *   { "coins":[...], "d":.., "M":.., "M_prime":.., "polys":[[...],...], ... }
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "denumerant/coin_set.hpp"
#include "denumerant/conjecture_lab.hpp"
#include "denumerant/denumerant_oracle.hpp"
#include "denumerant/quasi_poly.hpp"

namespace denumerant {

using Json = nlohmann::ordered_json;

/// "1,5,10,25"; throws ParseError on anything else, plus the CoinSet errors.
CoinSet parse_coin_list(std::string_view text);

/// One coin list per line; blank lines and '#' comments skipped.
std::vector<CoinSet> parse_batch(std::istream& in);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const CountTable& table);
Json to_json(const QuasiPolynomial& q);
Json to_json(const Decomposition& dec);
Json to_json(const ConjectureReport& report);
Json to_json(const BatchSummary& batch);

// All throw ParseError on schema violations, including d/M/M_prime
// values that disagree with the listed coins.
CountTable count_table_from_json(const Json& j);
QuasiPolynomial quasi_polynomial_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);

/// Canonical textual form used for files and round-trip comparison.
std::string dump(const Json& j);

/// "n,count" header then one row per n.
std::string to_csv(const CountTable& table);
/// One row per coin set: coins, #neg-constant, #neg-nonconstant, b_min, b_max, spread, integrality violations.
std::string to_csv(const BatchSummary& batch);

std::string to_text(const QuasiPolynomial& q);
std::string to_text(const Decomposition& dec);
std::string to_text(const ConjectureReport& report);
std::string to_text(const BatchSummary& batch);

} // namespace denumerant
