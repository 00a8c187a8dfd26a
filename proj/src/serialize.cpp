#include "denumerant/serialize.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "denumerant/error.hpp"

namespace denumerant {

namespace {

Json coins_json(const CoinSet& coins) {
  Json arr = Json::array();
  for (auto a : coins.denominations()) arr.push_back(a);
  return arr;
}

void put_header(Json& j, const CoinSet& coins) {
  j["coins"] = coins_json(coins);
  j["d"] = coins.common_divisor();
  j["M"] = coins.period();
  j["M_prime"] = coins.shared_period();
}

template <typename Fn>
auto guarded(const char* what, Fn fn) {
  try {
    return fn();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

CoinSet coins_from_json(const Json& j) {
  std::vector<std::int64_t> denoms = j.at("coins").get<std::vector<std::int64_t>>();
  CoinSet coins(denoms);
  if (j.at("d").get<std::uint64_t>() != coins.common_divisor())
    throw ParseError("JSON field d disagrees with coins " + coins.to_string());
  return coins;
}

void check_periods(const Json& j, const CoinSet& coins) {
  if (j.at("M").get<std::uint64_t>() != coins.period() ||
      j.at("M_prime").get<std::uint64_t>() != coins.shared_period())
    throw ParseError("JSON fields M/M_prime disagree with coins " + coins.to_string());
}

Json polys_json(std::span<const Polynomial> polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(to_json(p));
  return arr;
}

std::vector<Polynomial> polys_from_json(const Json& j) {
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p));
  return out;
}

Json maybe_fraction(const std::optional<Rational>& r) {
  return r ? Json(r->to_fraction_string()) : Json(nullptr);
}

Json maybe_decimal(const std::optional<Rational>& r) {
  return r ? Json(r->to_decimal(kReportPlaces)) : Json(nullptr);
}

std::string exact_and_decimal(const Rational& r) {
  return r.to_string() + " (" + r.to_decimal(kReportPlaces) + ")";
}

std::string list_residues(const std::vector<std::uint64_t>& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) out += (i ? ", " : "") + std::to_string(rs[i]);
  return out + "]";
}

} // namespace

CoinSet parse_coin_list(std::string_view text) {
  std::vector<std::int64_t> denoms;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty() && comma == std::string_view::npos && denoms.empty()) break;
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw ParseError("bad coin denomination '" + std::string(item) + "' in '" + std::string(text) + "'");
    denoms.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return CoinSet(denoms);
}

std::vector<CoinSet> parse_batch(std::istream& in) {
  std::vector<CoinSet> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_coin_list(line));
  }
  return out;
}

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_fraction_string());
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(Rational::parse(c.get<std::string>()));
    Polynomial p(coeffs);
    if (p.coefficients().size() != coeffs.size())
      throw ParseError("polynomial JSON has trailing zero coefficients");
    return p;
  });
}

Json to_json(const CountTable& table) {
  Json j;
  j["coins"] = coins_json(table.coins);
  j["d"] = table.coins.common_divisor();
  j["upto"] = table.upto();
  Json counts = Json::array();
  for (const auto& c : table.counts) counts.push_back(c.get_str());
  j["counts"] = std::move(counts);
  return j;
}

CountTable count_table_from_json(const Json& j) {
  return guarded("count table", [&] {
    CountTable table{coins_from_json(j), {}};
    for (const auto& c : j.at("counts")) table.counts.emplace_back(c.get<std::string>(), 10);
    if (table.counts.empty() || table.upto() != j.at("upto").get<std::uint64_t>())
      throw ParseError("count table JSON: upto disagrees with the number of counts");
    return table;
  });
}

Json to_json(const QuasiPolynomial& q) {
  Json j;
  put_header(j, q.coins());
  j["verified_upto"] = q.verified_upto();
  j["polys"] = polys_json(q.pieces());
  return j;
}

QuasiPolynomial quasi_polynomial_from_json(const Json& j) {
  return guarded("quasi-polynomial", [&] {
    CoinSet coins = coins_from_json(j);
    check_periods(j, coins);
    return QuasiPolynomial(coins, polys_from_json(j.at("polys")), j.at("verified_upto").get<std::uint64_t>());
  });
}

Json to_json(const Decomposition& dec) {
  Json j;
  put_header(j, dec.coins());
  j["shared"] = polys_json(dec.shared());
  Json b = Json::array();
  for (const auto& r : dec.offsets()) b.push_back(r.to_fraction_string());
  j["b"] = std::move(b);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  return guarded("decomposition", [&] {
    CoinSet coins = coins_from_json(j);
    check_periods(j, coins);
    std::vector<Rational> offsets;
    for (const auto& b : j.at("b")) offsets.push_back(Rational::parse(b.get<std::string>()));
    return Decomposition(coins, polys_from_json(j.at("shared")), std::move(offsets));
  });
}

Json to_json(const ConjectureReport& report) {
  Json j;
  put_header(j, report.coins);
  j["residues"] = report.residue_count;

  Json pos;
  pos["negative_constant"] = report.negative_constant;
  Json neg = Json::array(), zero = Json::array();
  for (const auto& c : report.negative_nonconstant) neg.push_back({c.residue, c.power});
  for (const auto& c : report.zero_nonconstant) zero.push_back({c.residue, c.power});
  pos["negative_nonconstant"] = std::move(neg);
  pos["zero_nonconstant"] = std::move(zero);
  pos["negative_linear_count"] = report.negative_linear_count();
  pos["positive_nonconstant"] = report.positive_nonconstant();
  pos["nonnegative_nonconstant"] = report.nonnegative_nonconstant();
  j["positivity"] = std::move(pos);

  Json integ;
  integ["scale"] = report.integrality_scale.get_str();
  Json viol = Json::array();
  for (const auto& v : report.integrality_violations) {
    Json e;
    e["residue"] = v.residue;
    e["power"] = v.power;
    e["coefficient"] = v.coefficient.to_fraction_string();
    e["scaled"] = v.scaled.to_fraction_string();
    viol.push_back(std::move(e));
  }
  integ["violations"] = std::move(viol);
  j["integrality"] = std::move(integ);

  Json off;
  off["b_min"] = maybe_fraction(report.b_min);
  off["b_max"] = maybe_fraction(report.b_max);
  off["b_spread"] = maybe_fraction(report.b_spread);
  off["b_min_decimal"] = maybe_decimal(report.b_min);
  off["b_max_decimal"] = maybe_decimal(report.b_max);
  off["b_spread_decimal"] = maybe_decimal(report.b_spread);
  j["offsets"] = std::move(off);
  return j;
}

Json to_json(const BatchSummary& batch) {
  Json j;
  Json sets = Json::array();
  for (const auto& r : batch.reports) sets.push_back(to_json(r));
  j["sets"] = std::move(sets);
  j["b_min"] = batch.b_min.to_fraction_string();
  j["b_max"] = batch.b_max.to_fraction_string();
  j["narrowest_spread"] = batch.narrowest_spread.to_fraction_string();
  j["widest_spread"] = batch.widest_spread.to_fraction_string();
  j["b_min_decimal"] = batch.b_min.to_decimal(kReportPlaces);
  j["b_max_decimal"] = batch.b_max.to_decimal(kReportPlaces);
  j["narrowest_spread_decimal"] = batch.narrowest_spread.to_decimal(kReportPlaces);
  j["widest_spread_decimal"] = batch.widest_spread.to_decimal(kReportPlaces);
  if (batch.bounds) {
    Json b;
    b["low"] = batch.bounds->low.to_fraction_string();
    b["high"] = batch.bounds->high.to_fraction_string();
    j["bounds"] = std::move(b);
  } else {
    j["bounds"] = nullptr;
  }
  j["within_bounds"] = batch.within_bounds;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_csv(const CountTable& table) {
  std::ostringstream os;
  os << "n,count\n";
  for (std::size_t n = 0; n < table.counts.size(); ++n) os << n << ',' << table.counts[n].get_str() << '\n';
  return os.str();
}

std::string to_csv(const BatchSummary& batch) {
  std::ostringstream os;
  os << "coins,negative_constant,negative_nonconstant,b_min,b_max,spread,integrality_violations\n";
  for (const auto& r : batch.reports) {
    os << '"' << r.coins.to_string() << "\"," << r.negative_constant.size() << ','
       << r.negative_nonconstant.size() << ',' << r.b_min.value_or(Rational()) << ','
       << r.b_max.value_or(Rational()) << ',' << r.b_spread.value_or(Rational()) << ','
       << r.integrality_violations.size() << '\n';
  }
  return os.str();
}

std::string to_text(const QuasiPolynomial& q) {
  std::ostringstream os;
  const auto& cs = q.coins();
  os << "coins " << cs.to_string() << ": d=" << cs.common_divisor() << " M=" << cs.period()
     << " M'=" << cs.shared_period() << ", verified for n <= " << q.verified_upto() << '\n';
  for (std::uint64_t r = 0; r < q.period(); ++r) os << "h_" << r << "(x) = " << q.piece(r) << '\n';
  return os.str();
}

std::string to_text(const Decomposition& dec) {
  std::ostringstream os;
  const auto& cs = dec.coins();
  os << "coins " << cs.to_string() << ": d=" << cs.common_divisor() << " M=" << cs.period()
     << " M'=" << cs.shared_period() << '\n';
  for (std::size_t s = 0; s < dec.shared().size(); ++s) os << "h'_" << s << "(x) = " << dec.shared()[s] << '\n';
  for (std::size_t r = 0; r < dec.offsets().size(); ++r) os << "b_" << r << " = " << dec.offsets()[r] << '\n';
  auto report = b_spread_report(dec, cs);
  os << "smallest b = " << exact_and_decimal(*report.b_min) << ", largest b = " << exact_and_decimal(*report.b_max)
     << ", difference " << exact_and_decimal(*report.b_spread) << '\n';
  return os.str();
}

std::string to_text(const ConjectureReport& report) {
  std::ostringstream os;
  const auto& cs = report.coins;
  os << "coins " << cs.to_string() << " (d=" << cs.common_divisor() << ", M=" << cs.period()
     << ", M'=" << cs.shared_period() << ")\n";
  os << "  negative constant term: " << report.negative_constant.size() << " of " << report.residue_count
     << " residues " << list_residues(report.negative_constant) << '\n';
  os << "  negative non-constant coefficients: " << report.negative_nonconstant.size()
     << " (negative linear term in " << report.negative_linear_count() << " residues)\n";
  os << "  zero non-constant coefficients: " << report.zero_nonconstant.size() << '\n';
  os << "  non-constant coefficients positive: " << (report.positive_nonconstant() ? "yes" : "no")
     << ", nonnegative: " << (report.nonnegative_nonconstant() ? "yes" : "no") << '\n';
  os << "  integrality (scale " << report.integrality_scale.get_str()
     << "): " << report.integrality_violations.size() << " violations\n";
  for (const auto& v : report.integrality_violations)
    os << "    h_" << v.residue << " x^" << v.power << ": " << v.coefficient << " -> " << v.scaled << '\n';
  if (report.b_min)
    os << "  b: min " << exact_and_decimal(*report.b_min) << ", max " << exact_and_decimal(*report.b_max)
       << ", spread " << exact_and_decimal(*report.b_spread) << '\n';
  return os.str();
}

std::string to_text(const BatchSummary& batch) {
  std::ostringstream os;
  for (const auto& r : batch.reports) os << to_text(r);
  os << "all sets: b in [" << exact_and_decimal(batch.b_min) << ", " << exact_and_decimal(batch.b_max)
     << "], spreads from " << exact_and_decimal(batch.narrowest_spread) << " to "
     << exact_and_decimal(batch.widest_spread) << '\n';
  if (batch.bounds)
    os << "within [" << batch.bounds->low << ", " << batch.bounds->high
       << "]: " << (batch.within_bounds ? "yes" : "no") << '\n';
  return os.str();
}

} // namespace denumerant
