#include "denumerant/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "denumerant/error.hpp"
#include "denumerant/latex.hpp"
#include "denumerant/serialize.hpp"

#ifndef DENUMERANT_GOLDEN_DIR
#define DENUMERANT_GOLDEN_DIR "data/golden"
#endif

namespace denumerant {

namespace {

struct Family {
  std::string variable;
  std::uint64_t low;
  std::uint64_t high;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// "17" -> {17}; "19k+17" with k in [0,19] -> {17, 36, ..., 378}
std::vector<std::pair<std::string, std::uint64_t>> expand_label(const std::string& label,
                                                                const std::optional<Family>& family,
                                                                const std::string& origin) {
  static const std::regex plain(R"(\d+)");
  static const std::regex scaled(R"((\d*)([a-z])(?:\+(\d+))?)");
  std::smatch m;
  if (std::regex_match(label, m, plain)) return {{label, std::stoull(label)}};
  if (!std::regex_match(label, m, scaled) || !family || m[2].str() != family->variable)
    throw ParseError(origin + ": unsupported row label '" + label + "'");
  const std::uint64_t mul = m[1].length() ? std::stoull(m[1].str()) : 1;
  const std::uint64_t add = m[3].matched ? std::stoull(m[3].str()) : 0;
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (std::uint64_t k = family->low; k <= family->high; ++k)
    out.emplace_back(label + ", " + family->variable + "=" + std::to_string(k), mul * k + add);
  return out;
}

Polynomial comparable(const Polynomial& p, GoldenKind kind) {
  return kind == GoldenKind::Shared ? drop_constant(p) : p;
}

void add_coefficient_mismatches(std::vector<GoldenMismatch>& out, GoldenMismatch::Kind kind,
                                const std::string& label, std::uint64_t residue, const Polynomial& expected,
                                const Polynomial& got) {
  const auto n = std::max(expected.coefficients().size(), got.coefficients().size());
  for (std::size_t power = 0; power < n; ++power) {
    if (expected.coefficient(power) != got.coefficient(power))
      out.push_back({kind, label, residue, power, expected.coefficient(power), got.coefficient(power)});
  }
}

} // namespace

std::string GoldenMismatch::describe() const {
  std::ostringstream os;
  if (kind == Kind::FoldConflict) {
    os << "row h_{" << label << "} folds onto residue " << residue << " but differs at x^" << power << ": "
       << expected << " vs " << got;
  } else {
    os << "residue " << residue << " (row h_{" << label << "}) x^" << power << ": golden " << expected
       << ", rebuilt " << got;
  }
  return os.str();
}

GoldenTable parse_golden(const std::string& text, const std::string& origin) {
  static const std::regex row(R"(h_\{([^}]*)\}('?)\(x\)\s*=\s*(.*))");
  std::optional<char> source;
  std::optional<CoinSet> coins;
  std::optional<GoldenKind> kind;
  std::optional<Family> family;
  std::vector<std::pair<std::string, Polynomial>> raw_rows;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::smatch m;
    if (std::regex_match(line, m, row)) {
      try {
        raw_rows.emplace_back(m[1].str(), parse_latex_polynomial(m[3].str()));
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
      }
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(where + ": unrecognized line '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "appendix" && value.size() == 1) {
      source = value.front();
    } else if (key == "coins") {
      coins = parse_coin_list(value);
    } else if (key == "table" && (value == "h" || value == "h_prime")) {
      kind = value == "h" ? GoldenKind::Pieces : GoldenKind::Shared;
    } else if (key == "family") {
      std::istringstream fs(value);
      Family f;
      if (!(fs >> f.variable >> f.low >> f.high) || f.variable.size() != 1 || f.low > f.high)
        throw ParseError(where + ": family needs '<var> <low> <high>'");
      family = f;
    } else {
      throw ParseError(where + ": unknown header '" + line + "'");
    }
  }
  if (!source || !coins || !kind) throw ParseError(origin + ": missing appendix/coins/table header");

  GoldenTable table{.source = *source, .coins = *coins, .kind = *kind};
  const std::uint64_t modulus = table.modulus();
  for (auto& [label, poly] : raw_rows) {
    for (auto& [name, printed] : expand_label(label, family, origin)) {
      const std::uint64_t residue = printed % modulus;
      table.rows.push_back({name, printed, poly});
      auto [it, fresh] = table.entries.emplace(residue, poly);
      if (!fresh) {
        const Polynomial before = comparable(it->second, table.kind);
        const Polynomial after = comparable(poly, table.kind);
        if (int p = first_difference(before, after); p >= 0)
          table.fold_conflicts.push_back({GoldenMismatch::Kind::FoldConflict, name, residue,
                                          static_cast<std::size_t>(p), before.coefficient(p),
                                          after.coefficient(p)});
      }
    }
  }
  return table;
}

GoldenTable load_golden(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingGoldenFile(file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_golden(buf.str(), file.filename().string());
}

GoldenTable load_golden(const std::filesystem::path& dir, char which) {
  return load_golden(dir / (std::string("appendix_") + which + ".tex"));
}

GoldenDiff diff_golden(const GoldenTable& golden, const QuasiPolynomial& q, const Decomposition& dec) {
  if (!(golden.coins == q.coins()) || !(golden.coins == dec.coins()))
    throw std::invalid_argument("golden table for " + golden.coins.to_string() + " compared against " +
                                q.coins().to_string());
  auto rebuilt = [&](std::uint64_t residue) -> Polynomial {
    return golden.kind == GoldenKind::Pieces ? q.piece(residue) : dec.shared()[residue];
  };

  GoldenDiff diff;
  diff.rows_total = golden.rows.size();
  const std::uint64_t modulus = golden.modulus();
  for (const auto& row : golden.rows) {
    if (comparable(row.poly, golden.kind) == rebuilt(row.printed % modulus)) ++diff.rows_matching;
    if (golden.kind == GoldenKind::Shared && !constant_term(row.poly).is_zero())
      diff.notes.push_back("h'_{" + row.label + "} is printed with constant term " +
                           constant_term(row.poly).to_string() + "; compared without it");
  }
  diff.mismatches = golden.fold_conflicts;
  for (const auto& [residue, poly] : golden.entries) {
    std::string label;
    for (const auto& row : golden.rows)
      if (row.printed % modulus == residue) {
        label = row.label;
        break;
      }
    add_coefficient_mismatches(diff.mismatches, GoldenMismatch::Kind::Coefficient, label, residue,
                               comparable(poly, golden.kind), rebuilt(residue));
  }
  return diff;
}

GoldenDiff rebuild_and_diff(const GoldenTable& golden) {
  const QuasiPolynomial q = build_quasi_polynomial(golden.coins);
  return diff_golden(golden, q, decompose(q));
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("DENUMERANT_GOLDEN_DIR"); env && *env) return env;
  return DENUMERANT_GOLDEN_DIR;
}

} // namespace denumerant
