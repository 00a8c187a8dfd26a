#include "denumerant/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "denumerant/conjecture_lab.hpp"
#include "denumerant/denumerant_oracle.hpp"
#include "denumerant/error.hpp"
#include "denumerant/golden.hpp"
#include "denumerant/latex.hpp"
#include "denumerant/quasi_poly.hpp"
#include "denumerant/serialize.hpp"

namespace denumerant {

namespace {

constexpr std::uint64_t kMaxDenomination = 0xFFFFFFFFull;
constexpr std::size_t kMaxCoins = 16;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kMismatch = 2;

CoinSet cli_coins(const std::string& text) {
  CoinSet coins = parse_coin_list(text);
  if (coins.size() > kMaxCoins)
    throw ParseError("at most " + std::to_string(kMaxCoins) + " denominations are accepted, got " +
                     std::to_string(coins.size()));
  for (auto a : coins.denominations())
    if (a > kMaxDenomination) throw ParseError("denomination " + std::to_string(a) + " exceeds 2^32-1");
  return coins;
}

int verify_appendices(const std::string& which, const std::string& dir_flag, std::ostream& out,
                      std::ostream& err) {
  const std::filesystem::path dir = dir_flag.empty() ? default_golden_dir() : std::filesystem::path(dir_flag);
  std::string letters;
  if (which == "all") {
    letters = kAppendices;
  } else if (which.size() == 1 && kAppendices.find(which.front()) != std::string_view::npos) {
    letters = which;
  } else {
    err << "error: --which must be one of A..J or all, got '" << which << "'\n";
    return kBadInput;
  }

  bool all_ok = true;
  for (char letter : letters) {
    const GoldenTable golden = load_golden(dir, letter);
    const GoldenDiff diff = rebuild_and_diff(golden);
    out << "Appendix " << letter << " {" << golden.coins.to_string() << "}: " << diff.rows_matching << "/"
        << diff.rows_total << " polynomials match\n";
    for (const auto& note : diff.notes) out << "  note: " << note << '\n';
    for (const auto& m : diff.mismatches) out << "  mismatch: " << m.describe() << '\n';
    all_ok = all_ok && diff.ok();
  }
  return all_ok ? kOk : kMismatch;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coin-change counting and its quasi-polynomial form", "denumerant"};
  app.require_subcommand(1);

  std::string coins_text;
  std::string table_format = "csv";
  std::string interp_format = "text";
  std::string decomp_format = "text";
  std::string conj_format = "text";
  std::uint64_t n = 0;
  std::uint64_t max_n = 0;
  std::uint64_t extra_checks = 0;
  std::string batch_file;
  std::string bound_text;
  std::string which;
  std::string golden_dir;

  auto* count = app.add_subcommand("count", "Print CH(n)");
  count->add_option("--coins", coins_text, "Comma-separated denominations")->required();
  count->add_option("--n", n, "Amount")->required();

  auto* table = app.add_subcommand("table", "CH(n) for 0 <= n <= max");
  table->add_option("--coins", coins_text)->required();
  table->add_option("--max", max_n)->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  auto* interp = app.add_subcommand("interpolate", "Build every piece h_r");
  interp->add_option("--coins", coins_text)->required();
  auto* extra_opt = interp->add_option("--extra-checks", extra_checks, "Oracle checks per residue (default L)");
  interp->add_option("--format", interp_format)->check(CLI::IsMember({"json", "latex", "text"}));

  auto* decomp = app.add_subcommand("decompose", "Shared parts h'_r and offsets b_r");
  decomp->add_option("--coins", coins_text)->required();
  decomp->add_option("--format", decomp_format)->check(CLI::IsMember({"json", "latex", "text"}));

  auto* frob = app.add_subcommand("frobenius", "Largest amount with no change");
  frob->add_option("--coins", coins_text)->required();

  auto* conj = app.add_subcommand("conjectures", "Positivity, integrality and offset scans");
  auto* conj_coins = conj->add_option("--coins", coins_text);
  auto* conj_batch = conj->add_option("--batch", batch_file, "File with one coin list per line");
  conj_coins->excludes(conj_batch);
  conj->add_option("--bound", bound_text, "Flag whether every b lies in [-B, B]");
  conj->add_option("--format", conj_format)->check(CLI::IsMember({"json", "text", "csv"}));

  auto* verify = app.add_subcommand("verify-appendix", "Rebuild and diff against the bundled tables");
  verify->add_option("--which", which, "A..J or all")->required();
  verify->add_option("--golden-dir", golden_dir, "Directory holding appendix_<X>.tex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*count) {
      out << count_change(cli_coins(coins_text), n).get_str() << '\n';
    } else if (*table) {
      const CountTable t = count_range(cli_coins(coins_text), max_n);
      out << (table_format == "json" ? dump(to_json(t)) : to_csv(t));
    } else if (*interp) {
      std::optional<std::uint64_t> checks;
      if (*extra_opt) checks = extra_checks;
      const QuasiPolynomial q = build_quasi_polynomial(cli_coins(coins_text), checks);
      leading_coefficient_check(q);
      if (interp_format == "json") out << dump(to_json(q));
      else if (interp_format == "latex") out << emit_latex(q);
      else out << to_text(q);
    } else if (*decomp) {
      const Decomposition dec = decompose(build_quasi_polynomial(cli_coins(coins_text)));
      if (decomp_format == "json") out << dump(to_json(dec));
      else if (decomp_format == "latex") out << emit_latex(dec);
      else out << to_text(dec);
    } else if (*frob) {
      const auto f = frobenius(cli_coins(coins_text));
      out << (f ? std::to_string(*f) : std::string("none")) << '\n';
    } else if (*conj) {
      std::vector<CoinSet> sets;
      if (!batch_file.empty()) {
        std::ifstream in(batch_file);
        if (!in) throw ParseError("cannot read batch file " + batch_file);
        sets = parse_batch(in);
      } else if (!coins_text.empty()) {
        sets.push_back(cli_coins(coins_text));
      } else {
        err << "error: conjectures needs --coins or --batch\n";
        return kBadInput;
      }
      std::optional<OffsetBounds> bounds;
      if (!bound_text.empty()) {
        const Rational b = bound_text.find('/') != std::string::npos ? Rational::parse(bound_text)
                                                                     : Rational::parse_decimal(bound_text);
        bounds = OffsetBounds{-b, b};
      }
      const BatchSummary batch = run_batch(sets, bounds);
      const bool single = batch_file.empty() && !bounds;
      if (conj_format == "json") out << dump(single ? to_json(batch.reports.front()) : to_json(batch));
      else if (conj_format == "csv") out << to_csv(batch);
      else out << (single ? to_text(batch.reports.front()) : to_text(batch));
    } else if (*verify) {
      return verify_appendices(which, golden_dir, out, err);
    }
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

} // namespace denumerant
