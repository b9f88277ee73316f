#include "narayana/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "narayana/analysis.hpp"
#include "narayana/bijections.hpp"
#include "narayana/cache.hpp"
#include "narayana/errors.hpp"
#include "narayana/generating.hpp"
#include "narayana/lattice_word.hpp"
#include "narayana/poset.hpp"
#include "narayana/poset_io.hpp"
#include "narayana/tableau.hpp"

namespace narayana::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalSettings {
  int jobs = 0;
  bool no_cache = false;
  std::string cache_path = ".narayana-cache.json";
  int cell_budget = ComputeOptions{}.max_cells;
  int poset_budget = ComputeOptions{}.max_poset_elements;
  int brute_force_budget = ComputeOptions{}.max_brute_force_elements;

  ComputeOptions compute() const {
    ComputeOptions o;
    o.max_cells = cell_budget;
    o.max_poset_elements = poset_budget;
    o.max_brute_force_elements = brute_force_budget;
    o.jobs = jobs;
    return o;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json coefficient_array(const IntPolynomial& p) {
  auto array = ordered_json::array();
  for (const auto& c : p.coefficients()) array.push_back(c.get_str());
  return array;
}

ordered_json verification_flags(const PolynomialAnalysis& a) {
  ordered_json flags;
  flags["real_rooted"] = a.roots.real_rooted;
  flags["log_concave"] = a.log_concave.holds;
  flags["unimodal"] = a.unimodal.holds;
  flags["newton"] = a.newton.holds;
  return flags;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

/// Looks `key` up in the cache (unless disabled), computing and storing on a miss.
IntPolynomial cached_polynomial(const GlobalSettings& settings, const std::string& key,
                                const std::function<IntPolynomial()>& compute, std::ostream& err) {
  if (settings.no_cache) return compute();
  PolynomialCache cache(settings.cache_path);
  for (const auto& w : cache.warnings()) err << "warning: " << w << '\n';
  if (auto hit = cache.find(key)) return hit->polynomial;
  IntPolynomial p = compute();
  ordered_json flags = p.is_zero() ? ordered_json::object() : verification_flags(analyze(p));
  cache.put(CacheEntry{key, p, make_cache_metadata(std::move(flags))});
  try {
    cache.save();
  } catch (const std::exception& e) {
    err << "warning: could not write cache: " << e.what() << '\n';
  }
  return p;
}

void emit_polynomial_json(std::ostream& out, ordered_json doc, const IntPolynomial& p) {
  const PolynomialAnalysis a = analyze(p);
  doc["coefficients"] = coefficient_array(p);
  doc["degree"] = p.degree();
  const ordered_json flags = verification_flags(a);
  for (const auto& [k, v] : flags.items()) doc[k] = v;
  doc["distinct_real_roots"] = a.roots.distinct_real_roots;
  out << doc.dump(2) << '\n';
}

// ---- poly -------------------------------------------------------------------

struct PolyArgs {
  int n = 0;
  int m = 0;
  std::string format = "plain";
};

int cmd_poly(const GlobalSettings& settings, const PolyArgs& args, std::ostream& out,
             std::ostream& err) {
  const ComputeOptions options = settings.compute();
  check_cell_budget(static_cast<long long>(args.n) * args.m, options);
  const IntPolynomial p =
      cached_polynomial(settings, PolynomialCache::narayana_key(args.n, args.m),
                        [&] { return narayana_polynomial(args.n, args.m, options); }, err);
  const BigInt catalan = rectangular_catalan(args.n, args.m);
  if (args.format == "plain") {
    out << p.join(" ") << '\n';
  } else if (args.format == "csv") {
    out << "n,m,k,coefficient\n";
    for (int k = 0; k <= p.degree(); ++k) {
      out << args.n << ',' << args.m << ',' << k << ',' << p.coefficient(k).get_str() << '\n';
    }
  } else {
    ordered_json doc;
    doc["n"] = args.n;
    doc["m"] = args.m;
    doc["catalan"] = catalan.get_str();
    emit_polynomial_json(out, std::move(doc), p);
  }
  return kSuccess;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int max_cells = 12;
};

struct SuiteOutcome {
  int cases = 0;
  int failures = 0;
  std::optional<std::string> first_counterexample;

  void record(bool holds, const std::string& line, std::ostream& out) {
    ++cases;
    out << line << '\n';
    if (!holds) {
      ++failures;
      if (!first_counterexample) first_counterexample = line;
    }
  }
};

std::vector<std::pair<int, int>> rectangle_cases(int max_cells) {
  std::vector<std::pair<int, int>> cases;
  for (int cells = 1; cells <= max_cells; ++cells) {
    for (int n = 1; n <= cells; ++n) {
      if (cells % n == 0) cases.emplace_back(n, cells / n);
    }
  }
  return cases;
}

int clamp_suite(const std::string& suite, int requested, int cap, bool explicit_suite,
                std::ostream& out) {
  if (requested <= cap) return requested;
  if (explicit_suite) throw BudgetExceeded(suite + " --max-cells hard cap", cap, requested);
  out << "note: " << suite << " limited to " << cap << " cells\n";
  return cap;
}

void run_suite(const std::string& suite, int max_cells, const ComputeOptions& options,
               SuiteOutcome& outcome, std::ostream& out) {
  if (suite == "theorem21") {
    for (auto [n, m] : rectangle_cases(max_cells)) {
      const auto r = verify_main_theorem(n, m, options);
      outcome.record(r.holds, r.describe(), out);
    }
  } else if (suite == "sulanke") {
    for (auto [n, m] : rectangle_cases(max_cells)) {
      const auto r = verify_sulanke(n, m, options);
      outcome.record(r.holds, r.describe(), out);
    }
  } else if (suite == "realrooted") {
    for (auto [n, m] : rectangle_cases(max_cells)) {
      const PolynomialAnalysis a = analyze(narayana_polynomial(n, m, options));
      const auto broken = implication_chain_violation(a);
      const bool holds = a.roots.real_rooted && a.newton.holds && a.log_concave.holds &&
                         a.unimodal.holds && !broken;
      std::ostringstream line;
      line << "realrooted n=" << n << ",m=" << m << (holds ? " PASS" : " FAIL")
           << " distinct_real_roots=" << a.roots.distinct_real_roots
           << " square_free_degree=" << a.roots.square_free_degree
           << " newton=" << bool_text(a.newton.holds)
           << " log_concave=" << bool_text(a.log_concave.holds)
           << " unimodal=" << bool_text(a.unimodal.holds);
      if (broken) line << " broken_link=\"" << *broken << '"';
      outcome.record(holds, line.str(), out);
    }
  } else if (suite == "eq33") {
    for (const auto& shape : partitions_up_to(max_cells)) {
      auto r = verify_ferrers_eulerian(shape, {}, options);
      const bool real = is_real_rooted(r.lhs);
      outcome.record(r.holds && real, r.describe() + " real_rooted=" + bool_text(real), out);
    }
  } else if (suite == "ordergf") {
    constexpr int kTerms = 10;
    for (const auto& shape : partitions_up_to(max_cells)) {
      const auto r = verify_order_gf(column_strict_ferrers_poset(shape), kTerms, options);
      outcome.record(r.holds, r.describe("shape=" + shape.to_string()), out);
    }
    const auto r = verify_order_gf(LabeledPoset::antichain(3), kTerms, options);
    outcome.record(r.holds, r.describe("antichain=3"), out);
  }
}

int cmd_verify(const GlobalSettings& settings, const VerifyArgs& args, std::ostream& out,
               std::ostream& err) {
  const ComputeOptions options = settings.compute();
  const bool explicit_suite = args.suite != "all";
  const std::vector<std::string> suites =
      explicit_suite ? std::vector<std::string>{args.suite}
                     : std::vector<std::string>{"theorem21", "sulanke", "realrooted", "eq33", "ordergf"};
  auto cap_for = [&](const std::string& suite) {
    if (suite == "eq33") return std::min(options.max_cells, options.max_poset_elements);
    if (suite == "ordergf") return options.max_brute_force_elements;
    return options.max_cells;
  };
  SuiteOutcome outcome;
  for (const auto& suite : suites) {
    const int k = clamp_suite(suite, args.max_cells, cap_for(suite), explicit_suite, out);
    run_suite(suite, k, options, outcome, out);
  }
  out << "summary: suite=" << args.suite << " max_cells=" << args.max_cells
      << " cases=" << outcome.cases << " failed=" << outcome.failures << '\n';
  if (outcome.first_counterexample) {
    err << "counterexample: " << *outcome.first_counterexample << '\n';
    return kCounterexample;
  }
  return kSuccess;
}

// ---- analyze ----------------------------------------------------------------

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty coefficient in --coeffs");
    item = item.substr(first, last - first + 1);
    if (item.front() == '+') item.erase(0, 1);
    BigInt value;
    if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos ||
        value.set_str(item, 10) != 0) {
      throw UsageError("cannot parse coefficient '" + item + "'");
    }
    coeffs.push_back(std::move(value));
  }
  if (coeffs.empty()) throw UsageError("--coeffs needs at least one coefficient");
  return IntPolynomial(std::move(coeffs));
}

int cmd_analyze(const std::string& coeffs, const std::string& format, std::ostream& out) {
  const IntPolynomial p = parse_coefficients(coeffs);
  if (p.is_zero()) throw UsageError("the zero polynomial has no root structure to analyze");
  const PolynomialAnalysis a = analyze(p);
  if (format == "json") {
    ordered_json doc;
    doc["coefficients"] = coefficient_array(p);
    doc["degree"] = p.degree();
    doc["real_rooted"] = a.roots.real_rooted;
    doc["distinct_real_roots"] = a.roots.distinct_real_roots;
    doc["square_free_degree"] = a.roots.square_free_degree;
    doc["log_concave"] = a.log_concave.holds;
    doc["unimodal"] = a.unimodal.holds;
    doc["newton"] = a.newton.holds;
    doc["nonnegative"] = a.nonnegative_coefficients;
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  out << "polynomial=" << p.to_string() << '\n'
      << "degree=" << p.degree() << '\n'
      << "real_rooted=" << bool_text(a.roots.real_rooted) << '\n'
      << "distinct_real_roots=" << a.roots.distinct_real_roots << '\n'
      << "square_free_degree=" << a.roots.square_free_degree << '\n'
      << "log_concave=" << bool_text(a.log_concave.holds) << '\n'
      << "unimodal=" << bool_text(a.unimodal.holds) << '\n'
      << "newton=" << bool_text(a.newton.holds) << '\n'
      << "nonnegative=" << bool_text(a.nonnegative_coefficients) << '\n';
  if (!a.log_concave.warning.empty()) out << "warning=" << a.log_concave.warning << '\n';
  return kSuccess;
}

// ---- enumerate ----------------------------------------------------------------

struct EnumerateArgs {
  std::string kind = "words";
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> shape;
  long long limit = 0;
};

int cmd_enumerate(const GlobalSettings& settings, const EnumerateArgs& args, std::ostream& out) {
  const ComputeOptions options = settings.compute();
  long long emitted = 0;
  auto keep_going = [&] { return args.limit <= 0 || emitted < args.limit; };
  auto need_rectangle = [&] {
    if (!args.n || !args.m) throw UsageError("--kind " + args.kind + " needs --n and --m");
  };
  if (args.kind == "words") {
    need_rectangle();
    for_each_lattice_word(
        *args.n, *args.m,
        [&](const LatticeWord& w) {
          if (!keep_going()) return false;
          out << w.to_string() << '\n';
          ++emitted;
          return true;
        },
        options);
  } else if (args.kind == "paths") {
    need_rectangle();
    for_each_ballot_path(
        *args.n, *args.m,
        [&](const BallotPath& p) {
          if (!keep_going()) return false;
          out << p.to_string() << '\n';
          ++emitted;
          return true;
        },
        options);
  } else {
    Partition shape;
    if (args.shape) {
      shape = Partition::parse(*args.shape);
    } else {
      need_rectangle();
      shape = Partition::rectangle(*args.m, *args.n);
    }
    for_each_syt(
        shape,
        [&](const StandardTableau& t) {
          if (!keep_going()) return false;
          out << t.to_string() << '\n';
          ++emitted;
          return true;
        },
        options);
  }
  return kSuccess;
}

// ---- wpoly ----------------------------------------------------------------

struct WpolyArgs {
  std::optional<std::string> poset_file;
  std::optional<std::string> shape;
  std::optional<std::string> labeling;
  std::string format = "plain";
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse integer '" + item + "'");
    }
  }
  return values;
}

int cmd_wpoly(const GlobalSettings& settings, const WpolyArgs& args, std::ostream& out,
              std::ostream& err) {
  const ComputeOptions options = settings.compute();
  if (args.poset_file.has_value() == args.shape.has_value()) {
    throw UsageError("wpoly needs exactly one of --poset or --shape");
  }
  LabeledPoset poset = args.poset_file ? load_poset(*args.poset_file)
                                       : column_strict_ferrers_poset(Partition::parse(*args.shape));
  if (args.labeling) poset = poset.with_labeling(parse_int_list(*args.labeling));
  if (poset.size() > options.max_poset_elements) {
    throw BudgetExceeded("poset size budget (max_poset_elements)", options.max_poset_elements,
                         poset.size());
  }
  const IntPolynomial w = cached_polynomial(settings, PolynomialCache::wpoly_key(poset),
                                            [&] { return w_polynomial(poset, options); }, err);
  if (args.format == "plain") {
    out << w.join(" ") << '\n';
    return kSuccess;
  }
  ordered_json doc;
  doc["poset_hash"] = poset.hash();
  doc["size"] = poset.size();
  doc["natural_labeling"] = poset.is_natural();
  emit_polynomial_json(out, std::move(doc), w);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rectangular Narayana polynomials: computation, identity checks and real-rootedness"};
  app.name("narayana");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Optional config file (TOML/INI, same keys as the flags)");

  GlobalSettings settings;
  app.add_option("--jobs", settings.jobs, "Worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--no-cache", settings.no_cache, "Do not read or write the polynomial cache");
  app.add_option("--cache", settings.cache_path, "Cache file path")
      ->envname("NARAYANA_CACHE")
      ->capture_default_str();
  app.add_option("--cell-budget", settings.cell_budget, "Largest n*m / |shape| to enumerate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--poset-budget", settings.poset_budget, "Largest poset for linear extensions")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  app.add_option("--brute-force-budget", settings.brute_force_budget,
                 "Largest poset for exhaustive order-polynomial counting")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Print the coefficients of N(n,m;t)");
  poly_cmd->add_option("--n", poly.n, "Occurrences of each symbol")->required()->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--m", poly.m, "Alphabet size")->required()->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--format", poly.format)->check(CLI::IsMember({"plain", "json", "csv"}))->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities exhaustively up to a cell count");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"theorem21", "sulanke", "realrooted", "eq33", "ordergf", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-cells", verify.max_cells)->check(CLI::NonNegativeNumber)->capture_default_str();

  std::string coeffs;
  std::string analyze_format = "plain";
  auto* analyze_cmd = app.add_subcommand("analyze", "Real-rootedness and coefficient checks");
  analyze_cmd->add_option("--coeffs", coeffs, "Coefficients c0,c1,... lowest degree first")->required();
  analyze_cmd->add_option("--format", analyze_format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream words, tableaux or ballot paths");
  enumerate_cmd->add_option("--kind", enumerate.kind)
      ->check(CLI::IsMember({"words", "syt", "paths"}))
      ->capture_default_str();
  enumerate_cmd->add_option("--n", enumerate.n)->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--m", enumerate.m)->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--shape", enumerate.shape, "Partition such as 4,2,1 (syt only)");
  enumerate_cmd->add_option("--limit", enumerate.limit, "Stop after this many items (0 = all)")
      ->check(CLI::NonNegativeNumber);

  WpolyArgs wpoly;
  auto* wpoly_cmd = app.add_subcommand("wpoly", "W(P,omega;t) of a labeled poset");
  wpoly_cmd->add_option("--poset", wpoly.poset_file, "Poset file (JSON or text)");
  wpoly_cmd->add_option("--shape", wpoly.shape, "Ferrers poset with the column-strict labeling");
  wpoly_cmd->add_option("--labeling", wpoly.labeling, "Override labeling omega(1),...,omega(p)");
  wpoly_cmd->add_option("--format", wpoly.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (poly_cmd->parsed()) return cmd_poly(settings, poly, out, err);
    if (verify_cmd->parsed()) return cmd_verify(settings, verify, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(coeffs, analyze_format, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(settings, enumerate, out);
    if (wpoly_cmd->parsed()) return cmd_wpoly(settings, wpoly, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {  // ValidationError, ShapeError
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace narayana::cli
