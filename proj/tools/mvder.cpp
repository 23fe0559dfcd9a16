// Command-line front end for finite MV-algebra and derivation analysis.
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error,
// 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvder/mvder.hpp"

namespace {

struct Settings {
  int max_elements = mvder::kDefaultMaxElements;
  std::int64_t max_search = 10'000'000;

  mvder::EnumerationOptions enum_options() const { return {max_search}; }
};

mvder::FiniteMvAlgebra eval_or_throw(const std::string& text, const Settings& s) {
  return mvder::eval_expr(mvder::parse_expr(text), s.max_elements);
}

int cmd_check(const std::string& expr_text, const Settings& s) {
  mvder::FiniteMvAlgebra a = eval_or_throw(expr_text, s);
  mvder::AxiomReport report = mvder::check_axioms(a);
  std::cout << "n: " << a.n << "\n";
  std::cout << "axioms: " << (report.passed ? "pass" : "FAIL") << "\n";
  if (!report.passed) {
    for (const auto& v : report.violations) {
      std::cout << "  " << v.axiom << " at";
      for (int w : v.witness) std::cout << " " << a.names[w];
      std::cout << "\n";
    }
  }
  mvder::Subset center = mvder::boolean_center(a);
  std::cout << "boolean center (" << center.count() << "):";
  for (int x : center.elements()) std::cout << " " << a.names[x];
  std::cout << "\n";
  std::cout << "ideals: " << mvder::ideals(a).size() << "\n";
  std::cout << "lattice ideals: " << mvder::lattice_ideals(a).size() << "\n";
  return report.passed ? 0 : 1;
}

int cmd_derivations(const std::string& expr_text, const std::string& filter,
                    const std::string& format, const Settings& s) {
  mvder::FiniteMvAlgebra a = eval_or_throw(expr_text, s);
  std::vector<mvder::DerivationRecord> records = mvder::enumerate_derivations(a, s.enum_options());
  auto keep = [&](const mvder::DerivationRecord& r) {
    if (filter.empty()) return true;
    if (filter == "principal") return r.is_principal;
    if (filter == "isotone") return r.is_isotone;
    if (filter == "ider") return r.in_ider;
    if (filter == "chi") return r.is_chi;
    if (filter == "idempotent") return r.is_idempotent;
    throw mvder::InvalidInput("unknown filter '" + filter + "'");
  };
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : records) {
      if (keep(r)) out.push_back(mvder::derivation_to_json(r));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (format != "table") throw mvder::InvalidInput("unknown format '" + format + "'");
  std::cout << "x:";
  for (const auto& name : a.names) std::cout << " " << name;
  std::cout << "\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!keep(records[i])) continue;
    std::cout << "d" << (i + 1) << ":";
    for (int x = 0; x < a.n; ++x) std::cout << " " << a.names[records[i].op(x)];
    std::cout << "\n";
  }
  return 0;
}

int cmd_count(const std::string& expr_text, const Settings& s) {
  mvder::AlgebraExpr expr = mvder::parse_expr(expr_text);
  mvder::FiniteMvAlgebra a = mvder::eval_expr(expr, s.max_elements);
  std::vector<mvder::Operator> ders = mvder::enumerate_derivation_operators(a, s.enum_options());
  std::cout << ders.size() << "\n";
  if (mvder::expr_is_chain(expr)) {
    const long long n = a.n;
    std::cout << "closed-form: " << (n - 1) * (n + 2) / 2 << "\n";
  }
  return 0;
}

int cmd_hasse(const std::string& expr_text, const std::string& family, const std::string& format,
              const Settings& s) {
  mvder::FiniteMvAlgebra a = eval_or_throw(expr_text, s);
  mvder::Poset poset;
  if (family == "der") {
    poset = mvder::derivation_poset(a, s.enum_options()).poset;
  } else if (family == "pder") {
    poset = mvder::pder_poset(a);
  } else if (family == "chi") {
    poset = mvder::chi_poset(a);
  } else if (family == "ider") {
    poset = mvder::ider_poset(a);
  } else {
    throw mvder::InvalidInput("unknown family '" + family + "'");
  }
  std::cout << mvder::export_hasse(poset, format);
  return 0;
}

int cmd_iso(const std::string& expr_text, const Settings& s) {
  mvder::AlgebraExpr expr = mvder::parse_expr(expr_text);
  mvder::FiniteMvAlgebra a = mvder::eval_expr(expr, s.max_elements);
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok, int elements) {
    std::cout << name << ": " << (ok ? "ok" : "FAIL") << " (" << elements << " elements)\n";
    all_ok = all_ok && ok;
  };

  mvder::DerivationPoset dp = mvder::derivation_poset(a, s.enum_options());
  if (mvder::expr_is_chain(expr)) {
    // Try the closed-form correspondence first: pair k of the pair lattice
    // maps to the derivation with the same images.
    mvder::Poset pairs = mvder::a_lattice(a.n);
    std::vector<mvder::Operator> closed = mvder::chain_derivations(a.n);
    std::vector<int> hint(closed.size(), -1);
    std::vector<mvder::Operator> ops;
    for (const auto& r : dp.records) ops.push_back(r.op);
    for (std::size_t k = 0; k < closed.size(); ++k) {
      auto it = std::lower_bound(ops.begin(), ops.end(), closed[k]);
      hint[k] = (it != ops.end() && *it == closed[k]) ? static_cast<int>(it - ops.begin()) : -1;
    }
    auto iso = mvder::find_lattice_isomorphism(pairs, dp.poset, &hint);
    line("Der~pairs", static_cast<bool>(iso), pairs.size());
  } else {
    std::cout << "Der~pairs: skipped (not a chain)\n";
  }
  {
    auto iso = mvder::find_lattice_isomorphism(mvder::pder_poset(a), mvder::algebra_lattice(a));
    line("PDer~L(A)", static_cast<bool>(iso), a.n);
  }
  {
    auto iso = mvder::find_lattice_isomorphism(mvder::chi_poset(a), mvder::algebra_lattice(a));
    line("chi~L(A)", static_cast<bool>(iso), a.n);
  }
  {
    mvder::Poset center = mvder::boolean_center_lattice(a);
    auto iso = mvder::find_lattice_isomorphism(mvder::ider_poset(a), center);
    line("IDer~B(A)", static_cast<bool>(iso), center.size());
  }
  {
    bool ok = mvder::chi_filter_check(a, s.enum_options());
    std::cout << "chi filter: " << (ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

int cmd_decompose(const std::string& path, const Settings& s) {
  std::ifstream in(path);
  if (!in) throw mvder::InvalidInput("cannot open input file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw mvder::InvalidInput("invalid JSON in '" + path + "': " + e.what());
  }
  mvder::FiniteMvAlgebra a = mvder::algebra_from_json(j);
  if (a.n > s.max_elements) throw mvder::CapExceeded("input algebra exceeds the size cap");
  mvder::AxiomReport report = mvder::check_axioms(a);
  if (!report.passed) {
    const auto& v = report.violations.front();
    std::cerr << "not an MV-algebra: " << v.axiom << " fails\n";
    return 1;
  }
  std::cout << mvder::decomposition_to_json(mvder::decompose(a)).dump(2) << "\n";
  return 0;
}

int cmd_classify_sizes(int max_size, const Settings& s) {
  bool ok = true;
  // per size: the classes and their derivation counts
  std::map<int, std::vector<std::pair<std::vector<int>, std::size_t>>> table;
  std::map<int, std::vector<mvder::Poset>> der_posets;
  for (int m = 2; m <= max_size; ++m) {
    for (const mvder::FiniteMvAlgebra& a : mvder::all_algebras_of_size(m, s.max_elements)) {
      mvder::DerivationPoset dp = mvder::derivation_poset(a, s.enum_options());
      std::vector<int> lengths = mvder::decompose(a).chain_lengths;
      std::cout << "size " << m << ": chains [";
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << lengths[i];
      }
      std::cout << "] |Der| " << dp.size() << "\n";
      table[m].push_back({lengths, dp.records.size()});
      der_posets[m].push_back(dp.poset);
    }
  }
  // the exact small-size classification and the cardinality floors
  for (const auto& [m, classes] : table) {
    for (const auto& [lengths, count] : classes) {
      if ((count == 2) != (m == 2)) ok = false;
      if ((count == 5) != (m == 3)) ok = false;
      if ((count == 9) != (m == 4)) ok = false;
      if (m >= 3 && count < 5) ok = false;
      if (m >= 4 && count < 7) ok = false;
      if (m >= 5 && count < 13) ok = false;
    }
  }
  std::cout << "size classification and floors: " << (ok ? "ok" : "FAIL") << "\n";
  // report whether distinct classes of one size ever share a derivation
  // lattice; no theorem is assumed either way
  std::string counterexample;
  bool unknown = false;
  for (const auto& [m, posets] : der_posets) {
    for (std::size_t i = 0; i < posets.size(); ++i) {
      for (std::size_t j = i + 1; j < posets.size(); ++j) {
        auto iso = mvder::find_lattice_isomorphism(posets[i], posets[j]);
        if (iso.status == mvder::LatticeIsoResult::Status::found) {
          counterexample = "size " + std::to_string(m) + " classes " + std::to_string(i) + " and " +
                           std::to_string(j);
        } else if (iso.status == mvder::LatticeIsoResult::Status::unknown) {
          unknown = true;
        }
      }
    }
  }
  if (!counterexample.empty()) {
    std::cout << "der-lattice isomorphism between non-isomorphic algebras: " << counterexample
              << "\n";
  } else {
    std::cout << "der-lattice isomorphism between non-isomorphic algebras: "
              << (unknown ? "undecided (search capped)" : "none") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_chang(std::uint64_t window, const std::string& op_name) {
  std::function<mvder::ChangElement(mvder::ChangElement)> op;
  if (op_name == "remark") {
    op = [](mvder::ChangElement x) { return mvder::remark_derivation(x); };
  } else if (op_name == "principal") {
    op = [](mvder::ChangElement x) { return mvder::principal_cstar(x); };
  } else {
    throw mvder::InvalidInput("unknown operator '" + op_name + "'");
  }
  mvder::ChangWindowReport report = mvder::verify_window(op, window);
  std::cout << mvder::chang_report_to_json(report).dump(2) << "\n";
  return report.eq1_ok ? 0 : 1;
}

int cmd_verify(const std::string& expr_text, const Settings& s) {
  mvder::AlgebraExpr expr = mvder::parse_expr(expr_text);
  mvder::FiniteMvAlgebra a = mvder::eval_expr(expr, s.max_elements);
  std::vector<mvder::FiniteMvAlgebra> factors = mvder::eval_expr_factors(expr, s.max_elements);
  std::vector<mvder::PropertyResult> results = mvder::run_property_suite(
      a, factors.size() >= 2 ? &factors : nullptr, s.enum_options(), s.max_elements);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << r.name << ": " << (r.passed ? "pass" : "FAIL") << "\n";
    if (!r.passed) std::cout << "  witness: " << r.witness << "\n";
    passed += r.passed ? 1 : 0;
  }
  std::cout << "verify: " << passed << "/" << results.size() << " passed\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite MV-algebra and derivation toolkit"};
  app.require_subcommand(1);
  // let --max-elements / --max-search appear after the subcommand too
  app.fallthrough();

  Settings settings;
  app.add_option("--max-elements", settings.max_elements, "cap on constructed carrier sizes")
      ->envname("MVDER_MAX_ELEMENTS");
  app.add_option("--max-search", settings.max_search,
                 "cap on visited partial assignments during enumeration");

  std::string expr_text, filter, format = "table", family = "der", input_path, chang_op = "remark";
  std::uint64_t window = 100;
  int max_size = 6;

  CLI::App* check = app.add_subcommand("check", "axiom report, Boolean center, ideal counts");
  check->add_option("expr", expr_text, "algebra expression, e.g. \"L2 x L3\"")->required();

  CLI::App* ders = app.add_subcommand("derivations", "classified derivation list");
  ders->add_option("expr", expr_text)->required();
  ders->add_option("--filter", filter, "principal|isotone|ider|chi|idempotent");
  ders->add_option("--format", format, "table|json");

  CLI::App* count = app.add_subcommand("count", "number of derivations");
  count->add_option("expr", expr_text)->required();

  CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram of a derivation family");
  hasse->add_option("expr", expr_text)->required();
  hasse->add_option("--family", family, "der|pder|chi|ider");
  std::string hasse_format = "dot";
  hasse->add_option("--format", hasse_format, "dot|layers");

  CLI::App* iso = app.add_subcommand("iso", "lattice isomorphism checks");
  iso->add_option("expr", expr_text)->required();

  CLI::App* dec = app.add_subcommand("decompose", "chain decomposition of raw tables");
  dec->add_option("--input", input_path, "JSON file with {n, oplus, neg, names?}")->required();

  CLI::App* sizes = app.add_subcommand("classify-sizes", "derivation counts per isomorphism class");
  sizes->add_option("--max", max_size, "largest carrier size to cover");

  CLI::App* chang = app.add_subcommand("chang", "bounded check on the infinite chain of formal symbols");
  chang->add_option("--window", window, "largest coefficient to cover");
  chang->add_option("--op", chang_op, "remark|principal");

  CLI::App* verify = app.add_subcommand("verify", "full property suite");
  verify->add_option("expr", expr_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(expr_text, settings);
    if (app.got_subcommand(ders)) return cmd_derivations(expr_text, filter, format, settings);
    if (app.got_subcommand(count)) return cmd_count(expr_text, settings);
    if (app.got_subcommand(hasse)) return cmd_hasse(expr_text, family, hasse_format, settings);
    if (app.got_subcommand(iso)) return cmd_iso(expr_text, settings);
    if (app.got_subcommand(dec)) return cmd_decompose(input_path, settings);
    if (app.got_subcommand(sizes)) return cmd_classify_sizes(max_size, settings);
    if (app.got_subcommand(chang)) return cmd_chang(window, chang_op);
    if (app.got_subcommand(verify)) return cmd_verify(expr_text, settings);
  } catch (const mvder::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const mvder::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
