#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asr/error.hpp"
#include "asr/exceptional.hpp"
#include "asr/io.hpp"
#include "asr/symplectic.hpp"
#include "asr/tableaux.hpp"
#include "asr/verify.hpp"

namespace {

int print_results(const std::vector<asr::CheckResult>& results) {
  bool ok = true;
  for (const asr::CheckResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

int run_enumerate(int D, const std::string& filter_name, const std::string& format) {
  asr::Filter filter = asr::Filter::All;
  if (filter_name == "half") filter = asr::Filter::Half;
  if (filter_name == "reduced") filter = asr::Filter::Reduced;
  const std::vector<asr::IntervalSet> sets = asr::enumerate_sets(D, filter);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const asr::IntervalSet& B : sets) arr.push_back(asr::to_json(B));
    std::cout << arr.dump() << "\n";
  } else {
    for (const asr::IntervalSet& B : sets) std::cout << asr::set_to_text(B) << "\n";
  }
  return 0;
}

int run_symbol(int D, const std::string& set_json) {
  nlohmann::json j = nlohmann::json::parse(set_json);
  if (!j.contains("D")) j["D"] = D;
  const asr::IntervalSet B = asr::interval_set_from_json(j);
  const asr::Verdict verdict = asr::validate(B);
  if (!verdict.ok()) {
    throw asr::InvalidInput("input set is not a basis set");
  }
  const asr::IntervalSet reduced = asr::reduce(B);
  const asr::DottedSet dotted = asr::dot(reduced);
  const asr::ShiftedTableau shifted = asr::shift(dotted);
  const asr::PairTableau pairs = asr::tableau_to_pairs(shifted);
  const asr::DistinguishedSymbol sym = asr::pairs_to_symbol(pairs);
  std::cout << "set       " << asr::set_to_text(B) << "\n";
  std::cout << "reduced   " << asr::set_to_text(reduced) << "\n";
  std::cout << "dotted    " << asr::set_to_text(asr::IntervalSet(B.D, dotted.intervals))
            << "\n";
  std::cout << "shifted   " << asr::shifted_to_line(shifted) << "\n";
  std::cout << "pairs     " << asr::pair_tableau_to_line(pairs) << "\n";
  std::cout << "symbol    " << asr::symbol_to_line(sym) << "\n";
  std::cout << "epsilon   " << asr::to_bits(asr::epsilon(B)) << "\n";
  const asr::UnorderedSymbol via_f = asr::f_map(asr::epsilon_rows(shifted));
  const bool agree = via_f == asr::as_unordered(sym);
  std::cout << "f(eps)    " << asr::unordered_symbol_to_line(via_f)
            << (agree ? "  [agrees]" : "  [MISMATCH]") << "\n";
  return agree ? 0 : 1;
}

int run_verify(int d_max, const std::string& suite) {
  std::vector<asr::CheckResult> results;
  auto append = [&results](std::vector<asr::CheckResult> part) {
    results.insert(results.end(), part.begin(), part.end());
  };
  if (suite == "counts" || suite == "all") append(asr::verify_counts(d_max));
  if (suite == "roundtrip" || suite == "all") append(asr::verify_roundtrip(d_max));
  if (suite == "epsilon" || suite == "all") append(asr::verify_epsilon(d_max));
  if (suite == "lattice" || suite == "all") append(asr::verify_lattice(d_max));
  if (suite == "all") {
    append(asr::verify_oracle(d_max));
    append(asr::verify_shift_examples());
    append(asr::verify_exceptional());
  }
  return print_results(results);
}

int run_exceptional(int size, bool check) {
  const asr::FamilyRecord& rec = asr::family(size);
  std::cout << "family size " << rec.family_size << ", group "
            << asr::group_name(rec.gamma) << "\n";
  for (asr::Group key : rec.keys) {
    std::cout << "L(" << asr::group_name(key) << ") =";
    for (asr::Group g : rec.lists.at(key)) std::cout << " " << asr::group_name(g);
    std::cout << " ; L' =";
    for (const std::string& label : rec.m_labels.at(key)) std::cout << " " << label;
    std::cout << "\n";
  }
  std::cout << "almost special:";
  for (const std::string& label : rec.almost_special) std::cout << " " << label;
  std::cout << "\n";
  if (rec.family_size == 17) {
    for (asr::Group key : rec.keys) {
      std::cout << "dims(" << asr::group_name(key) << ") =";
      for (const auto& entry : asr::e8_lists(rec).at(key)) {
        std::cout << " " << (entry ? std::to_string(*entry) : std::string("?"));
      }
      std::cout << "\n";
    }
  }
  if (check) {
    bool ok = true;
    for (const auto& [key, pass] : asr::check_unique_max(rec)) {
      std::cout << "unique-max " << asr::group_name(key) << ": "
                << (pass ? "pass" : "fail") << "\n";
      ok = ok && pass;
    }
    ok = ok && asr::almost_special_labels(rec) == rec.almost_special;
    std::cout << (ok ? "check passed" : "check failed") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

int run_catalan(int d_max) {
  bool ok = true;
  for (int D = 0; D <= d_max; D += 2) {
    const std::size_t half = asr::enumerate_sets(D, asr::Filter::Half).size();
    const std::size_t reduced = asr::enumerate_sets(D, asr::Filter::Reduced).size();
    const std::size_t symbols = asr::enumerate_symbols(D).size();
    std::cout << "D=" << D << " half=" << half << " reduced=" << reduced
              << " symbols=" << symbols << "\n";
    ok = ok && half == reduced && reduced == symbols;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-set bases, two-row symbols and their symplectic realization"};
  app.require_subcommand(1);

  int d = 0;
  std::string filter = "all";
  std::string format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "List basis sets of ambient D");
  enumerate->add_option("--d", d, "ambient size (even)")->required();
  enumerate->add_option("--filter", filter, "all|half|reduced")
      ->check(CLI::IsMember({"all", "half", "reduced"}));
  enumerate->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  int table_d = 0;
  auto* table = app.add_subcommand("table", "Three-column table: half set, reduction, symbol");
  table->add_option("--d", table_d, "ambient size (even)")->required();

  int symbol_d = 0;
  std::string set_json;
  auto* symbol = app.add_subcommand("symbol", "Run the full pipeline on one set");
  symbol->add_option("--d", symbol_d, "ambient size (even)");
  symbol->add_option("--set", set_json, "interval set as JSON")->required();

  int verify_d = 8;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--d-max", verify_d, "largest ambient size");
  verify->add_option("--suite", suite, "counts|roundtrip|epsilon|lattice|all")
      ->check(CLI::IsMember({"counts", "roundtrip", "epsilon", "lattice", "all"}));

  int size = 0;
  bool check = false;
  auto* exceptional = app.add_subcommand("exceptional", "Print an exceptional family record");
  exceptional->add_option("--size", size, "family size")->required();
  exceptional->add_flag("--check", check, "run the structural checks");

  int catalan_d = 6;
  auto* catalan = app.add_subcommand("catalan", "Catalan counts of the three families");
  catalan->add_option("--d-max", catalan_d, "largest ambient size");

  auto* dump = app.add_subcommand("dump-data", "Emit the embedded family data document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(d, filter, format);
    if (table->parsed()) {
      for (const std::string& row : asr::render_table(table_d)) std::cout << row << "\n";
      return 0;
    }
    if (symbol->parsed()) return run_symbol(symbol_d, set_json);
    if (verify->parsed()) return run_verify(verify_d, suite);
    if (exceptional->parsed()) return run_exceptional(size, check);
    if (catalan->parsed()) return run_catalan(catalan_d);
    if (dump->parsed()) {
      std::cout << asr::exceptional_data_json();
      return 0;
    }
  } catch (const asr::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const asr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
