#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "asr/error.hpp"
#include "asr/io.hpp"
#include "asr/tableaux.hpp"

using namespace asr;

TEST_CASE("interval set json round trip") {
  const IntervalSet B(6, {{1, 1}, {4, 4}, {3, 5}});
  const nlohmann::json j = to_json(B);
  CHECK(j.dump() == R"({"D":6,"intervals":[[1,1],[3,5],[4,4]]})");
  CHECK(interval_set_from_json(j) == B);
  for (int D = 0; D <= 8; D += 2)
    for (const IntervalSet& S : enumerate_sets(D, Filter::All))
      CHECK(interval_set_from_json(to_json(S)) == S);
  CHECK_THROWS_AS(interval_set_from_json(nlohmann::json::parse(
                      R"({"D":4,"intervals":[[1,2]]})")),
                  InvalidInput);
}

TEST_CASE("symbol json round trip") {
  const DistinguishedSymbol sym{6, {0, 1, 3, 6}, {2, 4, 5, 7}};
  const nlohmann::json j = to_json(sym);
  CHECK(j.dump() == R"({"bottom":[2,4,5,7],"top":[0,1,3,6]})");
  CHECK(symbol_from_json(j) == sym);
  for (int D = 0; D <= 8; D += 2)
    for (const DistinguishedSymbol& s : enumerate_symbols(D))
      CHECK(symbol_from_json(to_json(s)) == s);
}

TEST_CASE("plain text renderings") {
  CHECK(set_to_text(IntervalSet(6, {{4, 4}, {3, 5}, {2, 6}})) ==
        "{4,345,23456}");
  CHECK(set_to_text(IntervalSet(4, {})) == "{}");
  CHECK(set_to_text(IntervalSet(4, {{3, 3}, {2, 4}})) == "{3,234}");
  CHECK(symbol_to_line({4, {0, 2, 4}, {1, 3, 5}}) == "(0 2 4 / 1 3 5)");
  CHECK(shifted_to_line(ShiftedTableau{6, {{1, 3}, {3, 5}}}) ==
        "(123 | 345)");
  CHECK(pair_tableau_to_line(PairTableau{6, {1, 3}, {4, 6}}) ==
        "(1 3 / 4 6)");
}

TEST_CASE("render_table matches the symbol chain") {
  for (int D = 0; D <= 6; D += 2) {
    const auto rows = render_table(D);
    CHECK(rows.size() == enumerate_sets(D, Filter::Half).size());
    for (const std::string& row : rows) {
      CHECK(row.find("  ") != std::string::npos);
      CHECK(row.back() == ')');
    }
  }
}
