#include "asr/io.hpp"

#include <algorithm>

#include "asr/error.hpp"

namespace asr {

nlohmann::json to_json(const Interval& I) { return nlohmann::json::array({I.a, I.b}); }

nlohmann::json to_json(const IntervalSet& B) {
  nlohmann::json members = nlohmann::json::array();
  for (Interval I : B.intervals) members.push_back(to_json(I));
  return {{"D", B.D}, {"intervals", members}};
}

nlohmann::json to_json(const DistinguishedSymbol& sym) {
  return {{"top", sym.top}, {"bottom", sym.bottom}};
}

nlohmann::json to_json(const UnorderedSymbol& sym) {
  return {{"parts", nlohmann::json::array({sym.first, sym.second})}};
}

nlohmann::json to_json(const F2Subspace& L) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t row : L.basis) rows.push_back(to_bits(F2Vector(L.ambient, row)));
  return rows;
}

Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidInput("interval JSON must be a two-element array");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  std::vector<Interval> members;
  for (const auto& entry : j.at("intervals")) members.push_back(interval_from_json(entry));
  return IntervalSet(j.at("D").get<int>(), std::move(members));
}

DistinguishedSymbol symbol_from_json(const nlohmann::json& j) {
  DistinguishedSymbol sym;
  sym.top = j.at("top").get<std::vector<int>>();
  sym.bottom = j.at("bottom").get<std::vector<int>>();
  sym.D = static_cast<int>(sym.top.size() + sym.bottom.size()) - 2;
  return sym;
}

std::string set_to_text(const IntervalSet& B) {
  std::vector<Interval> members = B.intervals;
  std::sort(members.begin(), members.end(),
            [](Interval x, Interval y) { return std::pair(x.b, x.a) < std::pair(y.b, y.a); });
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ",";
    out += to_digits(members[i]);
  }
  return out + "}";
}

namespace {

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string symbol_to_line(const DistinguishedSymbol& sym) {
  return "(" + join(sym.top) + " / " + join(sym.bottom) + ")";
}

std::string symbol_to_rows(const DistinguishedSymbol& sym) {
  return join(sym.top) + "\n" + join(sym.bottom);
}

std::string unordered_symbol_to_line(const UnorderedSymbol& sym) {
  return "{" + join(sym.first) + " / " + join(sym.second) + "}";
}

std::string pair_tableau_to_line(const PairTableau& mu) {
  return "(" + join(mu.top) + " / " + join(mu.bottom) + ")";
}

std::string shifted_to_line(const ShiftedTableau& X) {
  std::string out = "(";
  for (std::size_t k = 0; k < X.rows.size(); ++k) {
    if (k > 0) out += " | ";
    out += to_digits(X.rows[k]);
  }
  return out + ")";
}

std::vector<std::string> render_table(int D) {
  std::vector<std::string> rows;
  for (const IntervalSet& half : enumerate_sets(D, Filter::Half)) {
    const IntervalSet reduced = reduce(half);
    rows.push_back(set_to_text(half) + "  " + set_to_text(reduced) + "  " +
                   symbol_to_line(symbol_of(reduced)));
  }
  return rows;
}

}  // namespace asr
