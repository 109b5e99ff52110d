#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asr/f2.hpp"
#include "asr/interval_set.hpp"
#include "asr/symplectic.hpp"
#include "asr/tableaux.hpp"

namespace asr {

nlohmann::json to_json(const Interval& I);
nlohmann::json to_json(const IntervalSet& B);
nlohmann::json to_json(const DistinguishedSymbol& sym);
nlohmann::json to_json(const UnorderedSymbol& sym);
nlohmann::json to_json(const F2Subspace& L);

Interval interval_from_json(const nlohmann::json& j);
IntervalSet interval_set_from_json(const nlohmann::json& j);
DistinguishedSymbol symbol_from_json(const nlohmann::json& j);

// Plain-text set rendering per the tables: members sorted by right endpoint,
// each written as its digit string.
std::string set_to_text(const IntervalSet& B);

std::string symbol_to_line(const DistinguishedSymbol& sym);   // "(0 2 / 1 3)"
std::string symbol_to_rows(const DistinguishedSymbol& sym);   // two lines
std::string unordered_symbol_to_line(const UnorderedSymbol& sym);
std::string pair_tableau_to_line(const PairTableau& mu);
std::string shifted_to_line(const ShiftedTableau& X);

// The three-column table rows (half set, its reduction, its symbol) in
// canonical order, one string per row.
std::vector<std::string> render_table(int D);

}  // namespace asr
