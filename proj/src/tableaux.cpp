#include "asr/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "asr/error.hpp"

namespace asr {

namespace {

void check_ambient(int D) {
  if (D < 0 || D % 2 != 0) {
    throw InvalidInput("ambient size must be even and nonnegative, got " + std::to_string(D));
  }
}

}  // namespace

DottedSet::DottedSet(int ambient, std::vector<Interval> members)
    : D(ambient), intervals(std::move(members)) {
  check_ambient(D);
  std::sort(intervals.begin(), intervals.end());
  intervals.erase(std::unique(intervals.begin(), intervals.end()), intervals.end());
}

bool is_dotted(const DottedSet& C) {
  if (C.D < 0 || C.D % 2 != 0) return false;
  for (Interval I : C.intervals) {
    if (!in_range(I, C.D) || !equal_parity(I) || kappa(I) != 1) return false;
  }
  for (std::size_t i = 0; i < C.intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < C.intervals.size(); ++j) {
      if (relate(C.intervals[i], C.intervals[j]) == Relation::Entangled) return false;
    }
  }
  return true;
}

bool is_shifted(const ShiftedTableau& X) {
  if (X.D < 0 || X.D % 2 != 0) return false;
  for (std::size_t k = 0; k < X.rows.size(); ++k) {
    const Interval row = X.rows[k];
    if (!in_range(row, X.D) || !equal_parity(row) || kappa(row) != 1) return false;
    if (k > 0 && !(X.rows[k - 1].a < row.a && X.rows[k - 1].b < row.b)) return false;
  }
  return true;
}

bool is_pair_tableau(const PairTableau& mu) {
  if (mu.D < 0 || mu.D % 2 != 0) return false;
  if (mu.top.size() != mu.bottom.size()) return false;
  for (std::size_t k = 0; k < mu.top.size(); ++k) {
    const int c = mu.top[k];
    const int d = mu.bottom[k];
    if (c < 1 || c > mu.D || c % 2 != 1) return false;
    if (d < 1 || d > mu.D || d % 2 != 0) return false;
    if (!(c < d)) return false;
    if (k > 0 && (mu.top[k - 1] >= c || mu.bottom[k - 1] >= d)) return false;
  }
  return true;
}

bool is_distinguished(const DistinguishedSymbol& sym) {
  if (sym.D < 0 || sym.D % 2 != 0) return false;
  const std::size_t half = static_cast<std::size_t>(sym.D + 2) / 2;
  if (sym.top.size() != half || sym.bottom.size() != half) return false;
  std::vector<int> all;
  for (std::size_t k = 0; k < half; ++k) {
    if (!(sym.top[k] < sym.bottom[k])) return false;
    if (k > 0 && (sym.top[k - 1] >= sym.top[k] || sym.bottom[k - 1] >= sym.bottom[k])) {
      return false;
    }
    all.push_back(sym.top[k]);
    all.push_back(sym.bottom[k]);
  }
  std::sort(all.begin(), all.end());
  for (int v = 0; v <= sym.D + 1; ++v) {
    if (all[static_cast<std::size_t>(v)] != v) return false;
  }
  return true;
}

DottedSet dot(const IntervalSet& B) {
  if (!is_reduced(B)) throw InvalidInput("dot: not a reduced basis set");
  std::vector<Interval> odd;
  for (Interval I : B.intervals) {
    if (kappa(I) == 1) odd.push_back(I);
  }
  return DottedSet(B.D, std::move(odd));
}

IntervalSet undot(const DottedSet& C) {
  if (!is_dotted(C)) throw InvalidInput("undot: not a dotted set");
  // Nesting depth of each member.
  std::map<Interval, int> depth;
  for (Interval I : C.intervals) {
    int m = 0;
    for (Interval J : C.intervals) {
      if (J.a <= I.a && I.b <= J.b) ++m;
    }
    depth[I] = m;
  }
  std::vector<Interval> members = C.intervals;
  for (Interval I : C.intervals) {
    // Children: members one level deeper, strictly inside I.
    std::vector<Interval> children;
    for (Interval J : C.intervals) {
      if (relate(J, I) == Relation::NestedIn && depth[J] == depth[I] + 1) {
        children.push_back(J);
      }
    }
    const RunDecomposition rd = maximal_runs(children);
    const int s = static_cast<int>(rd.runs.size());
    for (const AdmissibleSequence& run : rd.runs) {
      members.push_back({run.front().a - 1, run.back().b + 1});
    }
    auto add_singletons = [&members](int lo, int hi) {  // even u, lo < u < hi
      for (int u = lo + 1; u < hi; ++u) {
        if (u % 2 == 0) members.push_back({u, u});
      }
    };
    if (s == 0) {
      add_singletons(I.a, I.b);
    } else {
      add_singletons(I.a, rd.runs.front().front().a - 1);
      for (int i = 1; i < s; ++i) {
        add_singletons(rd.runs[i - 1].back().b + 1, rd.runs[i].front().a - 1);
      }
      add_singletons(rd.runs.back().back().b + 1, I.b);
    }
  }
  IntervalSet B(C.D, std::move(members));
  if (!is_reduced(B)) throw InternalError("undot: rebuilt set is not reduced");
  return B;
}

ShiftedTableau shift(const DottedSet& C) {
  if (!is_dotted(C)) throw InvalidInput("shift: not a dotted set");
  std::vector<int> lefts, rights;
  for (Interval I : C.intervals) {
    lefts.push_back(I.a);
    rights.push_back(I.b);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  ShiftedTableau X{C.D, {}};
  for (std::size_t k = 0; k < lefts.size(); ++k) {
    X.rows.push_back({lefts[k], rights[k]});
  }
  if (!is_shifted(X)) throw InternalError("shift: result is not a shifted tableau");
  return X;
}

DottedSet unshift(const ShiftedTableau& X) {
  if (!is_shifted(X)) throw InvalidInput("unshift: not a shifted tableau");
  const int t = static_cast<int>(X.rows.size());
  // Move the entry in column s of row k up to row k - j, where j counts the
  // row ends strictly left of s.
  std::map<int, std::set<int>> grid;  // row -> occupied columns
  for (int k = 1; k <= t; ++k) {
    for (int s = X.rows[static_cast<std::size_t>(k - 1)].a;
         s <= X.rows[static_cast<std::size_t>(k - 1)].b; ++s) {
      int j = 0;
      while (j < t && X.rows[static_cast<std::size_t>(j)].b < s) ++j;
      grid[k - j].insert(s);
    }
  }
  // Each resulting row splits into maximal runs of consecutive columns, one
  // interval per run.
  std::vector<Interval> members;
  for (const auto& [row, cols] : grid) {
    if (row < 1) throw InternalError("unshift: entry moved above the first row");
    int start = 0, prev = 0;
    for (int s : cols) {
      if (start == 0) {
        start = prev = s;
      } else if (s == prev + 1) {
        prev = s;
      } else {
        members.push_back({start, prev});
        start = prev = s;
      }
    }
    if (start != 0) members.push_back({start, prev});
  }
  DottedSet C(X.D, std::move(members));
  if (!is_dotted(C)) throw InternalError("unshift: result is not a dotted set");
  return C;
}

PairTableau tableau_to_pairs(const ShiftedTableau& X) {
  if (!is_shifted(X)) throw InvalidInput("tableau_to_pairs: not a shifted tableau");
  PairTableau mu{X.D, {}, {}};
  for (Interval row : X.rows) {
    mu.top.push_back(row.a);
    mu.bottom.push_back(row.b + 1);
  }
  return mu;
}

PairTableau symbol_to_pairs(const DistinguishedSymbol& sym) {
  if (!is_distinguished(sym)) throw InvalidInput("symbol_to_pairs: malformed symbol");
  PairTableau mu{sym.D, {}, {}};
  for (int v : sym.top) {
    if (v % 2 == 1) mu.top.push_back(v);
  }
  for (int v : sym.bottom) {
    if (v % 2 == 0 && v >= 1) mu.bottom.push_back(v);
  }
  if (!is_pair_tableau(mu)) {
    throw InternalError("symbol_to_pairs: extraction fails the pair-tableau laws");
  }
  return mu;
}

DistinguishedSymbol pairs_to_symbol(const PairTableau& mu) {
  if (!is_pair_tableau(mu)) throw InvalidInput("pairs_to_symbol: malformed pair tableau");
  const std::set<int> odd_used(mu.top.begin(), mu.top.end());
  const std::set<int> even_used(mu.bottom.begin(), mu.bottom.end());
  std::set<int> top_out(mu.top.begin(), mu.top.end());
  std::set<int> bottom_out(mu.bottom.begin(), mu.bottom.end());
  for (int v = 0; v <= mu.D; v += 2) {
    if (!even_used.count(v)) top_out.insert(v);
  }
  for (int v = 1; v <= mu.D + 1; v += 2) {
    if (!odd_used.count(v)) bottom_out.insert(v);
  }
  DistinguishedSymbol sym{mu.D,
                          std::vector<int>(top_out.begin(), top_out.end()),
                          std::vector<int>(bottom_out.begin(), bottom_out.end())};
  if (!is_distinguished(sym)) {
    throw InternalError("pairs_to_symbol: completion is not a distinguished symbol");
  }
  return sym;
}

DistinguishedSymbol symbol_of(const IntervalSet& reduced) {
  return pairs_to_symbol(tableau_to_pairs(shift(dot(reduced))));
}

namespace {

void dotted_extend(const std::vector<Interval>& cands, std::size_t start, int D,
                   std::vector<Interval>& chosen, std::vector<DottedSet>& out) {
  out.emplace_back(D, chosen);
  for (std::size_t i = start; i < cands.size(); ++i) {
    bool compatible = true;
    for (Interval J : chosen) {
      if (relate(cands[i], J) == Relation::Entangled) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    chosen.push_back(cands[i]);
    dotted_extend(cands, i + 1, D, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<DottedSet> enumerate_dotted(int D) {
  check_ambient(D);
  std::vector<Interval> cands;
  for (int a = 1; a <= D; a += 2) {
    for (int b = a; b <= D; b += 2) cands.push_back({a, b});
  }
  std::vector<Interval> chosen;
  std::vector<DottedSet> out;
  dotted_extend(cands, 0, D, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DistinguishedSymbol> almost_special_symbols(int D) {
  std::vector<DistinguishedSymbol> out;
  for (const IntervalSet& B : enumerate_sets(D, Filter::Reduced)) {
    out.push_back(symbol_of(B));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void symbols_extend(int D, int next, std::vector<int>& top, std::vector<int>& bottom,
                    std::vector<DistinguishedSymbol>& out) {
  const std::size_t half = static_cast<std::size_t>(D + 2) / 2;
  if (next == D + 2) {
    out.push_back({D, top, bottom});
    return;
  }
  // Ballot condition: every prefix holds at least as many top as bottom
  // entries; this is exactly the entrywise top < bottom requirement.
  if (top.size() < half) {
    top.push_back(next);
    symbols_extend(D, next + 1, top, bottom, out);
    top.pop_back();
  }
  if (bottom.size() < top.size()) {
    bottom.push_back(next);
    symbols_extend(D, next + 1, top, bottom, out);
    bottom.pop_back();
  }
}

}  // namespace

std::vector<DistinguishedSymbol> enumerate_symbols(int D) {
  check_ambient(D);
  std::vector<int> top, bottom;
  std::vector<DistinguishedSymbol> out;
  symbols_extend(D, 0, top, bottom, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace asr
