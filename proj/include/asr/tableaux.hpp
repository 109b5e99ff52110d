#pragma once

#include <compare>
#include <vector>

#include "asr/interval_set.hpp"

namespace asr {

// A set of odd-parity intervals that are pairwise equal, apart or nested.
// These are exactly the odd parts of reduced basis sets; by inclusion they
// form a forest, and the nesting depth gives a level structure.
struct DottedSet {
  int D = 0;
  std::vector<Interval> intervals;  // sorted, deduplicated

  DottedSet() = default;
  DottedSet(int ambient, std::vector<Interval> members);

  friend auto operator<=>(const DottedSet&, const DottedSet&) = default;
};

// Tableau with contiguous odd-parity rows [c_k,d_k], with both the left and
// the right endpoints strictly increasing down the rows.
struct ShiftedTableau {
  int D = 0;
  std::vector<Interval> rows;

  friend auto operator<=>(const ShiftedTableau&, const ShiftedTableau&) = default;
};

// Two-row tableau of odd entries over even entries with entrywise top < bottom.
struct PairTableau {
  int D = 0;
  std::vector<int> top;     // odd, strictly increasing
  std::vector<int> bottom;  // even, strictly increasing

  friend auto operator<=>(const PairTableau&, const PairTableau&) = default;
};

// Ordered pair of increasing sequences of length (D+2)/2 partitioning
// [0,D+1] with entrywise top < bottom.
struct DistinguishedSymbol {
  int D = 0;
  std::vector<int> top;
  std::vector<int> bottom;

  friend auto operator<=>(const DistinguishedSymbol&, const DistinguishedSymbol&) = default;
};

bool is_dotted(const DottedSet& C);
bool is_shifted(const ShiftedTableau& X);
bool is_pair_tableau(const PairTableau& mu);
bool is_distinguished(const DistinguishedSymbol& sym);

// Odd-parity members of a reduced basis set.
DottedSet dot(const IntervalSet& B);

// Unique reduced basis set with the given odd part, rebuilt level by level
// by inserting run hulls and even singletons strictly inside each member.
IntervalSet undot(const DottedSet& C);

// Row shift: order the intervals by right endpoint, then row j of the result
// pairs the j-th smallest left endpoint with the j-th smallest right endpoint.
ShiftedTableau shift(const DottedSet& C);

// Inverse of shift, by moving the entry in column s of row k up by the
// number of row ends strictly left of s.
DottedSet unshift(const ShiftedTableau& X);

// (c_k, d_k) -> (c_k, d_k + 1).
PairTableau tableau_to_pairs(const ShiftedTableau& X);

// Odd entries of the top row over even entries of the bottom row.
PairTableau symbol_to_pairs(const DistinguishedSymbol& sym);

// Completes a pair tableau to the full two-row symbol: the top row absorbs
// the unused evens of [0,D], the bottom row the unused odds of [1,D+1].
DistinguishedSymbol pairs_to_symbol(const PairTableau& mu);

// Full chain reduced set -> dotted -> shifted -> pairs -> symbol.
DistinguishedSymbol symbol_of(const IntervalSet& reduced);

// All dotted sets of ambient D, canonically ordered.
std::vector<DottedSet> enumerate_dotted(int D);

// Image of the reduced sets under the full chain; equals enumerate_symbols.
std::vector<DistinguishedSymbol> almost_special_symbols(int D);

// Direct enumeration of the distinguished symbols from their definition
// (two-row standard-tableau generation).
std::vector<DistinguishedSymbol> enumerate_symbols(int D);

}  // namespace asr
