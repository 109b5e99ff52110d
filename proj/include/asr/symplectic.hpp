#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "asr/f2.hpp"
#include "asr/interval_set.hpp"
#include "asr/tableaux.hpp"

namespace asr {

// Unordered partition of [0,D+1] into two parts with sizes congruent mod 4,
// canonicalized so the part containing 0 comes first.
struct UnorderedSymbol {
  std::vector<int> first;   // contains 0
  std::vector<int> second;

  friend auto operator<=>(const UnorderedSymbol&, const UnorderedSymbol&) = default;
};

// Coordinate-count evaluation of the marking vector: coordinate j is the
// triangular number of the number of members through j, mod 2.
F2Vector epsilon(const IntervalSet& B);

// Same vector as the sum of indicators of the odd-multiplicity members.
// Exposed separately so the two routes can be checked against each other.
F2Vector epsilon_odd_multiplicity(const IntervalSet& B);

// Sum of the row indicators of a shifted tableau.
F2Vector epsilon_rows(const ShiftedTableau& X);

// The coordinate-to-symbol bijection: start from the alternating base
// partition (evens / odds) and toggle {i, i+1} across the parts for every
// set coordinate i. Order-independent.
UnorderedSymbol f_map(const F2Vector& x);

UnorderedSymbol as_unordered(const DistinguishedSymbol& sym);

struct SpanParts {
  F2Subspace full;  // span of the member indicators
  F2Subspace even;  // even-coordinate part, spanned by even-parity members
  F2Subspace odd;   // odd-coordinate part, spanned by odd-parity members
};

// Splits the span of B into its even and odd summands via the stated bases:
// the even points of parity-0 members and the odd points of parity-1 members.
SpanParts span_parts(const IntervalSet& B);

// B -> (odd part, annihilator of the even part). Collecting over all basis
// sets of ambient D yields exactly the admissible pair set ca.
std::pair<F2Subspace, F2Subspace> phi(const IntervalSet& B);

// The unique maximal partner of L among admissible pairs (L, L'), realized
// through the reduced set with odd part L. Verifies uniqueness at runtime.
F2Subspace l_max(const F2Subspace& L, int D);

// The subspaces of the odd summand arising as odd parts of basis sets.
std::vector<F2Subspace> cc_odd(int D);

// Images of phi over all basis sets (deduplicated, sorted).
std::vector<std::pair<F2Subspace, F2Subspace>> ca_odd(int D);

// The diagonal pairs (L, L).
std::vector<std::pair<F2Subspace, F2Subspace>> ca_diagonal(int D);

// The pairs (L, l_max(L)).
std::vector<std::pair<F2Subspace, F2Subspace>> ca_star(int D);

}  // namespace asr
