#pragma once

#include <compare>
#include <vector>

#include "asr/interval.hpp"

namespace asr {

// A finite set of equal-parity intervals inside [1,D]. Members are kept
// sorted lexicographically by (a,b) and deduplicated; this is the canonical
// order used for iteration, comparison and serialization.
struct IntervalSet {
  int D = 0;
  std::vector<Interval> intervals;

  IntervalSet() = default;
  IntervalSet(int ambient, std::vector<Interval> members);

  bool contains(Interval I) const;
  int size() const { return static_cast<int>(intervals.size()); }

  friend auto operator<=>(const IntervalSet&, const IntervalSet&) = default;
};

struct Verdict {
  enum class Kind { Ok, ViolatesP0, ViolatesP1 };
  Kind kind = Kind::Ok;
  // P0 witness: the lexicographically least entangled pair.
  Interval first{};
  Interval second{};
  // P1 witness: the least (interval, uncovered interior point).
  int point = 0;

  bool ok() const { return kind == Kind::Ok; }
};

// Checks the two defining properties of a basis set: pairwise members are
// equal, apart or nested (P0), and every interior point of opposite parity
// is covered by a strictly nested member (P1). P0 is checked first.
Verdict validate(const IntervalSet& B);

bool is_basis(const IntervalSet& B);

// Basis set whose maximal members all have odd parity.
bool is_reduced(const IntervalSet& B);

// Number of members of B containing I, including I itself. I must be a
// member; 1 characterizes maximal members.
int multiplicity(Interval I, const IntervalSet& B);

// The members strictly nested in I = [a,b] at depth exactly one more than I:
// always an admissible sequence running from a+1 to b-1 with parity 1-kappa(I).
// Requires a < b.
AdmissibleSequence descent_chain(Interval I, const IntervalSet& B);

// Grouping of pairwise-apart odd intervals into maximal admissible runs:
// a gap of exactly 2 continues a run, a gap of 4 or more starts a new one.
struct RunDecomposition {
  std::vector<AdmissibleSequence> runs;
  std::vector<int> gaps;  // gap preceding each run after the first, >= 4
};

RunDecomposition maximal_runs(std::span<const Interval> intervals);

// Removes the maximal members of even parity. Idempotent; lands in the
// reduced sets.
IntervalSet reduce(const IntervalSet& B);

// The set Z(B) of intervals that can be adjoined to a reduced B: run hulls
// not touching the left wall plus the even singletons in the gap regimes.
// Every member has parity 0 and is apart from or contains members of B.
std::vector<Interval> growth_set(const IntervalSet& B);

// All basis sets reducing to B: one per subset of the growth set.
std::vector<IntervalSet> fibre(const IntervalSet& B);

// B together with its whole growth set: the unique completion of a reduced
// set to cardinality D/2. Inverse to reduce on the half-size sets.
IntervalSet saturate(const IntervalSet& B);

enum class Filter { All, Half, Reduced };

// Complete enumeration of the basis sets of ambient D, canonically ordered.
// Half restricts to |B| = D/2, Reduced to the reduced sets; both subsets
// have Catalan cardinality.
std::vector<IntervalSet> enumerate_sets(int D, Filter filter);

// Oracle: filters the full power set of the parity-restricted intervals
// through validate. Only for D <= 8.
std::vector<IntervalSet> brute_force_enumerate(int D);

// Second enumeration route: depth-first search over lexicographically
// ordered intervals with P0 pruning and a terminal P1 check. Cross-checks
// enumerate_sets at desk scale.
std::vector<IntervalSet> dfs_enumerate(int D);

// Ambient-size ceiling for enumeration (default 16, initial value
// overridable through the ASR_D_CEILING environment variable).
int enumeration_ceiling();
void set_enumeration_ceiling(int ceiling);

}  // namespace asr
