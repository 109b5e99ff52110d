#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asr {

// Closed integer interval [a,b]. The ambient even size D is carried by the
// containing set, not by the interval itself.
struct Interval {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// How two intervals sit relative to each other. Exactly one tag applies to
// every pair; Entangled is the configuration forbidden inside a basis set.
enum class Relation { Equal, NestedIn, Contains, Apart, Entangled };

// 1 <= a <= b.
bool well_formed(Interval I);

// Interval fits inside [1,D].
bool in_range(Interval I, int D);

// Endpoints share a parity (membership test for the parity-restricted family).
bool equal_parity(Interval I);

// Parity class: 1 for odd endpoints, 0 for even. Throws InvalidInput on a
// mixed-parity or malformed interval.
int kappa(Interval I);

// Relation of I to J: NestedIn means I sits strictly inside J.
Relation relate(Interval I, Interval J);

// Points of I with parity opposite to the endpoints: {a+1, a+3, ..., b-1}.
std::vector<int> even_interior(Interval I);

// Digit-string rendering "a(a+1)...b" used by the plain-text tables.
std::string to_digits(Interval I);

using AdmissibleSequence = std::vector<Interval>;

// Shared parity of the sequence if consecutive gaps are exactly 2 and all
// endpoints share one parity; nullopt otherwise. Empty input is inadmissible.
std::optional<int> admissible_kappa(std::span<const Interval> seq);

}  // namespace asr
