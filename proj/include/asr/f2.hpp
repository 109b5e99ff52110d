#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asr/interval.hpp"

namespace asr {

// Vector of fixed length D over the two-element field; coordinate i (1-based)
// is stored in bit i-1.
struct F2Vector {
  int dim = 0;
  std::uint32_t bits = 0;

  F2Vector() = default;
  F2Vector(int d, std::uint32_t raw);

  int get(int i) const;  // coordinate i in [1,dim]
  bool is_zero() const { return bits == 0; }

  friend F2Vector operator+(F2Vector x, F2Vector y);
  friend auto operator<=>(const F2Vector&, const F2Vector&) = default;
};

// Indicator vector of a subset J of [1,D].
F2Vector vector_of(int D, std::span<const int> J);
F2Vector vector_of(int D, std::initializer_list<int> J);

// Indicator of the integer points of an interval.
F2Vector interval_vector(int D, Interval I);

// The adjacency symplectic form: (e_i, e_j) = 1 iff |i-j| = 1, extended
// bilinearly. Alternating: (x,x) = 0.
int form(const F2Vector& x, const F2Vector& y);

std::string to_bits(const F2Vector& x);          // coordinate 1 leftmost
F2Vector vector_from_bits(const std::string& s);

// Subspace of F2^D held as a reduced echelon basis with unique pivots, so
// equal subspaces compare equal structurally.
struct F2Subspace {
  int ambient = 0;
  std::vector<std::uint32_t> basis;  // reduced echelon rows, ascending pivot

  F2Subspace() = default;
  explicit F2Subspace(int dim_ambient) : ambient(dim_ambient) {}

  static F2Subspace span(int ambient, std::span<const F2Vector> vectors);

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const F2Vector& v) const;
  bool contains(const F2Subspace& other) const;
  std::vector<F2Vector> elements() const;  // all 2^dim members

  friend auto operator<=>(const F2Subspace&, const F2Subspace&) = default;
};

// The even- or odd-coordinate summand V^delta of F2^D.
F2Subspace parity_summand(int D, int delta);

// All basis vectors supported on coordinates of parity delta.
bool within_parity(const F2Subspace& L, int delta);

// Annihilator of L under the adjacency form inside the opposite-parity
// summand. Requires L within V^delta; dim L + dim result = D/2.
F2Subspace shriek(const F2Subspace& L, int delta);

}  // namespace asr
