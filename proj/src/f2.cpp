#include "asr/f2.hpp"

#include <algorithm>
#include <bit>

#include "asr/error.hpp"

namespace asr {

namespace {

std::uint32_t dim_mask(int dim) {
  return dim >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << dim) - 1;
}

void check_dim(int dim) {
  if (dim < 0 || dim > 30) {
    throw InvalidInput("vector length out of range: " + std::to_string(dim));
  }
}

}  // namespace

F2Vector::F2Vector(int d, std::uint32_t raw) : dim(d), bits(raw) {
  check_dim(d);
  if (raw & ~dim_mask(d)) throw InvalidInput("vector has bits beyond its length");
}

int F2Vector::get(int i) const {
  if (i < 1 || i > dim) throw InvalidInput("coordinate index out of range");
  return static_cast<int>((bits >> (i - 1)) & 1u);
}

F2Vector operator+(F2Vector x, F2Vector y) {
  if (x.dim != y.dim) throw InvalidInput("adding vectors of different lengths");
  return F2Vector(x.dim, x.bits ^ y.bits);
}

F2Vector vector_of(int D, std::span<const int> J) {
  std::uint32_t bits = 0;
  for (int j : J) {
    if (j < 1 || j > D) throw InvalidInput("subset index out of [1,D]");
    bits |= std::uint32_t{1} << (j - 1);
  }
  return F2Vector(D, bits);
}

F2Vector vector_of(int D, std::initializer_list<int> J) {
  return vector_of(D, std::span<const int>(J.begin(), J.size()));
}

F2Vector interval_vector(int D, Interval I) {
  if (!in_range(I, D)) throw InvalidInput("interval outside [1,D]");
  std::vector<int> pts;
  for (int x = I.a; x <= I.b; ++x) pts.push_back(x);
  return vector_of(D, pts);
}

int form(const F2Vector& x, const F2Vector& y) {
  if (x.dim != y.dim) throw InvalidInput("form: vectors of different lengths");
  const std::uint32_t mask = dim_mask(x.dim);
  const int up = std::popcount(x.bits & (y.bits << 1) & mask);
  const int down = std::popcount(x.bits & (y.bits >> 1) & mask);
  return (up + down) & 1;
}

std::string to_bits(const F2Vector& x) {
  std::string s;
  for (int i = 1; i <= x.dim; ++i) s += static_cast<char>('0' + x.get(i));
  return s;
}

F2Vector vector_from_bits(const std::string& s) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (s[i] != '0') {
      throw InvalidInput("bit string may contain only 0 and 1");
    }
  }
  return F2Vector(static_cast<int>(s.size()), bits);
}

namespace {

int pivot_of(std::uint32_t row) { return std::countr_zero(row); }

// Insert v into a reduced-echelon row list, keeping pivots unique and every
// pivot column cleared in all other rows.
void echelon_insert(std::vector<std::uint32_t>& rows, std::uint32_t v) {
  for (std::uint32_t row : rows) {
    if (v & (std::uint32_t{1} << pivot_of(row))) v ^= row;
  }
  if (v == 0) return;
  for (std::uint32_t& row : rows) {
    if (row & (std::uint32_t{1} << pivot_of(v))) row ^= v;
  }
  rows.push_back(v);
  std::sort(rows.begin(), rows.end(),
            [](std::uint32_t x, std::uint32_t y) { return pivot_of(x) < pivot_of(y); });
}

}  // namespace

F2Subspace F2Subspace::span(int ambient, std::span<const F2Vector> vectors) {
  F2Subspace L(ambient);
  for (const F2Vector& v : vectors) {
    if (v.dim != ambient) throw InvalidInput("span: vector length differs from ambient");
    echelon_insert(L.basis, v.bits);
  }
  return L;
}

bool F2Subspace::contains(const F2Vector& v) const {
  if (v.dim != ambient) throw InvalidInput("contains: vector length differs from ambient");
  std::uint32_t rest = v.bits;
  for (std::uint32_t row : basis) {
    if (rest & (std::uint32_t{1} << pivot_of(row))) rest ^= row;
  }
  return rest == 0;
}

bool F2Subspace::contains(const F2Subspace& other) const {
  if (other.ambient != ambient) throw InvalidInput("contains: ambient mismatch");
  for (std::uint32_t row : other.basis) {
    if (!contains(F2Vector(ambient, row))) return false;
  }
  return true;
}

std::vector<F2Vector> F2Subspace::elements() const {
  std::vector<F2Vector> out;
  const std::size_t n = basis.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) v ^= basis[i];
    }
    out.emplace_back(ambient, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

F2Subspace parity_summand(int D, int delta) {
  if (delta != 0 && delta != 1) throw InvalidInput("parity must be 0 or 1");
  std::vector<F2Vector> gens;
  for (int i = 1; i <= D; ++i) {
    if ((i & 1) == delta) gens.push_back(vector_of(D, {i}));
  }
  return F2Subspace::span(D, gens);
}

bool within_parity(const F2Subspace& L, int delta) {
  if (delta != 0 && delta != 1) throw InvalidInput("parity must be 0 or 1");
  std::uint32_t allowed = 0;
  for (int i = 1; i <= L.ambient; ++i) {
    if ((i & 1) == delta) allowed |= std::uint32_t{1} << (i - 1);
  }
  for (std::uint32_t row : L.basis) {
    if (row & ~allowed) return false;
  }
  return true;
}

F2Subspace shriek(const F2Subspace& L, int delta) {
  if (!within_parity(L, delta)) {
    throw InvalidInput("shriek: subspace is not inside the stated parity summand");
  }
  const int D = L.ambient;
  // Desk scale: walk the opposite summand and keep the form-orthogonal part.
  std::vector<F2Vector> kept;
  for (const F2Vector& x : parity_summand(D, 1 - delta).elements()) {
    bool orthogonal = true;
    for (std::uint32_t row : L.basis) {
      if (form(x, F2Vector(D, row)) != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) kept.push_back(x);
  }
  return F2Subspace::span(D, kept);
}

}  // namespace asr
