#include "asr/symplectic.hpp"

#include <algorithm>
#include <set>

#include "asr/error.hpp"

namespace asr {

F2Vector epsilon(const IntervalSet& B) {
  if (!is_basis(B)) throw InvalidInput("epsilon: not a basis set");
  std::uint32_t bits = 0;
  for (int j = 1; j <= B.D; ++j) {
    int through = 0;
    for (Interval I : B.intervals) {
      if (I.a <= j && j <= I.b) ++through;
    }
    if ((through * (through + 1) / 2) % 2 == 1) bits |= std::uint32_t{1} << (j - 1);
  }
  return F2Vector(B.D, bits);
}

F2Vector epsilon_odd_multiplicity(const IntervalSet& B) {
  if (!is_basis(B)) throw InvalidInput("epsilon: not a basis set");
  F2Vector acc(B.D, 0);
  for (Interval I : B.intervals) {
    if (multiplicity(I, B) % 2 == 1) acc = acc + interval_vector(B.D, I);
  }
  return acc;
}

F2Vector epsilon_rows(const ShiftedTableau& X) {
  if (!is_shifted(X)) throw InvalidInput("epsilon_rows: not a shifted tableau");
  F2Vector acc(X.D, 0);
  for (Interval row : X.rows) acc = acc + interval_vector(X.D, row);
  return acc;
}

namespace {

UnorderedSymbol canonical_pair(std::set<int> A, std::set<int> B) {
  UnorderedSymbol sym;
  if (B.count(0)) std::swap(A, B);
  sym.first.assign(A.begin(), A.end());
  sym.second.assign(B.begin(), B.end());
  return sym;
}

void toggle(std::set<int>& part, int v) {
  if (!part.erase(v)) part.insert(v);
}

}  // namespace

UnorderedSymbol f_map(const F2Vector& x) {
  std::set<int> A, B;
  for (int v = 0; v <= x.dim; v += 2) A.insert(v);
  for (int v = 1; v <= x.dim + 1; v += 2) B.insert(v);
  for (int i = 1; i <= x.dim; ++i) {
    if (x.get(i)) {
      toggle(A, i);
      toggle(A, i + 1);
      toggle(B, i);
      toggle(B, i + 1);
    }
  }
  if ((static_cast<int>(A.size()) - static_cast<int>(B.size())) % 4 != 0) {
    throw InternalError("f_map: part sizes differ mod 4");
  }
  return canonical_pair(std::move(A), std::move(B));
}

UnorderedSymbol as_unordered(const DistinguishedSymbol& sym) {
  return canonical_pair(std::set<int>(sym.top.begin(), sym.top.end()),
                        std::set<int>(sym.bottom.begin(), sym.bottom.end()));
}

SpanParts span_parts(const IntervalSet& B) {
  if (!is_basis(B)) throw InvalidInput("span_parts: not a basis set");
  std::vector<F2Vector> full_gens, even_gens, odd_gens;
  for (Interval I : B.intervals) {
    full_gens.push_back(interval_vector(B.D, I));
    std::vector<int> part;
    const int parity = kappa(I);
    for (int x = I.a; x <= I.b; ++x) {
      if ((x & 1) == parity) part.push_back(x);
    }
    (parity == 0 ? even_gens : odd_gens).push_back(vector_of(B.D, part));
  }
  SpanParts parts{F2Subspace::span(B.D, full_gens), F2Subspace::span(B.D, even_gens),
                  F2Subspace::span(B.D, odd_gens)};
  if (parts.full.dim() != B.size()) {
    throw InternalError("span_parts: member indicators are not independent");
  }
  return parts;
}

std::pair<F2Subspace, F2Subspace> phi(const IntervalSet& B) {
  const SpanParts parts = span_parts(B);
  return {parts.odd, shriek(parts.even, 0)};
}

F2Subspace l_max(const F2Subspace& L, int D) {
  if (!within_parity(L, 1)) {
    throw InvalidInput("l_max: subspace is not inside the odd summand");
  }
  const IntervalSet* match = nullptr;
  static thread_local std::vector<IntervalSet> reduced_cache;
  static thread_local int cached_D = -1;
  if (cached_D != D) {
    reduced_cache = enumerate_sets(D, Filter::Reduced);
    cached_D = D;
  }
  for (const IntervalSet& B : reduced_cache) {
    if (span_parts(B).odd == L) {
      match = &B;
      break;
    }
  }
  if (match == nullptr) {
    throw NotRealizable("l_max: subspace is not the odd part of any basis set");
  }
  // The theory promises the minimum even-part dimension over the fibre is
  // attained exactly once (at the reduced set itself); check it.
  int min_dim = -1, min_count = 0;
  for (const IntervalSet& B : fibre(*match)) {
    const int d = span_parts(B).even.dim();
    if (min_dim < 0 || d < min_dim) {
      min_dim = d;
      min_count = 1;
    } else if (d == min_dim) {
      ++min_count;
    }
  }
  if (min_count != 1) {
    throw InternalError("l_max: maximal partner is not unique");
  }
  return shriek(span_parts(*match).even, 0);
}

std::vector<F2Subspace> cc_odd(int D) {
  std::vector<F2Subspace> out;
  for (const IntervalSet& B : enumerate_sets(D, Filter::All)) {
    out.push_back(span_parts(B).odd);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<F2Subspace, F2Subspace>> ca_odd(int D) {
  std::vector<std::pair<F2Subspace, F2Subspace>> out;
  for (const IntervalSet& B : enumerate_sets(D, Filter::All)) {
    out.push_back(phi(B));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<F2Subspace, F2Subspace>> ca_diagonal(int D) {
  std::vector<std::pair<F2Subspace, F2Subspace>> out;
  for (const F2Subspace& L : cc_odd(D)) out.emplace_back(L, L);
  return out;
}

std::vector<std::pair<F2Subspace, F2Subspace>> ca_star(int D) {
  std::vector<std::pair<F2Subspace, F2Subspace>> out;
  for (const F2Subspace& L : cc_odd(D)) out.emplace_back(L, l_max(L, D));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace asr
