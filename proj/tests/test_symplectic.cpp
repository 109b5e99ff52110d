#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "asr/error.hpp"
#include "asr/f2.hpp"
#include "asr/interval_set.hpp"
#include "asr/symplectic.hpp"
#include "asr/tableaux.hpp"

using namespace asr;

namespace {

IntervalSet make(int D, std::vector<Interval> v) { return IntervalSet(D, std::move(v)); }

F2Subspace span_of(int D, std::initializer_list<F2Vector> vs) {
  const std::vector<F2Vector> v(vs);
  return F2Subspace::span(D, v);
}

F2Vector e(int D, std::initializer_list<int> coords) { return vector_of(D, coords); }

}  // namespace

TEST_CASE("vector_of and bit strings") {
  CHECK(to_bits(e(4, {2, 3, 4})) == "0111");
  CHECK(to_bits(e(4, {})) == "0000");
  CHECK(to_bits(e(2, {1})) == "10");
  CHECK(vector_from_bits("0111") == e(4, {2, 3, 4}));
  CHECK(e(4, {1}) + e(4, {1, 2}) == e(4, {2}));
  CHECK_THROWS_AS(vector_of(2, {3}), InvalidInput);
}

TEST_CASE("form") {
  CHECK(form(e(4, {1}), e(4, {2})) == 1);
  CHECK(form(e(4, {1}), e(4, {3})) == 0);
  CHECK(form(e(4, {1, 2}), e(4, {2, 3})) == 0);
  CHECK_THROWS_AS(form(e(2, {1}), e(4, {1})), InvalidInput);
}

TEST_CASE("form is alternating and bilinear") {
  const int D = 6;
  for (std::uint32_t x = 0; x < (1u << D); ++x) {
    const F2Vector vx(D, x);
    CHECK(form(vx, vx) == 0);
    for (std::uint32_t y = 0; y < (1u << D); y += 7) {
      const F2Vector vy(D, y);
      CHECK(form(vx, vy) == form(vy, vx));
      CHECK(form(vx + vy, vy) == (form(vx, vy) ^ form(vy, vy)));
    }
  }
}

TEST_CASE("epsilon") {
  CHECK(epsilon(make(4, {{3, 3}, {2, 4}})) == e(4, {2, 3, 4}));
  CHECK(epsilon(make(6, {})) == e(6, {}));
  CHECK(epsilon(make(2, {{1, 1}})) == e(2, {1}));
}

TEST_CASE("epsilon two routes agree and the map is injective") {
  for (int D = 0; D <= 10; D += 2) {
    std::set<F2Vector> images;
    for (const IntervalSet& B : enumerate_sets(D, Filter::All)) {
      const F2Vector v = epsilon(B);
      CHECK(v == epsilon_odd_multiplicity(B));
      images.insert(v);
    }
    CHECK(images.size() == enumerate_sets(D, Filter::All).size());
  }
}

TEST_CASE("epsilon_rows") {
  CHECK(epsilon_rows(ShiftedTableau{6, {{1, 1}, {3, 3}}}) == e(6, {1, 3}));
  CHECK(epsilon_rows(ShiftedTableau{6, {}}) == e(6, {}));
  CHECK(epsilon_rows(ShiftedTableau{6, {{1, 3}, {3, 5}}}) == e(6, {1, 2, 4, 5}));
  for (int D = 0; D <= 8; D += 2)
    for (const IntervalSet& B : enumerate_sets(D, Filter::Reduced))
      CHECK(epsilon_rows(shift(dot(B))) == epsilon(B));
}

TEST_CASE("f_map") {
  const UnorderedSymbol base = f_map(e(2, {}));
  CHECK(base.first == std::vector<int>{0, 2});
  CHECK(base.second == std::vector<int>{1, 3});
  const UnorderedSymbol one = f_map(e(2, {1}));
  CHECK(one.first == std::vector<int>{0, 1});
  CHECK(one.second == std::vector<int>{2, 3});
  // contiguous run 2..4 toggles {2,5} in both parts of the base partition
  const UnorderedSymbol run = f_map(e(4, {2, 3, 4}));
  CHECK(run.first == std::vector<int>{0, 4, 5});
  CHECK(run.second == std::vector<int>{1, 2, 3});
  const UnorderedSymbol mid = f_map(e(4, {3}));
  CHECK(mid.first == std::vector<int>{0, 2, 3});
  CHECK(mid.second == std::vector<int>{1, 4, 5});
}

TEST_CASE("f_map is a bijection onto the mod-4 partitions") {
  for (int D = 0; D <= 8; D += 2) {
    std::set<UnorderedSymbol> images;
    for (std::uint32_t x = 0; x < (1u << D); ++x) {
      const UnorderedSymbol s = f_map(F2Vector(D, x));
      const long diff = static_cast<long>(s.first.size()) -
                        static_cast<long>(s.second.size());
      CHECK(((diff % 4) + 4) % 4 == 0);
      images.insert(s);
    }
    CHECK(images.size() == (1u << D));
  }
}

TEST_CASE("f after epsilon realizes the symbol chain") {
  for (int D = 0; D <= 8; D += 2) {
    for (const IntervalSet& B : enumerate_sets(D, Filter::Reduced)) {
      const ShiftedTableau X = shift(dot(B));
      CHECK(f_map(epsilon_rows(X)) == as_unordered(symbol_of(B)));
    }
  }
}

TEST_CASE("span_parts") {
  const SpanParts nested = span_parts(make(4, {{3, 3}, {2, 4}}));
  CHECK(nested.odd == span_of(4, {e(4, {3})}));
  CHECK(nested.even == span_of(4, {e(4, {2, 4})}));
  const SpanParts zero = span_parts(make(4, {}));
  CHECK(zero.full.dim() == 0);
  CHECK(zero.even.dim() == 0);
  CHECK(zero.odd.dim() == 0);
  const SpanParts singles = span_parts(make(4, {{1, 1}, {3, 3}}));
  CHECK(singles.odd == span_of(4, {e(4, {1}), e(4, {3})}));
  CHECK(singles.even.dim() == 0);
}

TEST_CASE("span splits as a direct sum of the parity parts") {
  for (int D = 0; D <= 8; D += 2) {
    for (const IntervalSet& B : enumerate_sets(D, Filter::All)) {
      const SpanParts parts = span_parts(B);
      CHECK(parts.full.dim() == B.size());
      CHECK(parts.even.dim() + parts.odd.dim() == parts.full.dim());
      CHECK(parts.full.contains(parts.even));
      CHECK(parts.full.contains(parts.odd));
      CHECK(within_parity(parts.even, 0));
      CHECK(within_parity(parts.odd, 1));
      // independent route: intersect the span with each parity summand
      for (const F2Vector& v : parts.full.elements()) {
        const bool in_even = parity_summand(D, 0).contains(v);
        const bool in_odd = parity_summand(D, 1).contains(v);
        if (in_even) CHECK(parts.even.contains(v));
        if (in_odd) CHECK(parts.odd.contains(v));
      }
    }
  }
}

TEST_CASE("shriek") {
  CHECK(shriek(F2Subspace(2), 0) == parity_summand(2, 1));
  CHECK(shriek(span_of(2, {e(2, {2})}), 0).dim() == 0);
  CHECK(shriek(span_of(4, {e(4, {2, 4})}), 0) == span_of(4, {e(4, {3})}));
  CHECK_THROWS_AS(shriek(span_of(4, {e(4, {1, 2})}), 0), InvalidInput);
  for (int D = 2; D <= 8; D += 2) {
    for (int delta : {0, 1}) {
      for (const IntervalSet& B : enumerate_sets(D, Filter::All)) {
        const SpanParts parts = span_parts(B);
        const F2Subspace& L = delta == 0 ? parts.even : parts.odd;
        CHECK(L.dim() + shriek(L, delta).dim() == D / 2);
      }
    }
  }
}

TEST_CASE("phi") {
  const auto [l0, l0p] = phi(make(2, {}));
  CHECK(l0.dim() == 0);
  CHECK(l0p == parity_summand(2, 1));
  const auto [l1, l1p] = phi(make(2, {{1, 1}}));
  CHECK(l1 == span_of(2, {e(2, {1})}));
  CHECK(l1p == span_of(2, {e(2, {1})}));
  const auto [l2, l2p] = phi(make(2, {{2, 2}}));
  CHECK(l2.dim() == 0);
  CHECK(l2p.dim() == 0);
}

TEST_CASE("phi is a bijection onto the admissible pairs") {
  for (int D = 0; D <= 8; D += 2) {
    const auto all = enumerate_sets(D, Filter::All);
    std::set<std::pair<F2Subspace, F2Subspace>> images;
    for (const IntervalSet& B : all) {
      const auto pair = phi(B);
      CHECK(pair.second.contains(pair.first));
      images.insert(pair);
    }
    CHECK(images.size() == all.size());
    const auto ca = ca_odd(D);
    CHECK(std::set<std::pair<F2Subspace, F2Subspace>>(ca.begin(), ca.end()) ==
          images);
  }
}

TEST_CASE("odd parts classify the reduced and half-size sets") {
  for (int D = 0; D <= 8; D += 2) {
    const auto cc = cc_odd(D);
    for (Filter f : {Filter::Reduced, Filter::Half}) {
      std::set<F2Subspace> odd_parts;
      for (const IntervalSet& B : enumerate_sets(D, f))
        odd_parts.insert(span_parts(B).odd);
      CHECK(odd_parts == std::set<F2Subspace>(cc.begin(), cc.end()));
      CHECK(odd_parts.size() == enumerate_sets(D, f).size());
    }
  }
}

TEST_CASE("odd part is invariant under reduction and fibre growth") {
  for (int D = 0; D <= 8; D += 2) {
    for (const IntervalSet& R : enumerate_sets(D, Filter::Reduced)) {
      const SpanParts base = span_parts(R);
      for (const IntervalSet& B : fibre(R)) {
        const SpanParts parts = span_parts(B);
        CHECK(parts.odd == base.odd);
        CHECK(parts.even.dim() == base.even.dim() + (B.size() - R.size()));
      }
    }
  }
}

TEST_CASE("l_max") {
  CHECK(l_max(F2Subspace(2), 2) == parity_summand(2, 1));
  CHECK(l_max(span_of(2, {e(2, {1})}), 2) == span_of(2, {e(2, {1})}));
  CHECK(l_max(span_of(4, {e(4, {3})}), 4) == span_of(4, {e(4, {1}), e(4, {3})}));
  CHECK_THROWS_AS(l_max(span_of(6, {e(6, {1, 5})}), 6), NotRealizable);
  for (int D = 0; D <= 8; D += 2) {
    const auto star = ca_star(D);
    std::set<std::pair<F2Subspace, F2Subspace>> expected;
    for (const IntervalSet& R : enumerate_sets(D, Filter::Reduced))
      expected.insert(phi(R));
    CHECK(std::set<std::pair<F2Subspace, F2Subspace>>(star.begin(), star.end()) ==
          expected);
    for (const auto& [L, Lp] : star) CHECK(l_max(L, D) == Lp);
  }
}

TEST_CASE("diagonal pairs come from the half-size sets") {
  for (int D = 0; D <= 8; D += 2) {
    std::set<std::pair<F2Subspace, F2Subspace>> expected;
    for (const IntervalSet& H : enumerate_sets(D, Filter::Half)) {
      const auto pair = phi(H);
      CHECK(pair.first == pair.second);
      expected.insert(pair);
    }
    const auto diag = ca_diagonal(D);
    CHECK(std::set<std::pair<F2Subspace, F2Subspace>>(diag.begin(), diag.end()) ==
          expected);
  }
}
