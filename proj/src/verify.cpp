#include "asr/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "asr/error.hpp"
#include "asr/exceptional.hpp"
#include "asr/f2.hpp"
#include "asr/interval_set.hpp"
#include "asr/symplectic.hpp"
#include "asr/tableaux.hpp"

namespace asr {

namespace {

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

CheckResult result(std::string name, bool pass, std::string detail = "") {
  return {std::move(name), pass, std::move(detail)};
}

std::string d_tag(int D) { return "D=" + std::to_string(D); }

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_counts(int d_max) {
  std::vector<CheckResult> out;
  for (int D = 0; D <= d_max; D += 2) {
    const long expected = catalan((D + 2) / 2);
    const long half = static_cast<long>(enumerate_sets(D, Filter::Half).size());
    const long reduced = static_cast<long>(enumerate_sets(D, Filter::Reduced).size());
    const long symbols = static_cast<long>(enumerate_symbols(D).size());
    const bool pass = half == expected && reduced == expected && symbols == expected;
    out.push_back(result(
        "counts/" + d_tag(D), pass,
        "half=" + std::to_string(half) + " reduced=" + std::to_string(reduced) +
            " symbols=" + std::to_string(symbols) + " catalan=" + std::to_string(expected)));
  }
  return out;
}

std::vector<CheckResult> verify_oracle(int d_max) {
  std::vector<CheckResult> out;
  for (int D = 0; D <= std::min(d_max, 8); D += 2) {
    const std::vector<IntervalSet> fast = enumerate_sets(D, Filter::All);
    const std::vector<IntervalSet> brute = brute_force_enumerate(D);
    out.push_back(result("oracle/power-set/" + d_tag(D), fast == brute,
                         "enumerate=" + std::to_string(fast.size()) +
                             " brute=" + std::to_string(brute.size())));
  }
  for (int D = 0; D <= d_max; D += 2) {
    const bool same = enumerate_sets(D, Filter::All) == dfs_enumerate(D);
    out.push_back(result("oracle/dfs/" + d_tag(D), same));
  }
  return out;
}

std::vector<CheckResult> verify_roundtrip(int d_max) {
  std::vector<CheckResult> out;
  for (int D = 0; D <= d_max; D += 2) {
    const std::vector<IntervalSet> all = enumerate_sets(D, Filter::All);
    const std::vector<IntervalSet> half = enumerate_sets(D, Filter::Half);
    const std::vector<IntervalSet> reduced = enumerate_sets(D, Filter::Reduced);

    bool reduce_ok = true;
    for (const IntervalSet& B : all) {
      const IntervalSet r = reduce(B);
      if (!is_reduced(r) || reduce(r) != r) reduce_ok = false;
    }
    for (const IntervalSet& B : half) {
      if (saturate(reduce(B)) != B) reduce_ok = false;
    }
    for (const IntervalSet& B : reduced) {
      if (reduce(saturate(B)) != B) reduce_ok = false;
      // The fibre is exactly the preimage of B under reduce.
      const std::vector<IntervalSet> fib = fibre(B);
      std::vector<IntervalSet> pre;
      for (const IntervalSet& Bp : all) {
        if (reduce(Bp) == B) pre.push_back(Bp);
      }
      if (fib != pre) reduce_ok = false;
    }
    out.push_back(result("roundtrip/reduce-saturate/" + d_tag(D), reduce_ok));

    bool dot_ok = true;
    for (const IntervalSet& B : reduced) {
      if (undot(dot(B)) != B) dot_ok = false;
    }
    for (const DottedSet& C : enumerate_dotted(D)) {
      if (dot(undot(C)) != C) dot_ok = false;
    }
    out.push_back(result("roundtrip/dot-undot/" + d_tag(D), dot_ok));

    bool shift_ok = true;
    bool pairs_ok = true;
    std::set<DistinguishedSymbol> images;
    for (const DottedSet& C : enumerate_dotted(D)) {
      const ShiftedTableau X = shift(C);
      if (unshift(X) != C) shift_ok = false;
      const PairTableau mu = tableau_to_pairs(X);
      const DistinguishedSymbol sym = pairs_to_symbol(mu);
      if (symbol_to_pairs(sym) != mu) pairs_ok = false;
      images.insert(sym);
    }
    // pairs_to_symbol also inverts symbol_to_pairs on the whole symbol family.
    for (const DistinguishedSymbol& sym : enumerate_symbols(D)) {
      if (pairs_to_symbol(symbol_to_pairs(sym)) != sym) pairs_ok = false;
      if (!images.count(sym)) pairs_ok = false;
    }
    out.push_back(result("roundtrip/shift-unshift/" + d_tag(D), shift_ok));
    out.push_back(result("roundtrip/pairs-symbol/" + d_tag(D), pairs_ok));
  }
  return out;
}

std::vector<CheckResult> verify_epsilon(int d_max) {
  std::vector<CheckResult> out;
  for (int D = 0; D <= d_max; D += 2) {
    const std::vector<IntervalSet> all = enumerate_sets(D, Filter::All);

    bool agree = true;
    std::set<F2Vector> images;
    for (const IntervalSet& B : all) {
      const F2Vector v = epsilon(B);
      if (v != epsilon_odd_multiplicity(B)) agree = false;
      images.insert(v);
    }
    out.push_back(result("epsilon/two-routes/" + d_tag(D), agree));
    out.push_back(result("epsilon/injective/" + d_tag(D), images.size() == all.size(),
                         std::to_string(images.size()) + " images of " +
                             std::to_string(all.size()) + " sets"));

    bool rows_agree = true;
    bool symbol_agree = true;
    std::set<DistinguishedSymbol> symbol_images;
    for (const IntervalSet& B : enumerate_sets(D, Filter::Reduced)) {
      const ShiftedTableau X = shift(dot(B));
      if (epsilon(B) != epsilon_rows(X)) rows_agree = false;
      // The coordinate route through f lands on the combinatorial symbol.
      const DistinguishedSymbol sym = symbol_of(B);
      if (f_map(epsilon_rows(X)) != as_unordered(sym)) symbol_agree = false;
      symbol_images.insert(sym);
    }
    const std::vector<DistinguishedSymbol> symbols = enumerate_symbols(D);
    const bool onto =
        symbol_images.size() == symbols.size() &&
        std::equal(symbol_images.begin(), symbol_images.end(), symbols.begin());
    out.push_back(result("epsilon/rows/" + d_tag(D), rows_agree));
    out.push_back(result("epsilon/symbol-factorization/" + d_tag(D), symbol_agree));
    out.push_back(result("epsilon/symbol-bijection/" + d_tag(D), onto));
  }
  return out;
}

std::vector<CheckResult> verify_lattice(int d_max) {
  std::vector<CheckResult> out;
  for (int D = 0; D <= d_max; D += 2) {
    const std::vector<IntervalSet> all = enumerate_sets(D, Filter::All);
    const std::vector<IntervalSet> half = enumerate_sets(D, Filter::Half);
    const std::vector<IntervalSet> reduced = enumerate_sets(D, Filter::Reduced);
    const std::vector<F2Subspace> cc = cc_odd(D);

    // phi is injective onto the admissible pairs.
    std::set<std::pair<F2Subspace, F2Subspace>> pair_images;
    for (const IntervalSet& B : all) pair_images.insert(phi(B));
    out.push_back(result("lattice/phi-bijective/" + d_tag(D),
                         pair_images.size() == all.size() &&
                             pair_images.size() == ca_odd(D).size()));

    auto odd_parts = [&](const std::vector<IntervalSet>& family) {
      std::set<F2Subspace> parts;
      for (const IntervalSet& B : family) parts.insert(span_parts(B).odd);
      return parts;
    };
    const std::set<F2Subspace> from_half = odd_parts(half);
    const std::set<F2Subspace> from_reduced = odd_parts(reduced);
    const bool cc_match =
        from_half.size() == half.size() && from_reduced.size() == reduced.size() &&
        from_half.size() == cc.size() &&
        std::equal(from_half.begin(), from_half.end(), cc.begin()) &&
        from_half == from_reduced;
    out.push_back(result("lattice/odd-part-bijections/" + d_tag(D), cc_match));

    // Unique maximal partner, and the reduced sets hit exactly those pairs.
    bool lmax_ok = true;
    std::set<std::pair<F2Subspace, F2Subspace>> star_pairs;
    try {
      for (const F2Subspace& L : cc) star_pairs.insert({L, l_max(L, D)});
    } catch (const Error&) {
      lmax_ok = false;
    }
    std::set<std::pair<F2Subspace, F2Subspace>> from_reduced_pairs;
    for (const IntervalSet& B : reduced) from_reduced_pairs.insert(phi(B));
    if (lmax_ok) {
      lmax_ok = star_pairs == from_reduced_pairs &&
                from_reduced_pairs.size() == reduced.size();
    }
    out.push_back(result("lattice/l-max/" + d_tag(D), lmax_ok));

    // Fibre growth: adjoining U adds |U| to the even-part dimension, and the
    // odd part never moves.
    bool fibre_ok = true;
    for (const IntervalSet& B : reduced) {
      const SpanParts base = span_parts(B);
      for (const IntervalSet& Bu : fibre(B)) {
        const SpanParts parts = span_parts(Bu);
        if (parts.odd != base.odd) fibre_ok = false;
        if (parts.even.dim() != base.even.dim() + (Bu.size() - B.size())) fibre_ok = false;
      }
    }
    out.push_back(result("lattice/fibre-dimensions/" + d_tag(D), fibre_ok));
  }
  return out;
}

std::vector<CheckResult> verify_shift_examples() {
  struct Example {
    std::vector<Interval> dotted;
    std::vector<Interval> shifted;
  };
  // The worked row-shift examples, smallest ambient that fits each.
  const std::vector<Example> examples = {
      {{{1, 5}, {3, 3}}, {{1, 3}, {3, 5}}},
      {{{1, 7}, {3, 3}}, {{1, 3}, {3, 7}}},
      {{{1, 7}, {5, 5}}, {{1, 5}, {5, 7}}},
      {{{1, 7}, {3, 3}, {5, 5}}, {{1, 3}, {3, 5}, {5, 7}}},
      {{{1, 7}, {3, 5}}, {{1, 5}, {3, 7}}},
      {{{1, 9}, {3, 7}, {5, 5}}, {{1, 5}, {3, 7}, {5, 9}}},
      {{{1, 1}, {3, 3}}, {{1, 1}, {3, 3}}},
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    int D = 0;
    for (Interval I : examples[i].dotted) D = std::max(D, I.b + 1);
    const DottedSet C(D, examples[i].dotted);
    const ShiftedTableau expected{D, examples[i].shifted};
    const ShiftedTableau got = shift(C);
    const bool pass = got == expected && unshift(got) == C;
    out.push_back(result("shift-example/" + std::to_string(i + 1), pass));
  }
  return out;
}

std::vector<CheckResult> verify_exceptional() {
  std::vector<CheckResult> out;
  const std::vector<int> sizes = {1, 2, 3, 4, 5, 11, 17};
  const std::map<int, std::size_t> expected_keys = {{1, 1}, {2, 2},  {3, 2}, {4, 3},
                                                    {5, 3}, {11, 6}, {17, 8}};
  for (int size : sizes) {
    const FamilyRecord& rec = family(size);
    bool shape = rec.keys.size() == expected_keys.at(size);
    for (Group key : rec.keys) {
      if (rec.lists.at(key).size() != rec.m_labels.at(key).size()) shape = false;
    }
    out.push_back(result("exceptional/shape/" + std::to_string(size), shape));

    bool unique_max = true;
    for (const auto& [key, ok] : check_unique_max(rec)) {
      (void)key;
      if (!ok) unique_max = false;
    }
    out.push_back(result("exceptional/unique-max/" + std::to_string(size), unique_max));

    bool as_ok = true;
    try {
      as_ok = almost_special_labels(rec) == rec.almost_special;
    } catch (const Error&) {
      as_ok = false;
    }
    out.push_back(result("exceptional/almost-special/" + std::to_string(size), as_ok));
  }

  // All known dimensions across the size-17 lists are distinct; exactly one
  // placeholder, on the last label of the S1 list.
  const FamilyRecord& e8 = family(17);
  std::set<long> dims;
  int unknowns = 0;
  std::size_t total = 0;
  for (const auto& [key, list] : e8_lists(e8)) {
    (void)key;
    for (const std::optional<long>& entry : list) {
      ++total;
      if (entry) {
        dims.insert(*entry);
      } else {
        ++unknowns;
      }
    }
  }
  out.push_back(result("exceptional/e8-dimensions", unknowns == 1 &&
                                                        dims.size() + 1 == total &&
                                                        !e8.e8_dims.at(Group::S1).back()));
  return out;
}

}  // namespace asr
