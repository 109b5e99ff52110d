#include "asr/interval_set.hpp"

#include <algorithm>
#include <cstdlib>

#include "asr/error.hpp"
#include "asr/tableaux.hpp"

namespace asr {

namespace {

void check_member(Interval I, int D) {
  if (!in_range(I, D) || !equal_parity(I)) {
    throw InvalidInput("interval [" + std::to_string(I.a) + "," +
                       std::to_string(I.b) + "] is not an equal-parity interval in [1," +
                       std::to_string(D) + "]");
  }
}

void check_ambient(int D) {
  if (D < 0 || D % 2 != 0) {
    throw InvalidInput("ambient size must be even and nonnegative, got " + std::to_string(D));
  }
}

// All equal-parity intervals of [1,D], lexicographic.
std::vector<Interval> parity_intervals(int D, int only_kappa = -1) {
  std::vector<Interval> out;
  for (int a = 1; a <= D; ++a) {
    if (only_kappa >= 0 && (a & 1) != only_kappa) continue;
    for (int b = a; b <= D; b += 2) out.push_back({a, b});
  }
  return out;
}

}  // namespace

IntervalSet::IntervalSet(int ambient, std::vector<Interval> members)
    : D(ambient), intervals(std::move(members)) {
  check_ambient(D);
  for (Interval I : intervals) check_member(I, D);
  std::sort(intervals.begin(), intervals.end());
  intervals.erase(std::unique(intervals.begin(), intervals.end()), intervals.end());
}

bool IntervalSet::contains(Interval I) const {
  return std::binary_search(intervals.begin(), intervals.end(), I);
}

Verdict validate(const IntervalSet& B) {
  check_ambient(B.D);
  for (Interval I : B.intervals) check_member(I, B.D);
  // P0 first, scanning pairs in lexicographic order so the first hit is the
  // least witness.
  for (std::size_t i = 0; i < B.intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < B.intervals.size(); ++j) {
      if (relate(B.intervals[i], B.intervals[j]) == Relation::Entangled) {
        return {Verdict::Kind::ViolatesP0, B.intervals[i], B.intervals[j], 0};
      }
    }
  }
  for (Interval I : B.intervals) {
    for (int x : even_interior(I)) {
      bool covered = false;
      for (Interval J : B.intervals) {
        if (J.a <= x && x <= J.b && relate(J, I) == Relation::NestedIn) {
          covered = true;
          break;
        }
      }
      if (!covered) return {Verdict::Kind::ViolatesP1, I, I, x};
    }
  }
  return {};
}

bool is_basis(const IntervalSet& B) { return validate(B).ok(); }

bool is_reduced(const IntervalSet& B) {
  if (!is_basis(B)) return false;
  for (Interval I : B.intervals) {
    if (kappa(I) == 0 && multiplicity(I, B) == 1) return false;
  }
  return true;
}

int multiplicity(Interval I, const IntervalSet& B) {
  if (!B.contains(I)) {
    throw InvalidInput("multiplicity: interval is not a member of the set");
  }
  int m = 0;
  for (Interval J : B.intervals) {
    if (J.a <= I.a && I.b <= J.b) ++m;
  }
  return m;
}

AdmissibleSequence descent_chain(Interval I, const IntervalSet& B) {
  if (!is_basis(B)) throw InvalidInput("descent_chain: not a basis set");
  if (!B.contains(I)) throw InvalidInput("descent_chain: interval is not a member");
  if (I.a == I.b) throw InvalidInput("descent_chain: singleton has empty interior");
  const int m = multiplicity(I, B);
  AdmissibleSequence chain;
  for (Interval J : B.intervals) {
    if (relate(J, I) == Relation::NestedIn && multiplicity(J, B) == m + 1) {
      chain.push_back(J);
    }
  }
  std::sort(chain.begin(), chain.end());
  if (!admissible_kappa(chain) || chain.front().a != I.a + 1 || chain.back().b != I.b - 1) {
    throw InternalError("descent_chain: chain fails the admissibility laws");
  }
  return chain;
}

RunDecomposition maximal_runs(std::span<const Interval> intervals) {
  std::vector<Interval> sorted(intervals.begin(), intervals.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (kappa(sorted[i]) != 1) {
      throw InvalidInput("maximal_runs: member with even parity");
    }
    if (i > 0 && relate(sorted[i - 1], sorted[i]) != Relation::Apart) {
      throw InvalidInput("maximal_runs: members are not pairwise apart");
    }
  }
  RunDecomposition rd;
  for (Interval I : sorted) {
    const int gap = rd.runs.empty() ? 0 : I.a - rd.runs.back().back().b;
    if (!rd.runs.empty() && gap == 2) {
      rd.runs.back().push_back(I);
    } else {
      if (!rd.runs.empty()) rd.gaps.push_back(gap);
      rd.runs.push_back({I});
    }
  }
  return rd;
}

IntervalSet reduce(const IntervalSet& B) {
  if (!is_basis(B)) throw InvalidInput("reduce: not a basis set");
  std::vector<Interval> kept;
  for (Interval I : B.intervals) {
    if (!(kappa(I) == 0 && multiplicity(I, B) == 1)) kept.push_back(I);
  }
  return IntervalSet(B.D, std::move(kept));
}

std::vector<Interval> growth_set(const IntervalSet& B) {
  if (!is_reduced(B)) throw InvalidInput("growth_set: not a reduced basis set");
  std::vector<Interval> maximal;
  for (Interval I : B.intervals) {
    if (multiplicity(I, B) == 1) maximal.push_back(I);
  }
  const RunDecomposition rd = maximal_runs(maximal);
  const int s = static_cast<int>(rd.runs.size());

  std::vector<Interval> Z;
  for (const AdmissibleSequence& run : rd.runs) {
    if (run.front().a >= 2) Z.push_back({run.front().a - 1, run.back().b + 1});
  }
  auto add_singletons = [&Z](int lo, int hi) {  // even u with lo < u <= hi
    for (int u = lo + 1; u <= hi; ++u) {
      if (u % 2 == 0) Z.push_back({u, u});
    }
  };
  if (s == 0) {
    add_singletons(1, B.D);
  } else {
    add_singletons(1, rd.runs.front().front().a - 2);
    for (int i = 1; i < s; ++i) {
      add_singletons(rd.runs[i - 1].back().b + 1, rd.runs[i].front().a - 2);
    }
    add_singletons(rd.runs.back().back().b + 1, B.D);
  }
  std::sort(Z.begin(), Z.end());
  return Z;
}

std::vector<IntervalSet> fibre(const IntervalSet& B) {
  const std::vector<Interval> Z = growth_set(B);
  std::vector<IntervalSet> out;
  out.reserve(std::size_t{1} << Z.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << Z.size()); ++mask) {
    std::vector<Interval> members = B.intervals;
    for (std::size_t i = 0; i < Z.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) members.push_back(Z[i]);
    }
    out.emplace_back(B.D, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntervalSet saturate(const IntervalSet& B) {
  std::vector<Interval> members = B.intervals;
  for (Interval I : growth_set(B)) members.push_back(I);
  IntervalSet full(B.D, std::move(members));
  if (full.size() != B.D / 2) {
    throw InternalError("saturate: completion does not reach cardinality D/2");
  }
  return full;
}

namespace {

int initial_ceiling() {
  if (const char* env = std::getenv("ASR_D_CEILING")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;
}

int& ceiling_ref() {
  static int ceiling = initial_ceiling();
  return ceiling;
}

void check_enumerable(int D) {
  check_ambient(D);
  if (D > enumeration_ceiling()) {
    throw ResourceLimit("enumeration requested for D = " + std::to_string(D) +
                        " above the ceiling " + std::to_string(enumeration_ceiling()));
  }
}

}  // namespace

int enumeration_ceiling() { return ceiling_ref(); }

void set_enumeration_ceiling(int ceiling) {
  if (ceiling < 0) throw InvalidInput("negative enumeration ceiling");
  ceiling_ref() = ceiling;
}

std::vector<IntervalSet> enumerate_sets(int D, Filter filter) {
  check_enumerable(D);
  std::vector<IntervalSet> out;
  for (const DottedSet& C : enumerate_dotted(D)) {
    const IntervalSet reduced = undot(C);
    switch (filter) {
      case Filter::Reduced:
        out.push_back(reduced);
        break;
      case Filter::Half:
        out.push_back(saturate(reduced));
        break;
      case Filter::All: {
        std::vector<IntervalSet> fib = fibre(reduced);
        out.insert(out.end(), fib.begin(), fib.end());
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntervalSet> brute_force_enumerate(int D) {
  check_ambient(D);
  if (D > 8) {
    throw ResourceLimit("brute_force_enumerate: power set too large for D = " +
                        std::to_string(D));
  }
  const std::vector<Interval> all = parity_intervals(D);
  std::vector<IntervalSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
    std::vector<Interval> members;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) members.push_back(all[i]);
    }
    IntervalSet B(D, std::move(members));
    if (validate(B).ok()) out.push_back(std::move(B));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void dfs_extend(const std::vector<Interval>& cands, std::size_t start, int D,
                std::vector<Interval>& chosen, std::vector<IntervalSet>& out) {
  {
    IntervalSet B(D, chosen);
    if (validate(B).ok()) out.push_back(std::move(B));
  }
  for (std::size_t i = start; i < cands.size(); ++i) {
    bool compatible = true;
    for (Interval J : chosen) {
      const Relation r = relate(cands[i], J);
      if (r == Relation::Entangled) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    chosen.push_back(cands[i]);
    dfs_extend(cands, i + 1, D, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<IntervalSet> dfs_enumerate(int D) {
  check_enumerable(D);
  const std::vector<Interval> cands = parity_intervals(D);
  std::vector<Interval> chosen;
  std::vector<IntervalSet> out;
  dfs_extend(cands, 0, D, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace asr
