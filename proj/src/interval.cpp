#include "asr/interval.hpp"

#include "asr/error.hpp"

namespace asr {

bool well_formed(Interval I) { return 1 <= I.a && I.a <= I.b; }

bool in_range(Interval I, int D) { return well_formed(I) && I.b <= D; }

bool equal_parity(Interval I) { return (I.a & 1) == (I.b & 1); }

int kappa(Interval I) {
  if (!well_formed(I) || !equal_parity(I)) {
    throw InvalidInput("kappa: interval [" + std::to_string(I.a) + "," +
                       std::to_string(I.b) + "] has no parity class");
  }
  return I.a & 1;
}

Relation relate(Interval I, Interval J) {
  if (!well_formed(I) || !well_formed(J)) {
    throw InvalidInput("relate: malformed interval");
  }
  if (I == J) return Relation::Equal;
  if (J.a < I.a && I.b < J.b) return Relation::NestedIn;
  if (I.a < J.a && J.b < I.b) return Relation::Contains;
  if (J.a - I.b >= 2 || I.a - J.b >= 2) return Relation::Apart;
  return Relation::Entangled;
}

std::vector<int> even_interior(Interval I) {
  kappa(I);  // validates parity
  std::vector<int> out;
  for (int x = I.a + 1; x < I.b; x += 2) out.push_back(x);
  return out;
}

std::string to_digits(Interval I) {
  std::string s;
  for (int x = I.a; x <= I.b; ++x) s += std::to_string(x);
  return s;
}

std::optional<int> admissible_kappa(std::span<const Interval> seq) {
  if (seq.empty()) return std::nullopt;
  int parity;
  try {
    parity = kappa(seq.front());
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Interval I = seq[i];
    if (!well_formed(I) || !equal_parity(I) || (I.a & 1) != parity) {
      return std::nullopt;
    }
    if (i > 0 && I.a - seq[i - 1].b != 2) return std::nullopt;
  }
  return parity;
}

}  // namespace asr
