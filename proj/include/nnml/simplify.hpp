#pragma once

#include <unordered_map>

#include "nnml/syntax.hpp"

namespace nnml {

// Conservative, equivalence-preserving normalizer: top/bottom absorption,
// flattening with duplicate removal and canonical ordering of and/or spines,
// and double negation on the abbreviation level. Never introduces atoms and
// never grows the positive/negative variable sets.
class Simplifier {
 public:
  explicit Simplifier(Arena& ar) : ar_(ar) {}

  Fm simplify(Fm f);

 private:
  Fm rebuild(Tag t, std::vector<Fm>& parts);

  Arena& ar_;
  std::unordered_map<Fm, Fm> memo_;
};

}  // namespace nnml
