#pragma once

#include "nnml/sequent.hpp"

namespace nnml {

// splitmix64; stable across platforms and runs
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint32_t below(uint32_t n) {
    return n ? static_cast<uint32_t>(next() % n) : 0;
  }
  bool chance(uint32_t pct) { return below(100) < pct; }
};

Fm randomFormula(Arena& ar, Rng& rng, Lang lang,
                 const std::vector<AtomId>& atoms, int weight);

Sequent randomSequent(Arena& ar, Rng& rng, Lang lang,
                      const std::vector<AtomId>& atoms, int maxWeight,
                      int maxSide);

// reading of a sequent as a single formula
Fm foldSequent(Arena& ar, const Sequent& s);

}  // namespace nnml
