#include "nnml/gen.hpp"

namespace nnml {

Fm randomFormula(Arena& ar, Rng& rng, Lang lang,
                 const std::vector<AtomId>& atoms, int weight) {
  if (weight <= 0) {
    if (rng.chance(12)) return ar.bot();
    return ar.var(atoms[rng.below(static_cast<uint32_t>(atoms.size()))]);
  }
  uint32_t pick = rng.below(4);
  if (pick == 3) {
    if (lang == Lang::Modal)
      return ar.box(randomFormula(ar, rng, lang, atoms, weight - 1));
    int split = static_cast<int>(rng.below(static_cast<uint32_t>(weight)));
    return ar.cond(randomFormula(ar, rng, lang, atoms, split),
                   randomFormula(ar, rng, lang, atoms, weight - 1 - split));
  }
  int split = static_cast<int>(rng.below(static_cast<uint32_t>(weight)));
  Fm a = randomFormula(ar, rng, lang, atoms, split);
  Fm b = randomFormula(ar, rng, lang, atoms, weight - 1 - split);
  switch (pick) {
    case 0:
      return ar.conj(a, b);
    case 1:
      return ar.disj(a, b);
    default:
      return ar.imp(a, b);
  }
}

Sequent randomSequent(Arena& ar, Rng& rng, Lang lang,
                      const std::vector<AtomId>& atoms, int maxWeight,
                      int maxSide) {
  uint32_t nAnt = rng.below(static_cast<uint32_t>(maxSide) + 1);
  uint32_t nSuc = rng.below(static_cast<uint32_t>(maxSide) + 1);
  int budget = maxWeight;
  std::vector<Fm> ant, suc;
  for (uint32_t i = 0; i < nAnt + nSuc; i++) {
    int w = static_cast<int>(rng.below(static_cast<uint32_t>(budget) + 1));
    budget -= w;
    Fm f = randomFormula(ar, rng, lang, atoms, w);
    if (i < nAnt)
      ant.push_back(f);
    else
      suc.push_back(f);
  }
  return Sequent(std::move(ant), std::move(suc));
}

Fm foldSequent(Arena& ar, const Sequent& s) {
  auto fold = [&](const std::vector<Fm>& v, bool conj) -> Fm {
    if (v.empty()) return conj ? ar.top() : ar.bot();
    Fm acc = v.back();
    for (size_t i = v.size() - 1; i-- > 0;)
      acc = conj ? ar.conj(v[i], acc) : ar.disj(v[i], acc);
    return acc;
  };
  Fm rhs = fold(s.suc, false);
  if (s.ant.empty()) return rhs;
  return ar.imp(fold(s.ant, true), rhs);
}

}  // namespace nnml
