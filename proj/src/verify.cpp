#include "nnml/verify.hpp"

#include <algorithm>

namespace nnml {

std::vector<Fm> formulaUniverse(Arena& ar, Simplifier& simp, Lang lang,
                                const std::vector<AtomId>& alphabet,
                                int maxWeight) {
  // layers[w] holds representatives reachable from raw formulas of weight
  // exactly w; composing representatives covers every raw composition
  std::vector<std::vector<Fm>> layers(maxWeight + 1);
  std::vector<Fm> all;
  std::unordered_map<Fm, bool> seen;

  auto add = [&](int rawWeight, Fm f) {
    Fm r = simp.simplify(f);
    if (!seen.emplace(r, true).second) {
      // still part of this raw layer for later composition
      auto& layer = layers[rawWeight];
      if (std::find(layer.begin(), layer.end(), r) == layer.end())
        layer.push_back(r);
      return;
    }
    layers[rawWeight].push_back(r);
    all.push_back(r);
  };

  add(0, ar.bot());
  for (AtomId a : alphabet) add(0, ar.var(a));
  for (int w = 1; w <= maxWeight; w++) {
    for (int wl = 0; wl < w; wl++) {
      int wr = w - 1 - wl;
      for (Fm a : layers[wl])
        for (Fm b : layers[wr]) {
          add(w, ar.conj(a, b));
          add(w, ar.disj(a, b));
          add(w, ar.imp(a, b));
          if (lang == Lang::Conditional) add(w, ar.cond(a, b));
        }
    }
    if (lang == Lang::Modal)
      for (Fm a : layers[w - 1]) add(w, ar.box(a));
  }
  std::sort(all.begin(), all.end(), ltFm);
  return all;
}

namespace {

std::string describeSide(const Sequent& s) { return printSequent(s); }

bool freeFor(Fm f, AtomId p, std::optional<Pol> pol, bool antecedent) {
  if (!pol) return isPlainFree(f, p);
  return isFree(f, p, antecedent ? *pol : dual(*pol));
}

// Sound unprovability filters. Two readings of the non-propositional
// connectives turn every rule of every calculus into a classically valid
// step: boxes and conditionals as plain truth, and boxes erased with the
// conditional as implication. A provable sequent therefore stays valid
// under both, and rows witnessing invalidity certify unprovability. Rows
// are truth assignments of at most six atoms.
struct AbstractRows {
  std::vector<AtomId> atoms;
  uint64_t full = 0;
  bool usable = false;
  bool opaque;  // true: box/cond read as true; false: erased/implication
  std::unordered_map<Fm, uint64_t> memo;

  explicit AbstractRows(bool opaqueMode) : opaque(opaqueMode) {}

  void init(uint64_t varMask) {
    atoms.clear();
    memo.clear();
    for (AtomId a = 0; a < Arena::kMaxAtoms; a++)
      if (varMask >> a & 1) atoms.push_back(a);
    usable = atoms.size() <= 6;
    if (usable)
      full = atoms.size() == 6 ? ~0ull : (1ull << (1u << atoms.size())) - 1;
  }

  uint64_t atomRows(AtomId a) const {
    size_t idx = 0;
    while (atoms[idx] != a) idx++;
    uint64_t rows = 0;
    for (uint32_t r = 0; r < (1u << atoms.size()); r++)
      if (r >> idx & 1) rows |= 1ull << r;
    return rows;
  }

  uint64_t rows(Fm f) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    uint64_t out;
    switch (f->tag) {
      case Tag::Bot:
        out = 0;
        break;
      case Tag::Var:
        out = atomRows(f->atom);
        break;
      case Tag::And:
        out = rows(f->l) & rows(f->r);
        break;
      case Tag::Or:
        out = rows(f->l) | rows(f->r);
        break;
      case Tag::Imp:
        out = (~rows(f->l) & full) | rows(f->r);
        break;
      case Tag::Box:
        out = opaque ? full : rows(f->l);
        break;
      case Tag::Cond:
        out = opaque ? full : ((~rows(f->l) & full) | rows(f->r));
        break;
    }
    memo.emplace(f, out);
    return out;
  }
};

// both abstractions over one atom set, with the pending rows of a fixed
// base sequent folded in
struct UnprovabilityFilter {
  AbstractRows top{true};
  AbstractRows flat{false};
  uint64_t pendTop = 0, pendFlat = 0;
  bool usable = false;

  void init(uint64_t varMask, const Sequent& base) {
    top.init(varMask);
    flat.init(varMask);
    usable = top.usable;
    if (!usable) return;
    pendTop = top.full;
    pendFlat = flat.full;
    for (Fm f : base.ant) {
      pendTop &= top.rows(f);
      pendFlat &= flat.rows(f);
    }
    for (Fm f : base.suc) {
      pendTop &= ~top.rows(f);
      pendFlat &= ~flat.rows(f);
    }
    pendTop &= top.full;
    pendFlat &= flat.full;
  }

  // true when base . side is certainly unprovable
  bool unprovable(const Sequent& side) {
    if (!usable) return false;
    uint64_t badTop = pendTop, badFlat = pendFlat;
    for (Fm f : side.ant) {
      badTop &= top.rows(f);
      badFlat &= flat.rows(f);
    }
    for (Fm f : side.suc) {
      badTop &= ~top.rows(f);
      badFlat &= ~flat.rows(f);
    }
    return (badTop & top.full) || (badFlat & flat.full);
  }
};

}  // namespace

InterpolantReport verifyInterpolant(Interpolator& interp, const Sequent& s,
                                    AtomId p, std::optional<Pol> pol,
                                    Fm candidate, int bound,
                                    const std::vector<AtomId>& alphabet,
                                    int maxSide) {
  Arena& ar = interp.arena();
  Prover& pv = interp.prover();
  LogicId logic = interp.logic();
  InterpolantReport rep;
  rep.interpolant = candidate;
  rep.bound = bound;
  rep.alphabet = alphabet;

  // (var)
  rep.varFree = pol ? isFree(candidate, p, *pol) : isPlainFree(candidate, p);
  rep.varSubsets = (posVars(candidate) & ~seqVars(s, Pol::Pos)) == 0 &&
                   (negVars(candidate) & ~seqVars(s, Pol::Neg)) == 0;
  if (!rep.varFree) rep.violations.push_back({"var", "not free in the atom"});
  if (!rep.varSubsets)
    rep.violations.push_back({"var", "variables exceed those of the sequent"});

  // (i)
  Sequent withCand = compose(s, Sequent({candidate}, {}));
  rep.proofOfI = pv.prove(logic, withCand);
  if (!rep.proofOfI)
    rep.violations.push_back({"i", describeSide(withCand)});

  // (ii): sides are p-free in the dual sense; antecedent members carry the
  // quantified polarity, succedent members its dual
  std::vector<Fm> pool =
      formulaUniverse(ar, interp.simplifier(), logicLang(logic), alphabet,
                      bound);
  std::vector<Fm> antPool, sucPool;
  for (Fm f : pool) {
    if (freeFor(f, p, pol, true)) antPool.push_back(f);
    if (freeFor(f, p, pol, false)) sucPool.push_back(f);
  }

  uint64_t alphaMask = 0;
  for (AtomId a : alphabet) alphaMask |= 1ull << a;
  UnprovabilityFilter filter;
  filter.init(seqVarsAll(s) | vars(candidate) | alphaMask, s);

  auto checkSide = [&](const Sequent& side) {
    rep.checked++;
    if (filter.unprovable(side)) return;  // the implication holds vacuously
    if (!pv.decide(logic, compose(s, side))) return;
    Sequent goal = addSuc(side, candidate);
    if (!pv.decide(logic, goal))
      rep.violations.push_back({"ii", describeSide(side)});
  };

  checkSide(Sequent({}, {}));
  for (Fm f : antPool) checkSide(Sequent({f}, {}));
  for (Fm f : sucPool) checkSide(Sequent({}, {f}));
  if (maxSide >= 2) {
    // pairs split the weight budget with the implicit connective
    for (Fm f : antPool) {
      if (f->w >= bound) continue;
      for (Fm g : antPool)
        if (f->w + g->w < bound && !ltFm(g, f)) checkSide(Sequent({f, g}, {}));
      for (Fm g : sucPool)
        if (f->w + g->w < bound) checkSide(Sequent({f}, {g}));
    }
    for (Fm f : sucPool) {
      if (f->w >= bound) continue;
      for (Fm g : sucPool)
        if (f->w + g->w < bound && !ltFm(g, f)) checkSide(Sequent({}, {f, g}));
    }
  }
  return rep;
}

InterpolantReport verifyExistsFormula(Interpolator& interp, Fm f, AtomId p,
                                      std::optional<Pol> pol, Fm candidate,
                                      int bound,
                                      const std::vector<AtomId>& alphabet) {
  Prover& pv = interp.prover();
  LogicId logic = interp.logic();
  InterpolantReport rep;
  rep.interpolant = candidate;
  rep.bound = bound;
  rep.alphabet = alphabet;

  rep.varFree = pol ? isFree(candidate, p, *pol) : isPlainFree(candidate, p);
  rep.varSubsets = (posVars(candidate) & ~posVars(f)) == 0 &&
                   (negVars(candidate) & ~negVars(f)) == 0;
  if (!rep.varFree) rep.violations.push_back({"var", "not free in the atom"});
  if (!rep.varSubsets)
    rep.violations.push_back({"var", "variables exceed those of the input"});

  Sequent intro({f}, {candidate});
  rep.proofOfI = pv.prove(logic, intro);
  if (!rep.proofOfI) rep.violations.push_back({"iii", describeSide(intro)});

  std::vector<Fm> pool = formulaUniverse(
      interp.arena(), interp.simplifier(), logicLang(logic), alphabet, bound);
  uint64_t alphaMask = 0;
  for (AtomId a : alphabet) alphaMask |= 1ull << a;
  UnprovabilityFilter filter;
  filter.init(vars(f) | vars(candidate) | alphaMask, Sequent({f}, {}));
  for (Fm psi : pool) {
    bool free = pol ? isFree(psi, p, *pol) : isPlainFree(psi, p);
    if (!free) continue;
    rep.checked++;
    if (filter.unprovable(Sequent({}, {psi}))) continue;
    if (!pv.decide(logic, Sequent({f}, {psi}))) continue;
    if (!pv.decide(logic, Sequent({candidate}, {psi})))
      rep.violations.push_back({"iv", printFormula(psi)});
  }
  return rep;
}

std::optional<Fm> searchCraigInterpolant(Arena& ar, Prover& pv, LogicId logic,
                                         Fm lhs, Fm rhs,
                                         const std::vector<AtomId>& alphabet,
                                         int bound) {
  if (!pv.decide(logic, Sequent({lhs}, {rhs})))
    throw std::invalid_argument("searchCraigInterpolant: not provable");
  Simplifier simp(ar);
  std::vector<Fm> pool =
      formulaUniverse(ar, simp, logicLang(logic), alphabet, bound);
  std::stable_sort(pool.begin(), pool.end(),
                   [](Fm a, Fm b) { return a->w < b->w; });
  uint64_t alphaMask = 0;
  for (AtomId a : alphabet) alphaMask |= 1ull << a;
  UnprovabilityFilter fromLhs, toRhs;
  fromLhs.init(vars(lhs) | vars(rhs) | alphaMask, Sequent({lhs}, {}));
  toRhs.init(vars(lhs) | vars(rhs) | alphaMask, Sequent({}, {rhs}));
  for (Fm theta : pool) {
    if (fromLhs.unprovable(Sequent({}, {theta}))) continue;
    if (toRhs.unprovable(Sequent({theta}, {}))) continue;
    if (pv.decide(logic, Sequent({lhs}, {theta})) &&
        pv.decide(logic, Sequent({theta}, {rhs})))
      return theta;
  }
  return std::nullopt;
}

}  // namespace nnml
