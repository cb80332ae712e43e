#include "nnml/interpolate.hpp"

#include <cassert>

namespace nnml {

Fm translateT(Arena& ar, Fm f) {
  switch (f->tag) {
    case Tag::Bot:
    case Tag::Var:
      return f;
    case Tag::And:
      return ar.conj(translateT(ar, f->l), translateT(ar, f->r));
    case Tag::Or:
      return ar.disj(translateT(ar, f->l), translateT(ar, f->r));
    case Tag::Imp:
      return ar.imp(translateT(ar, f->l), translateT(ar, f->r));
    case Tag::Box:
      return ar.cond(ar.top(), translateT(ar, f->l));
    case Tag::Cond:
      throw std::invalid_argument("translateT: conditional input");
  }
  return f;
}

Fm translateS(Arena& ar, Fm f) {
  switch (f->tag) {
    case Tag::Bot:
    case Tag::Var:
      return f;
    case Tag::And:
      return ar.conj(translateS(ar, f->l), translateS(ar, f->r));
    case Tag::Or:
      return ar.disj(translateS(ar, f->l), translateS(ar, f->r));
    case Tag::Imp:
      return ar.imp(translateS(ar, f->l), translateS(ar, f->r));
    case Tag::Cond:
      return ar.box(translateS(ar, f->r));  // the antecedent is discarded
    case Tag::Box:
      throw std::invalid_argument("translateS: modal input");
  }
  return f;
}

Interpolator::Interpolator(Arena& ar, Prover& pv, LogicId logic)
    : ar_(ar), pv_(pv), logic_(logic), simp_(ar) {
  if (hasUlip(logic))
    kind_ = Kind::Lyndon;
  else if (hasPlainUip(logic))
    kind_ = Kind::Plain;
  else
    throw std::invalid_argument(std::string(logicName(logic)) +
                                " has no uniform interpolation");
}

Fm Interpolator::simp(Fm f) {
  Fm g = subsume(simp_.simplify(f));
  if (debugChecks_ && g != f) {
    if (!pv_.decide(logic_, Sequent({f}, {g})) ||
        !pv_.decide(logic_, Sequent({g}, {f})))
      throw std::logic_error("simplifier produced a non-equivalent formula");
  }
  return g;
}

Fm Interpolator::subsume(Fm f) {
  if (f->tag != Tag::And && f->tag != Tag::Or) return f;
  std::vector<Fm> parts;
  for (Fm g = f;; g = g->r) {
    if (g->tag == f->tag) {
      parts.push_back(g->l);
    } else {
      parts.push_back(g);
      break;
    }
  }
  if (parts.size() < 2 || parts.size() > 40) return f;
  bool disj = f->tag == Tag::Or;
  std::vector<Fm> keep = parts;
  for (size_t i = 0; i < keep.size() && keep.size() > 1;) {
    std::vector<Fm> rest;
    for (size_t j = 0; j < keep.size(); j++)
      if (j != i) rest.push_back(keep[j]);
    Fm folded = disj ? orAll(rest) : andAll(rest);
    bool drop = disj ? pv_.decide(logic_, Sequent({keep[i]}, {folded}))
                     : pv_.decide(logic_, Sequent({folded}, {keep[i]}));
    if (drop)
      keep.erase(keep.begin() + i);
    else
      i++;
  }
  if (keep.size() == parts.size()) return f;
  return disj ? orAll(keep) : andAll(keep);
}

bool Interpolator::equivalent(Fm a, Fm b) {
  return pv_.decide(logic_, Sequent({a}, {b})) &&
         pv_.decide(logic_, Sequent({b}, {a}));
}

Fm Interpolator::orAll(std::vector<Fm>& xs) {
  if (xs.empty()) return ar_.bot();
  Fm acc = xs.back();
  for (size_t i = xs.size() - 1; i-- > 0;) acc = ar_.disj(xs[i], acc);
  return acc;
}

Fm Interpolator::andAll(std::vector<Fm>& xs) {
  if (xs.empty()) return ar_.top();
  Fm acc = xs.back();
  for (size_t i = xs.size() - 1; i-- > 0;) acc = ar_.conj(xs[i], acc);
  return acc;
}

Fm Interpolator::forallSequent(const Sequent& s, AtomId p, Pol pol) {
  if (kind_ != Kind::Lyndon)
    throw std::invalid_argument("polarity-aware interpolants need a Lyndon logic");
  return uni(s, p, pol);
}

Fm Interpolator::plainForallSequent(const Sequent& s, AtomId p) {
  if (kind_ != Kind::Plain)
    throw std::invalid_argument("plainForallSequent is for the CKCEM family");
  return uni(s, p, std::nullopt);
}

Fm Interpolator::axiomInterpolant(const Sequent& s, AtomId p,
                                  std::optional<Pol> pol) {
  if (pv_.decide(logic_, s)) return ar_.top();
  return axiomPart(s, p, pol);
}

Fm Interpolator::modalInterpolant(const Sequent& s, AtomId p,
                                  std::optional<Pol> pol) {
  if (pv_.decide(logic_, s)) return ar_.top();
  return modalPart(s, p, pol);
}

// the recursion of the general argument: T if provable, else the disjunction
// over backward-applicable structural rules, the axiom interpolant and the
// modal interpolant; descends on (weight, size)
Fm Interpolator::uni(const Sequent& s, AtomId p, std::optional<Pol> pol) {
  Key key{s, p, pol ? static_cast<uint8_t>(*pol) : uint8_t{2}};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Fm result;
  if (pv_.decide(logic_, s)) {
    result = ar_.top();
  } else {
    std::vector<Fm> disjuncts;
    for (const RuleInstance& inst : backwardInstances(logic_, s)) {
      switch (inst.rule) {
        case RuleId::LAnd:
        case RuleId::RAnd:
        case RuleId::LOr:
        case RuleId::ROr:
        case RuleId::LImp:
        case RuleId::RImp:
        case RuleId::Lw:
        case RuleId::Rw: {
          std::vector<Fm> conj;
          conj.reserve(inst.premises.size());
          for (const Sequent& prem : inst.premises)
            conj.push_back(uni(prem, p, pol));
          disjuncts.push_back(andAll(conj));
          break;
        }
        default:
          break;  // modal rules are handled by the modal interpolant
      }
    }
    disjuncts.push_back(axiomPart(s, p, pol));
    disjuncts.push_back(modalPart(s, p, pol));
    result = simp(orAll(disjuncts));
  }

  if (debugChecks_) {
    Pol free = pol.value_or(Pol::Pos);
    bool varOk = pol ? isFree(result, p, free) : isPlainFree(result, p);
    bool subset = (posVars(result) & ~seqVars(s, Pol::Pos)) == 0 &&
                  (negVars(result) & ~seqVars(s, Pol::Neg)) == 0;
    if (!varOk || !subset)
      throw std::logic_error("interpolant breaks the variable conditions");
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Fm Interpolator::axiomPart(const Sequent& s, AtomId p, std::optional<Pol> pol) {
  // disjunction of the usable succedent members and negated antecedent
  // members; empty disjunction is bottom
  std::vector<Fm> disj;
  for (Fm f : s.suc) {
    bool ok = pol ? isFree(f, p, *pol) : isPlainFree(f, p);
    if (ok) disj.push_back(f);
  }
  for (Fm f : s.ant) {
    bool ok = pol ? isFree(f, p, dual(*pol)) : isPlainFree(f, p);
    if (ok) disj.push_back(ar_.neg(f));
  }
  return orAll(disj);
}

namespace {

bool allBox(const std::vector<Fm>& v) {
  for (Fm f : v)
    if (f->tag != Tag::Box) return false;
  return true;
}
bool allCond(const std::vector<Fm>& v) {
  for (Fm f : v)
    if (f->tag != Tag::Cond) return false;
  return true;
}

}  // namespace

Fm Interpolator::modalPart(const Sequent& s, AtomId p, std::optional<Pol> pol) {
  Fm bot = ar_.bot();
  auto R = [&](const Sequent& t) { return uni(t, p, pol); };

  switch (logic_) {
    case LogicId::M:
    case LogicId::MN:
    case LogicId::MC:
    case LogicId::K: {
      bool aggregating = logic_ == LogicId::MC || logic_ == LogicId::K;
      if (s.suc.empty() && !s.ant.empty() && allBox(s.ant)) {
        if (!aggregating && s.ant.size() != 1) return bot;
        std::vector<Fm> inner;
        for (Fm f : s.ant) inner.push_back(f->l);
        Fm r = R(Sequent(std::move(inner), {}));
        return ar_.neg(ar_.box(ar_.neg(r)));
      }
      if (s.ant.empty() && s.suc.size() == 1 && s.suc[0]->tag == Tag::Box)
        return ar_.box(R(Sequent({}, {s.suc[0]->l})));
      if (aggregating && !s.ant.empty() && allBox(s.ant) && s.suc.size() == 1 &&
          s.suc[0]->tag == Tag::Box) {
        std::vector<Fm> inner;
        for (Fm f : s.ant) inner.push_back(f->l);
        return ar_.box(R(Sequent(std::move(inner), {s.suc[0]->l})));
      }
      return bot;
    }

    case LogicId::E:
    case LogicId::EN: {
      if (s.suc.empty() && s.ant.size() == 1 && s.ant[0]->tag == Tag::Box) {
        Fm phi = s.ant[0]->l;
        Fm r = R(Sequent({phi}, {}));
        Fm nr = ar_.neg(r);
        if (pv_.decide(logic_, Sequent({nr}, {phi})) &&
            pv_.decide(logic_, Sequent({phi}, {nr})))
          return ar_.neg(ar_.box(nr));
        return bot;
      }
      if (s.ant.empty() && s.suc.size() == 1 && s.suc[0]->tag == Tag::Box) {
        Fm psi = s.suc[0]->l;
        Fm r = R(Sequent({}, {psi}));
        if (pv_.decide(logic_, Sequent({r}, {psi})) &&
            pv_.decide(logic_, Sequent({psi}, {r})))
          return ar_.box(r);
        return bot;
      }
      return bot;
    }

    case LogicId::CE:
    case LogicId::CEN:
    case LogicId::CM:
    case LogicId::CMN: {
      bool congruential = logic_ == LogicId::CE || logic_ == LogicId::CEN;
      if (s.suc.empty() && s.ant.size() == 1 && s.ant[0]->tag == Tag::Cond) {
        Fm phi = s.ant[0]->l, psi = s.ant[0]->r;
        Fm rt = R(Sequent({}, {phi}));
        Fm rs = R(Sequent({psi}, {}));
        if (!equivalent(rt, phi)) return bot;
        if (congruential && !equivalent(ar_.neg(rs), psi)) return bot;
        return ar_.neg(ar_.cond(rt, ar_.neg(rs)));
      }
      if (s.ant.empty() && s.suc.size() == 1 && s.suc[0]->tag == Tag::Cond) {
        Fm phi = s.suc[0]->l, psi = s.suc[0]->r;
        Fm rt = R(Sequent({phi}, {}));
        Fm rs = R(Sequent({}, {psi}));
        Fm nrt = ar_.neg(rt);
        if (!equivalent(nrt, phi)) return bot;
        if (congruential && !equivalent(rs, psi)) return bot;
        return ar_.cond(nrt, rs);
      }
      return bot;
    }

    case LogicId::CMC:
    case LogicId::CK:
    case LogicId::CKID: {
      if (s.suc.empty() && !s.ant.empty() && allCond(s.ant)) {
        // pick chi among the quantified guard antecedents
        Fm chi = nullptr;
        for (size_t i = 0; i < s.ant.size(); i++) {
          if (i && s.ant[i] == s.ant[i - 1]) continue;
          Fm cand = R(Sequent({}, {s.ant[i]->l}));
          bool ok = true;
          for (Fm g : s.ant)
            if (!equivalent(cand, g->l)) {
              ok = false;
              break;
            }
          if (ok) {
            chi = cand;
            break;
          }
        }
        if (!chi) return bot;
        std::vector<Fm> psis;
        for (Fm f : s.ant) psis.push_back(f->r);
        Fm rs = R(Sequent(std::move(psis), {}));
        return ar_.neg(ar_.cond(chi, ar_.neg(rs)));
      }
      if (s.suc.size() == 1 && s.suc[0]->tag == Tag::Cond && allCond(s.ant)) {
        Fm head = s.suc[0];
        Fm rt = R(Sequent({head->l}, {}));
        Fm nrt = ar_.neg(rt);
        if (!equivalent(nrt, head->l)) return bot;
        for (Fm f : s.ant)
          if (!equivalent(head->l, f->l)) return bot;
        std::vector<Fm> psis;
        if (logic_ == LogicId::CKID) psis.push_back(head->l);
        for (Fm f : s.ant) psis.push_back(f->r);
        Fm rs = R(Sequent(std::move(psis), {head->r}));
        return ar_.cond(nrt, rs);
      }
      return bot;
    }

    case LogicId::CKCEM:
    case LogicId::CKCEMID: {
      if (!allCond(s.ant) || !allCond(s.suc)) return bot;
      if (s.ant.empty() && s.suc.empty()) return bot;
      // chi candidates are the quantified guards, antecedent members first
      std::vector<Fm> guards;
      for (Fm f : s.ant) guards.push_back(f->l);
      for (Fm f : s.suc) guards.push_back(f->l);
      Fm chi = nullptr;
      for (size_t i = 0; i < guards.size(); i++) {
        Fm cand = R(Sequent({}, {guards[i]}));
        bool ok = true;
        for (Fm g : guards)
          if (!equivalent(cand, g)) {
            ok = false;
            break;
          }
        if (ok) {
          chi = cand;
          break;
        }
      }
      if (!chi) return bot;
      if (s.suc.empty()) {
        std::vector<Fm> psis;
        for (Fm f : s.ant) psis.push_back(f->r);
        Fm rs = R(Sequent(std::move(psis), {}));
        return ar_.neg(ar_.cond(chi, ar_.neg(rs)));
      }
      std::vector<Fm> hyps, goals;
      for (Fm f : s.ant) hyps.push_back(f->r);
      for (Fm f : s.suc) goals.push_back(f->r);
      Fm rs = R(Sequent(std::move(hyps), std::move(goals)));
      return ar_.cond(chi, rs);
    }

    default:
      return bot;
  }
}

Fm Interpolator::forallFormula(Fm f, AtomId p, Pol pol) {
  return forallSequent(Sequent({}, {f}), p, pol);
}

Fm Interpolator::existsFormula(Fm f, AtomId p, Pol pol) {
  return simp(ar_.neg(forallSequent(Sequent({}, {ar_.neg(f)}), p, dual(pol))));
}

Fm Interpolator::plainForall(Fm f, AtomId p) {
  if (kind_ == Kind::Plain) return plainForallSequent(Sequent({}, {f}), p);
  return forallFormula(forallFormula(f, p, Pol::Neg), p, Pol::Pos);
}

Fm Interpolator::plainExists(Fm f, AtomId p) {
  if (kind_ == Kind::Plain) return simp(ar_.neg(plainForallSequent(
      Sequent({}, {ar_.neg(f)}), p)));
  return existsFormula(existsFormula(f, p, Pol::Neg), p, Pol::Pos);
}

Fm Interpolator::lyndonInterpolant(Fm lhs, Fm rhs) {
  if (kind_ != Kind::Lyndon)
    throw std::invalid_argument("lyndonInterpolant needs a Lyndon logic");
  if (!pv_.decide(logic_, Sequent({lhs}, {rhs})))
    throw std::invalid_argument("lyndonInterpolant: implication not provable");

  // exists over the negative surplus first, then over the positive one,
  // both computed from the left-hand side, atoms in the fixed order
  Fm theta = lhs;
  uint64_t surplusNeg = negVars(lhs) & ~negVars(rhs);
  uint64_t surplusPos = posVars(lhs) & ~posVars(rhs);
  for (AtomId a = 0; a < Arena::kMaxAtoms; a++)
    if (surplusNeg >> a & 1) theta = existsFormula(theta, a, Pol::Neg);
  for (AtomId a = 0; a < Arena::kMaxAtoms; a++)
    if (surplusPos >> a & 1) theta = existsFormula(theta, a, Pol::Pos);
  bool varsOk = (posVars(theta) & ~(posVars(lhs) & posVars(rhs))) == 0 &&
                (negVars(theta) & ~(negVars(lhs) & negVars(rhs))) == 0;
  if (!varsOk || !pv_.decide(logic_, Sequent({lhs}, {theta})) ||
      !pv_.decide(logic_, Sequent({theta}, {rhs})))
    throw std::logic_error("lyndonInterpolant: synthesized formula fails");
  return theta;
}

}  // namespace nnml
