#include "nnml/prover.hpp"

namespace nnml {

ProofPtr makeNode(RuleId rule, Sequent root, std::vector<ProofPtr> kids) {
  int h = 1;
  for (const auto& k : kids) h = std::max(h, k->height + 1);
  return std::make_shared<Proof>(
      Proof{rule, std::move(root), std::move(kids), h});
}

bool proofHasCut(const Proof& p) {
  if (p.rule == RuleId::Cut) return true;
  for (const auto& k : p.kids)
    if (proofHasCut(*k)) return true;
  return false;
}

size_t proofSize(const Proof& p) {
  size_t n = 1;
  for (const auto& k : p.kids) n += proofSize(*k);
  return n;
}

std::optional<Fm> cutSplit(const Sequent& root, const Sequent& left,
                           const Sequent& right) {
  for (size_t i = 0; i < left.suc.size(); i++) {
    if (i && left.suc[i] == left.suc[i - 1]) continue;
    Fm f = left.suc[i];
    if (countAnt(right, f) == 0) continue;
    Sequent composed = compose(withoutSuc(left, i), removeAntFm(right, f));
    if (composed == root) return f;
  }
  return std::nullopt;
}

ProofPtr makeCut(const ProofPtr& left, const ProofPtr& right, Fm cut) {
  if (countSuc(left->root, cut) == 0 || countAnt(right->root, cut) == 0)
    throw std::invalid_argument("makeCut: cut formula not positioned");
  Sequent conclusion =
      compose(removeSucFm(left->root, cut), removeAntFm(right->root, cut));
  return makeNode(RuleId::Cut, std::move(conclusion), {left, right});
}

bool Prover::decide(LogicId logic, const Sequent& s) {
  if (axiomMatch(s)) return true;
  SeqMap& map = cache_[static_cast<size_t>(logic)];
  auto it = map.find(s);
  if (it != map.end()) return it->second;
  bool res = search(logic, s);
  if (map.size() >= cacheCap_) map.clear();
  map.emplace(s, res);
  return res;
}

bool Prover::search(LogicId logic, const Sequent& s) {
  steps_++;
  // first applicable propositional decomposition; all six rules are
  // invertible, so one instance decides the sequent
  for (size_t i = 0; i < s.ant.size(); i++)
    if (s.ant[i]->tag == Tag::And) {
      Fm f = s.ant[i];
      return decide(logic, replaceAnt(s, i, {f->l, f->r}));
    }
  for (size_t i = 0; i < s.suc.size(); i++)
    if (s.suc[i]->tag == Tag::Or) {
      Fm f = s.suc[i];
      return decide(logic, replaceSuc(s, i, {f->l, f->r}));
    }
  for (size_t i = 0; i < s.suc.size(); i++)
    if (s.suc[i]->tag == Tag::Imp) {
      Fm f = s.suc[i];
      Sequent p = replaceSuc(s, i, {f->r});
      p.ant.insert(std::upper_bound(p.ant.begin(), p.ant.end(), f->l, ltFm),
                   f->l);
      return decide(logic, p);
    }
  for (size_t i = 0; i < s.suc.size(); i++)
    if (s.suc[i]->tag == Tag::And) {
      Fm f = s.suc[i];
      return decide(logic, replaceSuc(s, i, {f->l})) &&
             decide(logic, replaceSuc(s, i, {f->r}));
    }
  for (size_t i = 0; i < s.ant.size(); i++)
    if (s.ant[i]->tag == Tag::Or) {
      Fm f = s.ant[i];
      return decide(logic, replaceAnt(s, i, {f->l})) &&
             decide(logic, replaceAnt(s, i, {f->r}));
    }
  for (size_t i = 0; i < s.ant.size(); i++)
    if (s.ant[i]->tag == Tag::Imp) {
      Fm f = s.ant[i];
      Sequent p1 = withoutAnt(s, i);
      p1.suc.insert(std::upper_bound(p1.suc.begin(), p1.suc.end(), f->l, ltFm),
                    f->l);
      return decide(logic, p1) && decide(logic, replaceAnt(s, i, {f->r}));
    }

  // saturated: only atoms, bottom and boxed/conditional formulas remain
  if (modalClosed(logic, s)) return true;

  if (calculusHasWeakening(logic)) {
    bool hasModal = false;
    for (Fm f : s.ant)
      if (f->tag == Tag::Box || f->tag == Tag::Cond) hasModal = true;
    for (Fm f : s.suc)
      if (f->tag == Tag::Box || f->tag == Tag::Cond) hasModal = true;
    if (!hasModal) return false;  // removals cannot create an axiom
    for (size_t i = 0; i < s.ant.size(); i++) {
      if (i && s.ant[i] == s.ant[i - 1]) continue;
      if (decide(logic, withoutAnt(s, i))) return true;
    }
    for (size_t i = 0; i < s.suc.size(); i++) {
      if (i && s.suc[i] == s.suc[i - 1]) continue;
      if (decide(logic, withoutSuc(s, i))) return true;
    }
  }
  return false;
}

// Lean mirror of the modal/conditional instance shapes, with premises
// decided one at a time and early exits; agreement with the generic
// enumeration is pinned by the oracle tests.
bool Prover::modalClosed(LogicId logic, const Sequent& s) {
  auto allTag = [](const std::vector<Fm>& v, Tag t) {
    for (Fm f : v)
      if (f->tag != t) return false;
    return true;
  };
  for (RuleId r : modalRulesOf(logic)) {
    switch (r) {
      case RuleId::RuleM:
      case RuleId::RuleE: {
        if (s.ant.size() != 1 || s.suc.size() != 1) break;
        if (s.ant[0]->tag != Tag::Box || s.suc[0]->tag != Tag::Box) break;
        Fm phi = s.ant[0]->l, psi = s.suc[0]->l;
        if (!decide(logic, Sequent({phi}, {psi}))) break;
        if (r == RuleId::RuleE && !decide(logic, Sequent({psi}, {phi}))) break;
        return true;
      }
      case RuleId::RuleMC: {
        if (s.ant.empty() || s.suc.size() != 1) break;
        if (!allTag(s.ant, Tag::Box) || s.suc[0]->tag != Tag::Box) break;
        std::vector<Fm> phis;
        phis.reserve(s.ant.size());
        for (Fm f : s.ant) phis.push_back(f->l);
        if (decide(logic, Sequent(std::move(phis), {s.suc[0]->l}))) return true;
        break;
      }
      case RuleId::RuleN:
      case RuleId::RuleCN: {
        Tag want = r == RuleId::RuleN ? Tag::Box : Tag::Cond;
        if (!s.ant.empty() || s.suc.size() != 1 || s.suc[0]->tag != want) break;
        Fm inner = want == Tag::Box ? s.suc[0]->l : s.suc[0]->r;
        if (decide(logic, Sequent({}, {inner}))) return true;
        break;
      }
      case RuleId::RuleNW:
      case RuleId::RuleCNW: {
        Tag want = r == RuleId::RuleNW ? Tag::Box : Tag::Cond;
        for (size_t i = 0; i < s.suc.size(); i++) {
          if (i && s.suc[i] == s.suc[i - 1]) continue;
          if (s.suc[i]->tag != want) continue;
          Fm inner = want == Tag::Box ? s.suc[i]->l : s.suc[i]->r;
          if (decide(logic, Sequent({}, {inner}))) return true;
        }
        break;
      }
      case RuleId::RuleEC:
      case RuleId::RuleCEC: {
        Tag want = r == RuleId::RuleEC ? Tag::Box : Tag::Cond;
        std::vector<std::pair<Fm, int>> groups;
        for (Fm f : s.ant) {
          if (f->tag != want) continue;
          if (!groups.empty() && groups.back().first == f)
            groups.back().second++;
          else
            groups.emplace_back(f, 1);
        }
        if (groups.empty()) break;
        for (size_t h = 0; h < s.suc.size(); h++) {
          if (h && s.suc[h] == s.suc[h - 1]) continue;
          if (s.suc[h]->tag != want) continue;
          Fm head = s.suc[h];
          std::vector<int> take(groups.size(), 0);
          while (true) {
            size_t k = 0;
            while (k < take.size() && take[k] == groups[k].second) {
              take[k] = 0;
              k++;
            }
            if (k == take.size()) break;
            take[k]++;
            bool ok = true;
            std::vector<Fm> sel;
            for (size_t g = 0; g < groups.size() && ok; g++)
              for (int c = 0; c < take[g]; c++) sel.push_back(groups[g].first);
            if (r == RuleId::RuleEC) {
              for (Fm f : sel)
                if (!decide(logic, Sequent({head->l}, {f->l}))) {
                  ok = false;
                  break;
                }
              if (ok) {
                std::vector<Fm> phis;
                for (Fm f : sel) phis.push_back(f->l);
                ok = decide(logic, Sequent(std::move(phis), {head->l}));
              }
            } else {
              for (Fm f : sel) {
                if (!decide(logic, Sequent({head->l}, {f->l})) ||
                    !decide(logic, Sequent({f->l}, {head->l})) ||
                    !decide(logic, Sequent({head->r}, {f->r}))) {
                  ok = false;
                  break;
                }
              }
              if (ok) {
                std::vector<Fm> psis;
                for (Fm f : sel) psis.push_back(f->r);
                ok = decide(logic, Sequent(std::move(psis), {head->r}));
              }
            }
            if (ok) return true;
          }
        }
        break;
      }
      case RuleId::RuleCE:
      case RuleId::RuleCM: {
        if (s.ant.size() != 1 || s.suc.size() != 1) break;
        if (s.ant[0]->tag != Tag::Cond || s.suc[0]->tag != Tag::Cond) break;
        Fm a = s.ant[0], c = s.suc[0];
        if (!decide(logic, Sequent({c->l}, {a->l})) ||
            !decide(logic, Sequent({a->l}, {c->l})))
          break;
        if (r == RuleId::RuleCE && !decide(logic, Sequent({c->r}, {a->r})))
          break;
        if (decide(logic, Sequent({a->r}, {c->r}))) return true;
        break;
      }
      case RuleId::RuleCMC:
      case RuleId::RuleCKID: {
        if (s.suc.size() != 1 || s.suc[0]->tag != Tag::Cond) break;
        if (!allTag(s.ant, Tag::Cond)) break;
        if (r == RuleId::RuleCMC && s.ant.empty()) break;
        Fm head = s.suc[0];
        bool ok = true;
        for (Fm f : s.ant) {
          if (f->l == head->l) continue;
          if (!decide(logic, Sequent({head->l}, {f->l})) ||
              !decide(logic, Sequent({f->l}, {head->l}))) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        std::vector<Fm> hyps;
        if (r == RuleId::RuleCKID) hyps.push_back(head->l);
        for (Fm f : s.ant) hyps.push_back(f->r);
        if (decide(logic, Sequent(std::move(hyps), {head->r}))) return true;
        break;
      }
      case RuleId::RuleCKCEM:
      case RuleId::RuleCKCEMID: {
        if (s.suc.empty()) break;
        if (!allTag(s.ant, Tag::Cond) || !allTag(s.suc, Tag::Cond)) break;
        for (size_t d = 0; d < s.suc.size(); d++) {
          if (d && s.suc[d] == s.suc[d - 1]) continue;
          Fm head = s.suc[d];
          bool ok = true;
          auto sameGuard = [&](Fm other) {
            if (other->l == head->l) return true;
            return decide(logic, Sequent({head->l}, {other->l})) &&
                   decide(logic, Sequent({other->l}, {head->l}));
          };
          for (Fm f : s.ant)
            if (!sameGuard(f)) {
              ok = false;
              break;
            }
          for (size_t j = 0; j < s.suc.size() && ok; j++)
            if (j != d && !sameGuard(s.suc[j])) ok = false;
          if (!ok) continue;
          std::vector<Fm> hyps, goals;
          if (r == RuleId::RuleCKCEMID) hyps.push_back(head->l);
          for (Fm f : s.ant) hyps.push_back(f->r);
          goals.push_back(head->r);
          for (size_t j = 0; j < s.suc.size(); j++)
            if (j != d) goals.push_back(s.suc[j]->r);
          if (decide(logic, Sequent(std::move(hyps), std::move(goals))))
            return true;
        }
        break;
      }
      default:
        break;
    }
  }
  return false;
}

ProofPtr Prover::prove(LogicId logic, const Sequent& s) {
  if (!decide(logic, s)) return nullptr;
  return buildProof(logic, s);
}

ProofPtr Prover::buildProof(LogicId logic, const Sequent& s) {
  if (auto ax = axiomMatch(s)) return makeNode(*ax, s, {});
  ProofMap& map = proofCache_[static_cast<size_t>(logic)];
  auto it = map.find(s);
  if (it != map.end()) return it->second;

  ProofPtr result;
  for (const RuleInstance& inst : backwardInstances(logic, s)) {
    bool ok = true;
    for (const Sequent& p : inst.premises)
      if (!decide(logic, p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<ProofPtr> kids;
    kids.reserve(inst.premises.size());
    for (const Sequent& p : inst.premises) kids.push_back(buildProof(logic, p));
    result = makeNode(inst.rule, s, std::move(kids));
    break;
  }
  if (!result)
    throw std::logic_error("provable sequent has no closing instance");
  if (map.size() >= cacheCap_ / 8) map.clear();
  map.emplace(s, result);
  return result;
}

bool Prover::checkProof(LogicId logic, const Proof& p, bool allowCut) {
  if (p.rule == RuleId::Cut) {
    if (!allowCut || p.kids.size() != 2) return false;
    if (!cutSplit(p.root, p.kids[0]->root, p.kids[1]->root)) return false;
    return checkProof(logic, *p.kids[0], allowCut) &&
           checkProof(logic, *p.kids[1], allowCut);
  }
  if (p.kids.empty()) {
    if (p.rule == RuleId::Ax) {
      for (Fm f : p.root.ant)
        if (f->tag == Tag::Var && countSuc(p.root, f) > 0) return true;
      return false;
    }
    if (p.rule == RuleId::LBot) {
      for (Fm f : p.root.ant)
        if (f->tag == Tag::Bot) return true;
      return false;
    }
    return false;
  }
  if (!calculusHas(logic, p.rule)) return false;

  std::vector<Sequent> kidRoots;
  for (const auto& k : p.kids) kidRoots.push_back(k->root);
  std::sort(kidRoots.begin(), kidRoots.end(),
            [](const Sequent& a, const Sequent& b) {
              return cmpSequent(a, b) < 0;
            });

  bool matched = false;
  for (const RuleInstance& inst : backwardInstances(logic, p.root)) {
    if (inst.rule != p.rule) continue;
    if (inst.premises.size() != kidRoots.size()) continue;
    std::vector<Sequent> prem = inst.premises;
    std::sort(prem.begin(), prem.end(), [](const Sequent& a, const Sequent& b) {
      return cmpSequent(a, b) < 0;
    });
    if (prem == kidRoots) {
      matched = true;
      break;
    }
  }
  if (!matched) return false;
  for (const auto& k : p.kids)
    if (!checkProof(logic, *k, allowCut)) return false;
  return true;
}

std::optional<ProofPtr> Prover::admissibleContraction(LogicId logic,
                                                      const Sequent& s, Fm f,
                                                      bool inAntecedent) {
  size_t n = inAntecedent ? countAnt(s, f) : countSuc(s, f);
  if (n < 2)
    throw std::invalid_argument("admissibleContraction: no duplicate occurrence");
  if (!decide(logic, s)) return std::nullopt;
  Sequent contracted = inAntecedent ? removeAntFm(s, f) : removeSucFm(s, f);
  ProofPtr p = prove(logic, contracted);
  if (!p) throw std::logic_error("contraction admissibility failed");
  return p;
}

std::optional<ProofPtr> Prover::admissibleBotElim(LogicId logic,
                                                  const Sequent& s) {
  bool found = false;
  for (Fm f : s.suc)
    if (f->tag == Tag::Bot) found = true;
  if (!found)
    throw std::invalid_argument("admissibleBotElim: no bottom in succedent");
  if (!decide(logic, s)) return std::nullopt;
  Sequent dropped = s;
  for (size_t i = 0; i < dropped.suc.size(); i++)
    if (dropped.suc[i]->tag == Tag::Bot) {
      dropped.suc.erase(dropped.suc.begin() + i);
      break;
    }
  ProofPtr p = prove(logic, dropped);
  if (!p) throw std::logic_error("bottom elimination admissibility failed");
  return p;
}

ProofPtr Prover::weakenProof(LogicId logic, const ProofPtr& p,
                             const std::vector<Fm>& extraAnt,
                             const std::vector<Fm>& extraSuc) {
  if (extraAnt.empty() && extraSuc.empty()) return p;
  if (calculusHasWeakening(logic)) {
    ProofPtr cur = p;
    for (Fm f : extraAnt)
      cur = makeNode(RuleId::Lw, addAnt(cur->root, f), {cur});
    for (Fm f : extraSuc)
      cur = makeNode(RuleId::Rw, addSuc(cur->root, f), {cur});
    return cur;
  }
  // no explicit weakening: absorb into the contexts of every rule, which in
  // these calculi all admit arbitrary context extension at the conclusion
  Sequent newRoot = p->root;
  for (Fm f : extraAnt)
    newRoot.ant.insert(
        std::upper_bound(newRoot.ant.begin(), newRoot.ant.end(), f, ltFm), f);
  for (Fm f : extraSuc)
    newRoot.suc.insert(
        std::upper_bound(newRoot.suc.begin(), newRoot.suc.end(), f, ltFm), f);
  switch (p->rule) {
    case RuleId::Ax:
    case RuleId::LBot:
    case RuleId::RuleEC:
    case RuleId::RuleCEC:
    case RuleId::RuleNW:
    case RuleId::RuleCNW:
      // contexts live only at the conclusion
      return makeNode(p->rule, std::move(newRoot), p->kids);
    default: {
      // propositional rules pass their context to every premise
      std::vector<ProofPtr> kids;
      kids.reserve(p->kids.size());
      for (const auto& k : p->kids)
        kids.push_back(weakenProof(logic, k, extraAnt, extraSuc));
      return makeNode(p->rule, std::move(newRoot), std::move(kids));
    }
  }
}

}  // namespace nnml
