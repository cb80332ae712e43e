#include "nnml/cutelim.hpp"

#include <cassert>

namespace nnml {

namespace {

struct Matched {
  RuleInstance inst;
  std::vector<ProofPtr> kids;  // aligned with inst.premises
};

struct Eliminator {
  Prover& P;
  LogicId L;

  Matched match(const Proof& node) {
    for (RuleInstance& inst : backwardInstances(L, node.root)) {
      if (inst.rule != node.rule || inst.premises.size() != node.kids.size())
        continue;
      std::vector<ProofPtr> aligned(inst.premises.size());
      std::vector<bool> used(node.kids.size(), false);
      bool ok = true;
      for (size_t i = 0; i < inst.premises.size() && ok; i++) {
        ok = false;
        for (size_t j = 0; j < node.kids.size(); j++) {
          if (used[j] || !(node.kids[j]->root == inst.premises[i])) continue;
          used[j] = true;
          aligned[i] = node.kids[j];
          ok = true;
          break;
        }
      }
      if (ok) return {std::move(inst), std::move(aligned)};
    }
    throw std::logic_error("cut elimination: node matches no rule instance");
  }

  ProofPtr researchProof(const Sequent& goal) {
    ProofPtr w = P.prove(L, goal);
    if (!w)
      throw std::logic_error("cut elimination: admissible step not provable");
    return w;
  }

  static size_t countIn(const std::vector<Fm>& v, Fm f) {
    size_t n = 0;
    for (Fm g : v) n += (g == f);
    return n;
  }

  ProofPtr reduceCut(const ProofPtr& d1, const ProofPtr& d2, Fm f) {
    std::vector<Fm> gamma1 = d1->root.ant;
    std::vector<Fm> delta1 = removeSucFm(d1->root, f).suc;
    std::vector<Fm> gamma2 = removeAntFm(d2->root, f).ant;
    std::vector<Fm> delta2 = d2->root.suc;
    Sequent goal = compose(Sequent(gamma1, delta1), Sequent(gamma2, delta2));

    if (auto ax = axiomMatch(goal)) return makeNode(*ax, goal, {});

    if (d1->kids.empty()) {
      // axiom on the cut formula: f atomic and in gamma1
      assert(d1->rule == RuleId::Ax && countIn(gamma1, f) > 0);
      return P.weakenProof(L, d2, minus(gamma1, f), delta1);
    }
    if (d2->kids.empty()) {
      if (d2->rule == RuleId::LBot) {
        // f is bottom; drop it on the left and weaken
        auto elim = P.admissibleBotElim(L, d1->root);
        assert(elim.has_value());
        return P.weakenProof(L, *elim, gamma2, delta2);
      }
      assert(d2->rule == RuleId::Ax && countIn(delta2, f) > 0);
      return P.weakenProof(L, d1, gamma2, minus(delta2, f));
    }

    Matched m1 = match(*d1);
    // weakening that introduced the cut formula: its premise already proves
    // the left side without f
    if (m1.inst.rule == RuleId::Rw && m1.inst.sucPrincipal[0] == f)
      return P.weakenProof(L, m1.kids[0], gamma2, delta2);
    if (countSuc(d1->root, f) > countIn(m1.inst.sucPrincipal, f))
      return pushLeft(m1, d2, f, goal, gamma2, delta2);

    Matched m2 = match(*d2);
    if (m2.inst.rule == RuleId::Lw && m2.inst.antPrincipal[0] == f)
      return P.weakenProof(L, m2.kids[0], gamma1, delta1);
    if (countAnt(d2->root, f) > countIn(m2.inst.antPrincipal, f))
      return pushRight(d1, m2, f, goal, gamma1, delta1);

    return principal(m1, m2, f, goal);
  }

  static std::vector<Fm> minus(std::vector<Fm> v, Fm f) {
    auto it = std::find(v.begin(), v.end(), f);
    assert(it != v.end());
    v.erase(it);
    return v;
  }

  // cut formula sits in the context of d1's last rule
  ProofPtr pushLeft(const Matched& m1, const ProofPtr& d2, Fm f,
                    const Sequent& goal, const std::vector<Fm>& gamma2,
                    const std::vector<Fm>& delta2) {
    switch (m1.inst.rule) {
      case RuleId::RuleEC:
      case RuleId::RuleCEC:
      case RuleId::RuleNW:
      case RuleId::RuleCNW: {
        // contexts are absorbed upward; the same instance proves the
        // conclusion without f
        ProofPtr trimmed = makeNode(m1.inst.rule,
                                    removeSucFm(m1.inst.conclusion, f),
                                    m1.kids);
        return P.weakenProof(L, trimmed, gamma2, delta2);
      }
      default: {
        std::vector<ProofPtr> kids;
        kids.reserve(m1.kids.size());
        for (const auto& k : m1.kids) kids.push_back(reduceCut(k, d2, f));
        return makeNode(m1.inst.rule, goal, std::move(kids));
      }
    }
  }

  ProofPtr pushRight(const ProofPtr& d1, const Matched& m2, Fm f,
                     const Sequent& goal, const std::vector<Fm>& gamma1,
                     const std::vector<Fm>& delta1) {
    switch (m2.inst.rule) {
      case RuleId::RuleEC:
      case RuleId::RuleCEC:
      case RuleId::RuleNW:
      case RuleId::RuleCNW: {
        ProofPtr trimmed = makeNode(m2.inst.rule,
                                    removeAntFm(m2.inst.conclusion, f),
                                    m2.kids);
        return P.weakenProof(L, trimmed, gamma1, delta1);
      }
      default: {
        std::vector<ProofPtr> kids;
        kids.reserve(m2.kids.size());
        for (const auto& k : m2.kids) kids.push_back(reduceCut(d1, k, f));
        return makeNode(m2.inst.rule, goal, std::move(kids));
      }
    }
  }

  // --- principal on both sides ---

  ProofPtr principal(const Matched& m1, const Matched& m2, Fm f,
                     const Sequent& goal) {
    switch (f->tag) {
      case Tag::And: {
        // m1 RAnd [alpha-premise, beta-premise]; m2 LAnd [alpha,beta premise]
        requireRules(m1, RuleId::RAnd, m2, RuleId::LAnd);
        ProofPtr x = reduceCut(m1.kids[1], m2.kids[0], f->r);
        ProofPtr y = reduceCut(m1.kids[0], x, f->l);
        (void)y;
        return researchProof(goal);
      }
      case Tag::Or: {
        requireRules(m1, RuleId::ROr, m2, RuleId::LOr);
        ProofPtr x = reduceCut(m1.kids[0], m2.kids[0], f->l);
        ProofPtr y = reduceCut(x, m2.kids[1], f->r);
        (void)y;
        return researchProof(goal);
      }
      case Tag::Imp: {
        requireRules(m1, RuleId::RImp, m2, RuleId::LImp);
        ProofPtr x = reduceCut(m2.kids[0], m1.kids[0], f->l);
        ProofPtr y = reduceCut(x, m2.kids[1], f->r);
        (void)y;
        return researchProof(goal);
      }
      case Tag::Box:
        return boxPrincipal(m1, m2, f, goal);
      case Tag::Cond:
        return condPrincipal(m1, m2, f, goal);
      default:
        throw std::logic_error("cut elimination: atomic principal cut");
    }
  }

  static void requireRules(const Matched& m1, RuleId r1, const Matched& m2,
                           RuleId r2) {
    if (m1.inst.rule != r1 || m2.inst.rule != r2)
      throw std::logic_error("cut elimination: unexpected principal rules");
  }

  ProofPtr boxPrincipal(const Matched& m1, const Matched& m2, Fm f,
                        const Sequent& goal) {
    Fm inner = f->l;
    switch (m2.inst.rule) {
      case RuleId::RuleM:
      case RuleId::RuleE: {
        // d2 proves ([]inner => []beta)
        ProofPtr fwd2 = m2.kids[0];  // inner => beta
        if (m1.inst.rule == RuleId::RuleN) {
          ProofPtr z = reduceCut(m1.kids[0], fwd2, inner);  // => beta
          return makeNode(RuleId::RuleN, goal, {z});
        }
        if (m2.inst.rule == RuleId::RuleM) {
          requireRules(m1, RuleId::RuleM, m2, RuleId::RuleM);
          ProofPtr z = reduceCut(m1.kids[0], fwd2, inner);  // alpha => beta
          return makeNode(RuleId::RuleM, goal, {z});
        }
        requireRules(m1, RuleId::RuleE, m2, RuleId::RuleE);
        ProofPtr z1 = reduceCut(m1.kids[0], fwd2, inner);
        ProofPtr z2 = reduceCut(m2.kids[1], m1.kids[1], inner);
        return makeNode(RuleId::RuleE, goal, {z1, z2});
      }
      case RuleId::RuleMC: {
        ProofPtr agg2 = m2.kids[0];  // inner, gammas => beta
        if (m1.inst.rule == RuleId::RuleN) {
          ProofPtr z = reduceCut(m1.kids[0], agg2, inner);
          return z->root.ant.empty() ? makeNode(RuleId::RuleN, goal, {z})
                                     : makeNode(RuleId::RuleMC, goal, {z});
        }
        requireRules(m1, RuleId::RuleMC, m2, RuleId::RuleMC);
        ProofPtr z = reduceCut(m1.kids[0], agg2, inner);
        return makeNode(RuleId::RuleMC, goal, {z});
      }
      case RuleId::RuleEC: {
        // d2's principal selection contains f; locate its equivalence premise
        size_t fPos = principalIndex(m2.inst.antPrincipal, f);
        ProofPtr agg2 = m2.kids[0];           // inner + rest => beta
        ProofPtr down2 = m2.kids[1 + fPos];   // beta => inner
        if (m1.inst.rule == RuleId::RuleNW) {
          ProofPtr z = reduceCut(m1.kids[0], agg2, inner);
          std::vector<Fm> rest = minus(m2.inst.antPrincipal, f);
          if (rest.empty()) return makeNode(RuleId::RuleNW, goal, {z});
          std::vector<ProofPtr> kids{z};
          for (size_t j = 0; j < m2.inst.antPrincipal.size(); j++)
            if (j != fPos) kids.push_back(m2.kids[1 + j]);
          return makeNode(RuleId::RuleEC, goal, std::move(kids));
        }
        requireRules(m1, RuleId::RuleEC, m2, RuleId::RuleEC);
        ProofPtr z0 = reduceCut(m1.kids[0], agg2, inner);
        std::vector<ProofPtr> kids{z0};
        for (size_t i = 0; i < m1.inst.antPrincipal.size(); i++)
          kids.push_back(reduceCut(down2, m1.kids[1 + i], inner));
        for (size_t j = 0; j < m2.inst.antPrincipal.size(); j++)
          if (j != fPos) kids.push_back(m2.kids[1 + j]);
        return makeNode(RuleId::RuleEC, goal, std::move(kids));
      }
      default:
        throw std::logic_error("cut elimination: unexpected box rules");
    }
  }

  static size_t principalIndex(const std::vector<Fm>& v, Fm f) {
    for (size_t i = 0; i < v.size(); i++)
      if (v[i] == f) return i;
    throw std::logic_error("cut elimination: principal formula not found");
  }

  ProofPtr condPrincipal(const Matched& m1, const Matched& m2, Fm f,
                         const Sequent& goal) {
    switch (m2.inst.rule) {
      case RuleId::RuleCE: {
        // m2 kids: [c.l=>f.l, f.l=>c.l, c.r=>f.r, f.r=>c.r] for succedent c
        if (m1.inst.rule == RuleId::RuleCN) {
          ProofPtr z = reduceCut(m1.kids[0], m2.kids[2], f->r);  // => c.r
          return makeNode(RuleId::RuleCN, goal, {z});
        }
        requireRules(m1, RuleId::RuleCE, m2, RuleId::RuleCE);
        // m1 kids: [f.l=>a.l, a.l=>f.l, f.r=>a.r, a.r=>f.r] for antecedent a
        ProofPtr pl = reduceCut(m2.kids[0], m1.kids[0], f->l);  // c.l => a.l
        ProofPtr pr = reduceCut(m1.kids[1], m2.kids[1], f->l);  // a.l => c.l
        ProofPtr ql = reduceCut(m2.kids[2], m1.kids[2], f->r);  // c.r => a.r
        ProofPtr qr = reduceCut(m1.kids[3], m2.kids[3], f->r);  // a.r => c.r
        return makeNode(RuleId::RuleCE, goal, {pl, pr, ql, qr});
      }
      case RuleId::RuleCM: {
        if (m1.inst.rule == RuleId::RuleCN) {
          ProofPtr z = reduceCut(m1.kids[0], m2.kids[2], f->r);
          return makeNode(RuleId::RuleCN, goal, {z});
        }
        requireRules(m1, RuleId::RuleCM, m2, RuleId::RuleCM);
        // m1 kids: [f.l=>a.l, a.l=>f.l, a.r=>f.r]; m2: [c.l=>f.l, f.l=>c.l, f.r=>c.r]
        ProofPtr pl = reduceCut(m2.kids[0], m1.kids[0], f->l);
        ProofPtr pr = reduceCut(m1.kids[1], m2.kids[1], f->l);
        ProofPtr q = reduceCut(m1.kids[2], m2.kids[2], f->r);
        return makeNode(RuleId::RuleCM, goal, {pl, pr, q});
      }
      case RuleId::RuleCMC:
      case RuleId::RuleCKID:
        return aggregateCondPrincipal(m1, m2, f, goal);
      case RuleId::RuleCKCEM:
      case RuleId::RuleCKCEMID:
        return cemPrincipal(m1, m2, f, goal);
      case RuleId::RuleCEC: {
        size_t fPos = principalIndex(m2.inst.antPrincipal, f);
        size_t n2 = m2.inst.antPrincipal.size();
        ProofPtr eqFwd = m2.kids[2 * fPos];      // c.l => f.l
        ProofPtr eqBwd = m2.kids[2 * fPos + 1];  // f.l => c.l
        ProofPtr agg2 = m2.kids[2 * n2];         // f.r + rest => c.r
        ProofPtr down2 = m2.kids[2 * n2 + 1 + fPos];  // c.r => f.r
        if (m1.inst.rule == RuleId::RuleCNW) {
          ProofPtr z = reduceCut(m1.kids[0], agg2, f->r);
          std::vector<Fm> rest = minus(m2.inst.antPrincipal, f);
          if (rest.empty()) return makeNode(RuleId::RuleCNW, goal, {z});
          std::vector<ProofPtr> kids;
          for (size_t j = 0; j < n2; j++)
            if (j != fPos) {
              kids.push_back(m2.kids[2 * j]);
              kids.push_back(m2.kids[2 * j + 1]);
            }
          kids.push_back(z);
          for (size_t j = 0; j < n2; j++)
            if (j != fPos) kids.push_back(m2.kids[2 * n2 + 1 + j]);
          return makeNode(RuleId::RuleCEC, goal, std::move(kids));
        }
        requireRules(m1, RuleId::RuleCEC, m2, RuleId::RuleCEC);
        size_t n1 = m1.inst.antPrincipal.size();
        ProofPtr agg1 = m1.kids[2 * n1];
        std::vector<ProofPtr> kids;
        for (size_t i = 0; i < n1; i++) {
          // c.l => a_i.l and back, through f.l
          kids.push_back(reduceCut(eqFwd, m1.kids[2 * i], f->l));
          kids.push_back(reduceCut(m1.kids[2 * i + 1], eqBwd, f->l));
        }
        for (size_t j = 0; j < n2; j++)
          if (j != fPos) {
            kids.push_back(m2.kids[2 * j]);
            kids.push_back(m2.kids[2 * j + 1]);
          }
        kids.push_back(reduceCut(agg1, agg2, f->r));
        for (size_t i = 0; i < n1; i++)
          kids.push_back(reduceCut(down2, m1.kids[2 * n1 + 1 + i], f->r));
        for (size_t j = 0; j < n2; j++)
          if (j != fPos) kids.push_back(m2.kids[2 * n2 + 1 + j]);
        return makeNode(RuleId::RuleCEC, goal, std::move(kids));
      }
      default:
        throw std::logic_error("cut elimination: unexpected conditional rules");
    }
  }

  // CMC/CKID with the cut conditional principal on both sides
  ProofPtr aggregateCondPrincipal(const Matched& m1, const Matched& m2, Fm f,
                                  const Sequent& goal) {
    RuleId r = m2.inst.rule;
    bool id = r == RuleId::RuleCKID;
    size_t fPos = principalIndex(m2.inst.antPrincipal, f);
    ProofPtr eqFwd = m2.kids[2 * fPos];      // h2.l => f.l
    ProofPtr eqBwd = m2.kids[2 * fPos + 1];  // f.l => h2.l
    ProofPtr psi2 = m2.kids.back();
    Fm h2 = m2.inst.sucPrincipal[0];

    std::vector<ProofPtr> kids;
    if (m1.inst.rule == RuleId::RuleCN) {
      // left premise ends in CN: cut its kid into the aggregate premise
      ProofPtr z = reduceCut(m1.kids[0], psi2, f->r);
      if (m2.inst.antPrincipal.size() == 1)
        return makeNode(RuleId::RuleCN, goal, {z});
      for (size_t j = 0; j < m2.inst.antPrincipal.size(); j++)
        if (j != fPos) {
          kids.push_back(m2.kids[2 * j]);
          kids.push_back(m2.kids[2 * j + 1]);
        }
      kids.push_back(z);
      return makeNode(r, goal, std::move(kids));
    }

    requireRules(m1, r, m2, r);
    size_t n1 = m1.inst.antPrincipal.size();
    ProofPtr psi1 = m1.kids.back();
    for (size_t i = 0; i < n1; i++) {
      kids.push_back(reduceCut(eqFwd, m1.kids[2 * i], f->l));
      kids.push_back(reduceCut(m1.kids[2 * i + 1], eqBwd, f->l));
    }
    for (size_t j = 0; j < m2.inst.antPrincipal.size(); j++)
      if (j != fPos) {
        kids.push_back(m2.kids[2 * j]);
        kids.push_back(m2.kids[2 * j + 1]);
      }
    if (!id) {
      kids.push_back(reduceCut(psi1, psi2, f->r));
    } else {
      // psi1 carries f.l, psi2 carries h2.l; re-search contracts them
      ProofPtr z = reduceCut(psi1, psi2, f->r);
      (void)z;
      std::vector<Fm> hyps{h2->l};
      for (Fm g : m1.inst.antPrincipal) hyps.push_back(g->r);
      for (size_t j = 0; j < m2.inst.antPrincipal.size(); j++)
        if (j != fPos) hyps.push_back(m2.inst.antPrincipal[j]->r);
      kids.push_back(researchProof(Sequent(std::move(hyps), {h2->r})));
    }
    return makeNode(r, goal, std::move(kids));
  }

  // CKCEM/CKCEMID: the psi premises are cut structurally; the equivalence
  // premises of the merged instance are re-searched, as their chains cross
  // both families and need not stay below the cut weight
  ProofPtr cemPrincipal(const Matched& m1, const Matched& m2, Fm f,
                        const Sequent& goal) {
    RuleId r = m2.inst.rule;
    requireRules(m1, r, m2, r);
    bool id = r == RuleId::RuleCKCEMID;
    Fm h2 = m2.inst.sucPrincipal[0];
    ProofPtr psi1 = m1.kids.back();
    ProofPtr psi2 = m2.kids.back();
    ProofPtr z = reduceCut(psi1, psi2, f->r);

    std::vector<ProofPtr> kids;
    auto equiv = [&](Fm other) {
      kids.push_back(researchProof(Sequent({h2->l}, {other->l})));
      kids.push_back(researchProof(Sequent({other->l}, {h2->l})));
    };
    for (Fm g : goal.ant) equiv(g);
    for (Fm g : goal.suc)
      if (g != h2) equiv(g);
    // one succedent copy of h2 is designated; equivalences for further copies
    size_t extra = countSuc(goal, h2);
    for (size_t i = 1; i < extra; i++) equiv(h2);

    if (!id) {
      kids.push_back(z);
    } else {
      std::vector<Fm> hyps{h2->l};
      std::vector<Fm> goals;
      for (Fm g : goal.ant) hyps.push_back(g->r);
      goals.push_back(h2->r);
      bool skipped = false;
      for (Fm g : goal.suc) {
        if (g == h2 && !skipped) {
          skipped = true;
          continue;
        }
        goals.push_back(g->r);
      }
      kids.push_back(researchProof(Sequent(std::move(hyps), std::move(goals))));
    }
    return makeNode(r, goal, std::move(kids));
  }

  ProofPtr eliminate(const ProofPtr& p) {
    if (p->rule == RuleId::Cut) {
      ProofPtr a = eliminate(p->kids[0]);
      ProofPtr b = eliminate(p->kids[1]);
      auto f = cutSplit(p->root, a->root, b->root);
      if (!f) throw std::invalid_argument("malformed cut node");
      return reduceCut(a, b, *f);
    }
    std::vector<ProofPtr> kids;
    bool changed = false;
    kids.reserve(p->kids.size());
    for (const auto& k : p->kids) {
      ProofPtr e = eliminate(k);
      changed |= e != k;
      kids.push_back(std::move(e));
    }
    if (!changed) return p;
    return makeNode(p->rule, p->root, std::move(kids));
  }
};

}  // namespace

ProofPtr eliminateCut(Prover& prover, LogicId logic, const ProofPtr& proof) {
  if (!prover.checkProof(logic, *proof, /*allowCut=*/true))
    throw std::invalid_argument("eliminateCut: input proof does not check");
  Eliminator e{prover, logic};
  return e.eliminate(proof);
}

}  // namespace nnml
