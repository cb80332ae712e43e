#include <doctest.h>

#include "nnml/gen.hpp"
#include "nnml/json_io.hpp"
#include "nnml/prover.hpp"

using namespace nnml;

namespace {

// exhaustive backward search over the full instance enumeration; the
// independent oracle for the committed-decomposition prover
struct NaiveProver {
  std::unordered_map<Sequent, bool, SequentHash> memo;
  LogicId logic;

  bool decide(const Sequent& s) {
    if (axiomMatch(s)) return true;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    bool res = false;
    for (const RuleInstance& inst : backwardInstances(logic, s)) {
      bool all = true;
      for (const Sequent& p : inst.premises)
        if (!decide(p)) {
          all = false;
          break;
        }
      if (all) {
        res = true;
        break;
      }
    }
    memo.emplace(s, res);
    return res;
  }
};

// classical truth-table validity for purely propositional sequents
bool tautOracle(const Sequent& s, const std::vector<AtomId>& atoms) {
  for (uint32_t m = 0; m < (1u << atoms.size()); m++) {
    auto eval = [&](Fm f, auto&& self) -> bool {
      switch (f->tag) {
        case Tag::Bot:
          return false;
        case Tag::Var:
          for (size_t i = 0; i < atoms.size(); i++)
            if (atoms[i] == f->atom) return m >> i & 1;
          return false;
        case Tag::And:
          return self(f->l, self) && self(f->r, self);
        case Tag::Or:
          return self(f->l, self) || self(f->r, self);
        case Tag::Imp:
          return !self(f->l, self) || self(f->r, self);
        default:
          return false;
      }
    };
    bool antecedent = true, succedent = false;
    for (Fm f : s.ant) antecedent = antecedent && eval(f, eval);
    for (Fm f : s.suc) succedent = succedent || eval(f, eval);
    if (antecedent && !succedent) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("documented proofs are found") {
  Arena ar;
  Prover pv;

  Sequent ec = parseSequent(ar, "[](p & q), [](~q & r) => []false", Lang::Modal);
  ProofPtr p1 = pv.prove(LogicId::EC, ec);
  REQUIRE(p1);
  CHECK(p1->rule == RuleId::RuleEC);
  CHECK(pv.checkProof(LogicId::EC, *p1));

  Sequent ce = parseSequent(ar, "(p > q) => (p > q)", Lang::Conditional);
  ProofPtr p2 = pv.prove(LogicId::CE, ce);
  REQUIRE(p2);
  CHECK(p2->rule == RuleId::RuleCE);
  REQUIRE(p2->kids.size() == 4);
  for (const auto& k : p2->kids) CHECK(k->rule == RuleId::Ax);

  CHECK(pv.prove(LogicId::K, parseSequent(ar, "=> []p", Lang::Modal)) ==
        nullptr);
}

TEST_CASE("proof checking rejects foreign rules and bad instances") {
  Arena ar;
  Prover pv;
  Fm p = ar.var("p");

  Sequent boxGoal({}, {ar.box(p)});
  ProofPtr kid = makeNode(RuleId::Ax, Sequent({p}, {p}), {});
  ProofPtr n = makeNode(RuleId::RuleN, boxGoal,
                        {makeNode(RuleId::Ax, Sequent({}, {p}), {})});
  CHECK(!pv.checkProof(LogicId::E, *n));  // N is not a rule of GE
  (void)kid;

  // an MC node must keep at least one boxed antecedent
  ProofPtr mc = makeNode(RuleId::RuleMC, boxGoal,
                         {makeNode(RuleId::Ax, Sequent({}, {p}), {})});
  CHECK(!pv.checkProof(LogicId::K, *mc));

  Sequent id({p}, {p});
  ProofPtr good = pv.prove(LogicId::K, id);
  REQUIRE(good);
  CHECK(pv.checkProof(LogicId::K, *good));
}

TEST_CASE("search agrees with the naive enumeration oracle") {
  Arena ar;
  Prover pv;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  for (int li = 0; li < kLogicCount; li++) {
    LogicId l = static_cast<LogicId>(li);
    NaiveProver naive{{}, l};
    Rng rng(1000 + li);
    for (int i = 0; i < 150; i++) {
      Sequent s = randomSequent(ar, rng, logicLang(l), atoms, 4, 3);
      bool fast = pv.decide(l, s);
      bool slow = naive.decide(s);
      if (fast != slow)
        FAIL("disagreement in " << logicName(l) << " on " << printSequent(s)
                                << ": fast=" << fast);
    }
  }
}

TEST_CASE("propositional fragment matches truth tables in every logic") {
  Arena ar;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  Prover pv;
  Rng rng(555);
  for (int i = 0; i < 400; i++) {
    // propositional formulas only
    Sequent s = randomSequent(ar, rng, Lang::Modal, atoms, 5, 3);
    bool modalFree = true;
    for (Fm f : s.ant) modalFree &= !hasBox(f);
    for (Fm f : s.suc) modalFree &= !hasBox(f);
    if (!modalFree) continue;
    bool expected = tautOracle(s, atoms);
    for (int li = 0; li < kLogicCount; li++) {
      LogicId l = static_cast<LogicId>(li);
      CHECK(pv.decide(l, s) == expected);
    }
  }
}

TEST_CASE("documented theorems and distinctness pairs") {
  Arena ar;
  Prover pv;
  auto provable = [&](LogicId l, const char* text) {
    return pv.decide(l, parseSequent(ar, text, logicLang(l)));
  };
  CHECK(provable(LogicId::M, "=> [](p & q) -> []p & []q"));
  CHECK(provable(LogicId::MC, "=> []p & []q -> [](p & q)"));
  CHECK(provable(LogicId::EN, "=> []true"));
  CHECK(provable(LogicId::CKCEM, "=> (p > q) | (p > ~q)"));
  CHECK(provable(LogicId::CKID, "=> p > p"));
  CHECK(!provable(LogicId::M, "=> []p & []q -> [](p & q)"));
  CHECK(!provable(LogicId::E, "=> []true"));
  CHECK(!provable(LogicId::EC, "=> [](p & q) -> []p & []q"));
}

TEST_CASE("contraction and bottom elimination are admissible") {
  Arena ar;
  Prover pv;
  Fm p = ar.var("p");

  Sequent dup({p, p}, {p});
  auto contracted = pv.admissibleContraction(LogicId::K, dup, p, true);
  REQUIRE(contracted.has_value());
  CHECK((*contracted)->root == Sequent({p}, {p}));

  Sequent withBot = parseSequent(ar, "=> false, p, ~p", Lang::Modal);
  auto dropped = pv.admissibleBotElim(LogicId::K, withBot);
  REQUIRE(dropped.has_value());
  CHECK((*dropped)->root == parseSequent(ar, "=> p, ~p", Lang::Modal));

  CHECK(!pv.admissibleContraction(LogicId::K, Sequent({p, p}, {}), p, true)
             .has_value());

  // property: duplicated provable sequents stay provable after contraction
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  for (LogicId l : {LogicId::K, LogicId::E, LogicId::CK, LogicId::CKCEMID}) {
    Rng rng(99 + static_cast<int>(l));
    int done = 0;
    for (int i = 0; i < 4000 && done < 200; i++) {
      Sequent base = randomSequent(ar, rng, logicLang(l), atoms, 4, 2);
      Fm extra = randomFormula(ar, rng, logicLang(l), atoms,
                               static_cast<int>(rng.below(3)));
      bool left = rng.chance(50);
      Sequent s = left ? addAnt(addAnt(base, extra), extra)
                       : addSuc(addSuc(base, extra), extra);
      if (!pv.decide(l, s)) continue;
      auto pf = pv.admissibleContraction(l, s, extra, left);
      REQUIRE(pf.has_value());
      CHECK(pv.checkProof(l, **pf));
      done++;
    }
    CHECK(done == 200);
  }
}

TEST_CASE("cut admissibility as a search property") {
  Arena ar;
  Prover pv;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  for (LogicId l : {LogicId::M, LogicId::K, LogicId::EC, LogicId::CE,
                    LogicId::CK, LogicId::CKCEM}) {
    Rng rng(7000 + static_cast<int>(l));
    int done = 0;
    for (int i = 0; i < 20000 && done < 80; i++) {
      Fm cut = randomFormula(ar, rng, logicLang(l), atoms,
                             static_cast<int>(rng.below(3)));
      Sequent l1 = randomSequent(ar, rng, logicLang(l), atoms, 3, 2);
      Sequent l2 = randomSequent(ar, rng, logicLang(l), atoms, 3, 2);
      Sequent left = addSuc(l1, cut);
      Sequent right = addAnt(l2, cut);
      if (!pv.decide(l, left) || !pv.decide(l, right)) continue;
      CHECK(pv.decide(l, compose(l1, l2)));
      done++;
    }
    CHECK(done == 80);
  }
}

TEST_CASE("proof records serialize and parse back") {
  Arena ar;
  Prover pv;
  Sequent s = parseSequent(ar, "[](p & q), [](~q & r) => []false", Lang::Modal);
  ProofPtr p = pv.prove(LogicId::EC, s);
  REQUIRE(p);
  ProofPtr back = proofFromJson(ar, LogicId::EC, proofToJson(*p));
  CHECK(back->root == p->root);
  CHECK(back->rule == p->rule);
  CHECK(proofToJson(*back) == proofToJson(*p));
  CHECK(pv.checkProof(LogicId::EC, *back));
}

TEST_CASE("search results are stable across repeated queries") {
  Arena ar;
  Prover pv1, pv2;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q")};
  Rng rng(13);
  for (int i = 0; i < 100; i++) {
    Sequent s = randomSequent(ar, rng, Lang::Conditional, atoms, 4, 2);
    ProofPtr a = pv1.prove(LogicId::CK, s);
    ProofPtr b = pv2.prove(LogicId::CK, s);
    CHECK((a == nullptr) == (b == nullptr));
    if (a && b) CHECK(proofToJson(*a) == proofToJson(*b));
  }
}
