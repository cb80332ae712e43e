#include <doctest.h>

#include "nnml/cutelim.hpp"
#include "nnml/gen.hpp"

using namespace nnml;

TEST_CASE("cut on an axiomatic atom weakens the other premise") {
  Arena ar;
  Prover pv;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r");
  ProofPtr left = pv.prove(LogicId::K, Sequent({p}, {p, q}));
  ProofPtr right = pv.prove(LogicId::K, Sequent({p, r}, {p}));
  REQUIRE(left);
  REQUIRE(right);
  ProofPtr cut = makeCut(left, right, p);
  CHECK(cut->root == Sequent({p, r}, {q, p}));
  ProofPtr out = eliminateCut(pv, LogicId::K, cut);
  CHECK(!proofHasCut(*out));
  CHECK(out->root == cut->root);
  CHECK(pv.checkProof(LogicId::K, *out));
}

TEST_CASE("principal conditional cuts rebuild a single congruence step") {
  Arena ar;
  Prover pv;
  Fm pq = parseFormula(ar, "p & q", Lang::Conditional);
  Fm qp = parseFormula(ar, "q & p", Lang::Conditional);
  Fm r = ar.var("r");
  Sequent left({ar.cond(pq, r)}, {ar.cond(qp, r)});
  Sequent right({ar.cond(qp, r)}, {ar.cond(pq, r)});
  ProofPtr l = pv.prove(LogicId::CE, left);
  ProofPtr rr = pv.prove(LogicId::CE, right);
  REQUIRE(l);
  REQUIRE(rr);
  REQUIRE(l->rule == RuleId::RuleCE);
  REQUIRE(rr->rule == RuleId::RuleCE);
  ProofPtr cut = makeCut(l, rr, ar.cond(qp, r));
  ProofPtr out = eliminateCut(pv, LogicId::CE, cut);
  CHECK(!proofHasCut(*out));
  CHECK(out->rule == RuleId::RuleCE);
  CHECK(out->root == Sequent({ar.cond(pq, r)}, {ar.cond(pq, r)}));
  CHECK(pv.checkProof(LogicId::CE, *out));
}

TEST_CASE("aggregated conditional cuts compose in CMC") {
  Arena ar;
  Prover pv;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r"), s = ar.var("s");
  Fm qr = ar.disj(q, r);
  Sequent leftS({ar.cond(p, q)}, {ar.cond(p, qr)});
  Sequent rightS({ar.cond(p, qr), ar.cond(p, s)},
                 {ar.cond(p, ar.conj(qr, s))});
  ProofPtr left = pv.prove(LogicId::CMC, leftS);
  ProofPtr right = pv.prove(LogicId::CMC, rightS);
  REQUIRE(left);
  REQUIRE(right);
  ProofPtr cut = makeCut(left, right, ar.cond(p, qr));
  Sequent goal({ar.cond(p, q), ar.cond(p, s)}, {ar.cond(p, ar.conj(qr, s))});
  CHECK(cut->root == goal);
  CHECK(pv.decide(LogicId::CMC, goal));
  ProofPtr out = eliminateCut(pv, LogicId::CMC, cut);
  CHECK(!proofHasCut(*out));
  CHECK(out->root == goal);
  CHECK(pv.checkProof(LogicId::CMC, *out));
}

TEST_CASE("eliminator rejects malformed input") {
  Arena ar;
  Prover pv;
  Fm p = ar.var("p");
  ProofPtr bad = makeNode(RuleId::Cut, Sequent({}, {p}),
                          {makeNode(RuleId::Ax, Sequent({p}, {p}), {}),
                           makeNode(RuleId::Ax, Sequent({p}, {p}), {})});
  CHECK_THROWS_AS(eliminateCut(pv, LogicId::K, bad), std::invalid_argument);
}

TEST_CASE("random cut compositions eliminate in every logic") {
  Arena ar;
  Prover pv;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  for (int li = 0; li < kLogicCount; li++) {
    LogicId l = static_cast<LogicId>(li);
    Lang lang = logicLang(l);
    Rng rng(4000 + li);
    int done = 0;
    for (int i = 0; i < 20000 && done < 40; i++) {
      Fm cut = randomFormula(ar, rng, lang, atoms,
                             static_cast<int>(1 + rng.below(2)));
      Sequent ls = randomSequent(ar, rng, lang, atoms, 3, 2);
      Sequent rs = randomSequent(ar, rng, lang, atoms, 3, 2);
      if (rng.chance(50)) ls = addAnt(ls, cut);
      Sequent left = addSuc(ls, cut);
      Sequent right = addAnt(rs, cut);
      if (!pv.decide(l, left) || !pv.decide(l, right)) continue;
      ProofPtr lp = pv.prove(l, left);
      ProofPtr rp = pv.prove(l, right);
      ProofPtr c = makeCut(lp, rp, cut);
      CHECK(pv.decide(l, c->root));
      ProofPtr out = eliminateCut(pv, l, c);
      CHECK(!proofHasCut(*out));
      CHECK(out->root == c->root);
      CHECK(pv.checkProof(l, *out));
      done++;
    }
    CHECK(done == 40);
  }
}

TEST_CASE("targeted principal and context rule pairs") {
  Arena ar;
  Prover pv;
  Fm a = ar.var("a"), b = ar.var("b"), c = ar.var("c"), d = ar.var("d");
  Fm s0 = ar.var("s"), t0 = ar.var("t");

  auto roundTrip = [&](LogicId l, const Sequent& ls, const Sequent& rs, Fm f,
                       RuleId leftRule, RuleId rightRule) {
    ProofPtr lp = pv.prove(l, ls);
    ProofPtr rp = pv.prove(l, rs);
    REQUIRE(lp);
    REQUIRE(rp);
    CHECK(lp->rule == leftRule);
    CHECK(rp->rule == rightRule);
    ProofPtr cut = makeCut(lp, rp, f);
    ProofPtr out = eliminateCut(pv, l, cut);
    CHECK(!proofHasCut(*out));
    CHECK(out->root == cut->root);
    CHECK(pv.checkProof(l, *out));
  };

  // N against MC in K
  roundTrip(LogicId::K, Sequent({}, {ar.box(ar.top())}),
            Sequent({ar.box(ar.top())}, {ar.box(ar.top())}), ar.box(ar.top()),
            RuleId::RuleN, RuleId::RuleMC);

  // CN against CMC in CK
  Fm at = ar.cond(a, ar.top());
  roundTrip(LogicId::CK, Sequent({}, {at}),
            Sequent({at, ar.cond(a, b)}, {ar.cond(a, ar.conj(ar.top(), b))}),
            at, RuleId::RuleCN, RuleId::RuleCMC);

  // NW against EC in ECN
  Fm boxTop = ar.box(ar.top());
  roundTrip(LogicId::ECN, Sequent({s0}, {boxTop, t0}),
            Sequent({boxTop}, {boxTop}), boxTop, RuleId::RuleNW,
            RuleId::RuleEC);

  // EC against EC with a full principal selection
  Fm ab = ar.conj(a, b), ba = ar.conj(b, a);
  roundTrip(LogicId::EC, Sequent({ar.box(a), ar.box(b)}, {ar.box(ab)}),
            Sequent({ar.box(ab)}, {ar.box(ba)}), ar.box(ab), RuleId::RuleEC,
            RuleId::RuleEC);

  // CKID against CKID
  Fm bc = ar.disj(b, c);
  roundTrip(LogicId::CKID, Sequent({ar.cond(a, b)}, {ar.cond(a, bc)}),
            Sequent({ar.cond(a, bc), ar.cond(a, d)},
                    {ar.cond(a, ar.conj(bc, d))}),
            ar.cond(a, bc), RuleId::RuleCKID, RuleId::RuleCKID);

  // CKCEM where the cut conditional is not the designated one on the left
  Fm posB = ar.cond(a, b), negB = ar.cond(a, ar.neg(b));
  roundTrip(LogicId::CKCEM, Sequent({}, {posB, negB}), Sequent({negB}, {negB}),
            negB, RuleId::RuleCKCEM, RuleId::RuleCKCEM);
  roundTrip(LogicId::CKCEMID, Sequent({}, {posB, negB}),
            Sequent({negB}, {negB}), negB, RuleId::RuleCKCEMID,
            RuleId::RuleCKCEMID);

  // cut formula inside the absorbed context of an EC conclusion
  Fm p = ar.var("p"), q = ar.var("q");
  ProofPtr lp = pv.prove(LogicId::EC, Sequent({ar.box(a)}, {ar.box(a), p}));
  ProofPtr rp = pv.prove(LogicId::EC, Sequent({p, q}, {p}));
  REQUIRE(lp);
  REQUIRE(rp);
  CHECK(lp->rule == RuleId::RuleEC);
  ProofPtr cut = makeCut(lp, rp, p);
  ProofPtr out = eliminateCut(pv, LogicId::EC, cut);
  CHECK(!proofHasCut(*out));
  CHECK(out->root == cut->root);
  CHECK(pv.checkProof(LogicId::EC, *out));
}

TEST_CASE("nested cuts are processed topmost first") {
  Arena ar;
  Prover pv;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r");
  ProofPtr a = pv.prove(LogicId::M, Sequent({p}, {p, q}));
  ProofPtr b = pv.prove(LogicId::M, Sequent({p, q}, {q}));
  ProofPtr inner = makeCut(a, b, p);  // p, q => q, q ... composed
  ProofPtr c = pv.prove(LogicId::M, Sequent({q}, {q, r}));
  // cut the inner result against another proof on q
  ProofPtr outer = makeCut(inner, c, q);
  ProofPtr out = eliminateCut(pv, LogicId::M, outer);
  CHECK(!proofHasCut(*out));
  CHECK(out->root == outer->root);
  CHECK(pv.checkProof(LogicId::M, *out));
}
