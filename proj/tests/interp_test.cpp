#include <doctest.h>

#include "nnml/gen.hpp"
#include "nnml/verify.hpp"

using namespace nnml;

namespace {

struct Fixture {
  Arena ar;
  Prover pv;
  AtomId p, q, r;
  Fixture() : p(ar.atom("p")), q(ar.atom("q")), r(ar.atom("r")) {}
  bool equiv(LogicId l, Fm a, Fm b) {
    return pv.decide(l, Sequent({a}, {b})) && pv.decide(l, Sequent({b}, {a}));
  }
};

}  // namespace

TEST_CASE("axiom interpolant follows the disjunction recipe") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::M);
  Fm p = fx.ar.var(fx.p), q = fx.ar.var(fx.q);

  // provable sequent: top
  CHECK(itp.axiomInterpolant(Sequent({p}, {p}), fx.p, Pol::Pos) ==
        fx.ar.top());
  // unprovable: free succedent members plus negated free antecedent members
  CHECK(itp.axiomInterpolant(Sequent({p}, {q}), fx.p, Pol::Pos) ==
        fx.ar.disj(q, fx.ar.neg(p)));
  // empty disjunction
  CHECK(itp.axiomInterpolant(Sequent({}, {}), fx.p, Pol::Pos) == fx.ar.bot());
  // positive occurrence of p disqualifies a succedent member
  CHECK(itp.axiomInterpolant(Sequent({}, {p}), fx.p, Pol::Pos) == fx.ar.bot());
}

TEST_CASE("universal interpolant of an atomic succedent") {
  Fixture fx;
  Fm p = fx.ar.var(fx.p);
  for (LogicId l : {LogicId::M, LogicId::K, LogicId::CE, LogicId::CKID}) {
    Interpolator itp(fx.ar, fx.pv, l);
    Sequent s({}, {p});
    CHECK(itp.forallSequent(s, fx.p, Pol::Pos) == fx.ar.bot());
    Fm negSide = itp.forallSequent(s, fx.p, Pol::Neg);
    CHECK(fx.equiv(l, negSide, p));
  }
}

TEST_CASE("modal interpolant shapes for monotone logics") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::M);
  Fm q = fx.ar.var(fx.q);
  // S = (=> []q) with the quantified atom p not in q
  Fm got = itp.forallSequent(Sequent({}, {fx.ar.box(q)}), fx.p, Pol::Pos);
  CHECK(got == fx.ar.box(q));
}

TEST_CASE("congruential guard checks both directions") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::E);
  Fm p = fx.ar.var(fx.p);

  // positive polarity: the quantifier of (p =>) is ~p, and p <-> ~~p holds,
  // so the guarded interpolant is the negated box over it
  Fm pos = itp.modalInterpolant(Sequent({fx.ar.box(p)}, {}), fx.p, Pol::Pos);
  CHECK(pos != fx.ar.bot());
  CHECK(fx.equiv(LogicId::E, pos, fx.ar.neg(fx.ar.box(p))));

  // negative polarity: the quantifier of (p =>) collapses to bottom and the
  // guard p <-> ~false fails, so the modal part falls through
  Fm neg = itp.modalInterpolant(Sequent({fx.ar.box(p)}, {}), fx.p, Pol::Neg);
  CHECK(neg == fx.ar.bot());
}

TEST_CASE("existential quantifier erases the atom from a box") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::K);
  Fm p = fx.ar.var(fx.p), q = fx.ar.var(fx.q);
  Fm in = fx.ar.box(fx.ar.conj(p, q));
  Fm out = itp.existsFormula(in, fx.p, Pol::Pos);
  CHECK(isFree(out, fx.p, Pol::Pos));
  CHECK(fx.equiv(LogicId::K, out, fx.ar.box(q)));

  InterpolantReport rep = verifyExistsFormula(itp, in, fx.p, Pol::Pos, out, 3,
                                              {fx.p, fx.q});
  CHECK(rep.ok());
}

TEST_CASE("existential quantifier of the atom itself is trivial") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::M);
  Fm p = fx.ar.var(fx.p);
  Fm out = itp.existsFormula(p, fx.p, Pol::Pos);
  CHECK(fx.pv.decide(LogicId::M, Sequent({}, {out})));  // equivalent to top
}

TEST_CASE("quantifying an absent atom returns an equivalent formula") {
  Fixture fx;
  for (LogicId l : {LogicId::M, LogicId::CK}) {
    Interpolator itp(fx.ar, fx.pv, l);
    std::vector<AtomId> atoms{fx.q, fx.r};
    Rng rng(21 + static_cast<int>(l));
    for (int i = 0; i < 40; i++) {
      Fm f = randomFormula(fx.ar, rng, logicLang(l), atoms,
                           static_cast<int>(rng.below(4)));
      Fm out = itp.forallFormula(f, fx.p, Pol::Pos);
      CHECK(fx.equiv(l, out, f));
    }
  }
}

TEST_CASE("plain quantifiers") {
  Fixture fx;
  Fm p = fx.ar.var(fx.p), q = fx.ar.var(fx.q);

  Interpolator cem(fx.ar, fx.pv, LogicId::CKCEM);
  Fm out = cem.plainForall(fx.ar.cond(p, q), fx.p);
  CHECK(isPlainFree(out, fx.p));
  InterpolantReport rep =
      verifyInterpolant(cem, Sequent({}, {fx.ar.cond(p, q)}), fx.p,
                        std::nullopt, out, 3, {fx.p, fx.q});
  CHECK(rep.ok());

  Interpolator k(fx.ar, fx.pv, LogicId::K);
  CHECK(fx.equiv(LogicId::K, k.plainForall(fx.ar.box(q), fx.p),
                 fx.ar.box(q)));
  CHECK(fx.equiv(LogicId::K, k.plainForall(fx.ar.bot(), fx.p), fx.ar.bot()));
}

TEST_CASE("lyndon interpolants from provable implications") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::K);
  Fm p = fx.ar.var(fx.p), q = fx.ar.var(fx.q), r = fx.ar.var(fx.r);

  Fm same = parseFormula(fx.ar, "[](p & q)", Lang::Modal);
  CHECK(itp.lyndonInterpolant(same, same) == same);

  Fm lhs = fx.ar.box(fx.ar.conj(p, q));
  Fm rhs = fx.ar.imp(fx.ar.imp(fx.ar.box(q), r), r);  // ([]q -> r) -> r
  Fm theta = itp.lyndonInterpolant(lhs, rhs);
  CHECK(fx.equiv(LogicId::K, theta, fx.ar.box(q)));
  CHECK((posVars(theta) & ~(posVars(lhs) & posVars(rhs))) == 0);
  CHECK((negVars(theta) & ~(negVars(lhs) & negVars(rhs))) == 0);

  CHECK_THROWS_AS(itp.lyndonInterpolant(fx.ar.var(fx.p), fx.ar.var(fx.q)),
                  std::invalid_argument);
}

TEST_CASE("interpolation is refused for logics without the property") {
  Fixture fx;
  CHECK_THROWS_AS(Interpolator(fx.ar, fx.pv, LogicId::EC),
                  std::invalid_argument);
  CHECK_THROWS_AS(Interpolator(fx.ar, fx.pv, LogicId::CECN),
                  std::invalid_argument);
  Interpolator cem(fx.ar, fx.pv, LogicId::CKCEM);
  CHECK_THROWS_AS(cem.forallSequent(Sequent({}, {}), fx.p, Pol::Pos),
                  std::invalid_argument);
  CHECK_THROWS_AS(cem.lyndonInterpolant(fx.ar.var(fx.p), fx.ar.var(fx.p)),
                  std::invalid_argument);
}

TEST_CASE("translations and their round trip") {
  Fixture fx;
  Fm p = fx.ar.var(fx.p), q = fx.ar.var(fx.q);
  CHECK(translateT(fx.ar, fx.ar.box(p)) == fx.ar.cond(fx.ar.top(), p));
  CHECK(translateS(fx.ar, fx.ar.cond(q, p)) == fx.ar.box(p));
  Fm f = fx.ar.box(fx.ar.conj(p, q));
  CHECK(translateS(fx.ar, translateT(fx.ar, f)) == f);
  CHECK(vars(translateT(fx.ar, f)) == vars(f));
}

TEST_CASE("verification flags broken candidates") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::M);
  Fm q = fx.ar.var(fx.q);

  // bottom misses the p-free consequence q of (=> q)
  InterpolantReport tooStrong = verifyInterpolant(
      itp, Sequent({}, {q}), fx.p, Pol::Pos, fx.ar.bot(), 2, {fx.p, fx.q});
  CHECK(!tooStrong.ok());
  bool sawTwo = false;
  for (const auto& v : tooStrong.violations) sawTwo |= v.kind == "ii";
  CHECK(sawTwo);

  // top is not an interpolant of an unprovable sequent
  InterpolantReport tooWeak = verifyInterpolant(
      itp, Sequent({}, {q}), fx.p, Pol::Pos, fx.ar.top(), 2, {fx.p, fx.q});
  bool sawOne = false;
  for (const auto& v : tooWeak.violations) sawOne |= v.kind == "i";
  CHECK(sawOne);

  // a candidate mentioning the atom positively breaks (var)
  InterpolantReport sawVar = verifyInterpolant(
      itp, Sequent({}, {fx.ar.var(fx.p)}), fx.p, Pol::Pos, fx.ar.var(fx.p), 2,
      {fx.p});
  CHECK(!sawVar.varFree);
}

TEST_CASE("fresh atoms never leak into interpolants") {
  Fixture fx;
  Interpolator itp(fx.ar, fx.pv, LogicId::MC);
  std::vector<AtomId> atoms{fx.p, fx.q};
  Rng rng(64);
  AtomId fresh = fx.ar.atom("s");
  for (int i = 0; i < 30; i++) {
    Sequent s = randomSequent(fx.ar, rng, Lang::Modal, atoms, 4, 2);
    Sequent ext = addSuc(s, fx.ar.var(fresh));
    Fm out = itp.forallSequent(ext, fx.p, Pol::Pos);
    CHECK((vars(out) & ~seqVarsAll(ext)) == 0);
  }
}

TEST_CASE("simplifier is conservative and prover-equivalent") {
  Fixture fx;
  std::vector<AtomId> atoms{fx.p, fx.q, fx.r};
  Simplifier simp(fx.ar);
  Rng rng(31337);
  for (int i = 0; i < 400; i++) {
    Lang lang = i % 2 ? Lang::Modal : Lang::Conditional;
    LogicId l = lang == Lang::Modal ? LogicId::M : LogicId::CK;
    Fm f = randomFormula(fx.ar, rng, lang, atoms,
                         static_cast<int>(rng.below(6)));
    Fm g = simp.simplify(f);
    CHECK(simp.simplify(g) == g);
    CHECK((vars(g) & ~vars(f)) == 0);
    CHECK((posVars(g) & ~posVars(f)) == 0);
    CHECK((negVars(g) & ~negVars(f)) == 0);
    CHECK(weight(g) <= weight(f));
    CHECK(fx.equiv(l, f, g));
  }
  CHECK(simp.simplify(fx.ar.disj(fx.ar.bot(), fx.ar.var(fx.p))) ==
        fx.ar.var(fx.p));
  CHECK(simp.simplify(fx.ar.neg(fx.ar.neg(fx.ar.var(fx.p)))) ==
        fx.ar.var(fx.p));
  Fm dup = fx.ar.disj(fx.ar.var(fx.p), fx.ar.var(fx.p));
  CHECK(simp.simplify(dup) == fx.ar.var(fx.p));
}

TEST_CASE("interpolants are deterministic across engines") {
  Fixture fx;
  std::vector<AtomId> atoms{fx.p, fx.q, fx.r};
  Interpolator a(fx.ar, fx.pv, LogicId::CK);
  Prover pv2;
  Interpolator b(fx.ar, pv2, LogicId::CK);
  Rng rng(2);
  for (int i = 0; i < 25; i++) {
    Sequent s = randomSequent(fx.ar, rng, Lang::Conditional, atoms, 4, 2);
    CHECK(a.forallSequent(s, fx.p, Pol::Pos) ==
          b.forallSequent(s, fx.p, Pol::Pos));
    CHECK(a.forallSequent(s, fx.p, Pol::Pos) ==
          a.forallSequent(s, fx.p, Pol::Pos));
  }
}

TEST_CASE("the CEM family keeps plain uniform interpolation only") {
  Fixture fx;
  Sequent qcase =
      parseSequent(fx.ar, "=> (q > r), (q > ~r)", Lang::Conditional);
  Sequent pcase =
      parseSequent(fx.ar, "=> (p > r), (q > ~r)", Lang::Conditional);
  for (LogicId l : {LogicId::CKCEM, LogicId::CKCEMID}) {
    CHECK(fx.pv.decide(l, qcase));
    CHECK(!fx.pv.decide(l, pcase));
  }
}
