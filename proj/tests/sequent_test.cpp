#include <doctest.h>

#include "nnml/gen.hpp"
#include "nnml/sequent.hpp"

using namespace nnml;

TEST_CASE("composition is multiset union with the empty sequent as unit") {
  Arena ar;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r");
  Sequent a({p}, {q});
  Sequent b({}, {r});
  Sequent ab = compose(a, b);
  CHECK(ab == Sequent({p}, {q, r}));
  CHECK(compose(a, Sequent({}, {})) == a);
  Sequent twice = compose(Sequent({p}, {}), Sequent({p}, {}));
  CHECK(twice.ant.size() == 2);
  CHECK(countAnt(twice, p) == 2);
}

TEST_CASE("composition properties on random sequents") {
  Arena ar;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q")};
  Rng rng(3);
  for (int i = 0; i < 200; i++) {
    Sequent s = randomSequent(ar, rng, Lang::Modal, atoms, 4, 2);
    Sequent t = randomSequent(ar, rng, Lang::Modal, atoms, 4, 2);
    Sequent u = randomSequent(ar, rng, Lang::Modal, atoms, 4, 2);
    CHECK(compose(s, t) == compose(t, s));
    CHECK(compose(compose(s, t), u) == compose(s, compose(t, u)));
    CHECK(seqWeight(compose(s, t)) == seqWeight(s) + seqWeight(t));
    CHECK(seqVars(compose(s, t), Pol::Pos) ==
          (seqVars(s, Pol::Pos) | seqVars(t, Pol::Pos)));
    CHECK(seqVars(compose(s, t), Pol::Neg) ==
          (seqVars(s, Pol::Neg) | seqVars(t, Pol::Neg)));
  }
}

TEST_CASE("sequent weight examples") {
  Arena ar;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r");
  CHECK(seqWeight(Sequent({}, {})) == 0);
  CHECK(seqWeight(Sequent({ar.box(p)}, {ar.box(p)})) == 2);
  CHECK(seqWeight(Sequent({ar.cond(p, q), r}, {ar.bot()})) == 1);
}

TEST_CASE("sequent signed variables") {
  Arena ar;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r");
  Sequent s({p}, {q});
  CHECK(seqVars(s, Pol::Pos) == posVars(q));
  CHECK(seqVars(s, Pol::Neg) == posVars(p));
  CHECK(seqVars(Sequent({}, {}), Pol::Pos) == 0);
  Sequent t({ar.cond(p, q)}, {r});
  CHECK(seqVars(t, Pol::Pos) == (posVars(p) | posVars(r)));
  CHECK(seqVars(t, Pol::Neg) == posVars(q));
}

TEST_CASE("canonical form identifies permutations but not multiplicities") {
  Arena ar;
  Fm p = ar.var("p"), q = ar.var("q");
  CHECK(Sequent({q, p}, {}) == Sequent({p, q}, {}));
  CHECK(SequentHash()(Sequent({q, p}, {})) == SequentHash()(Sequent({p, q}, {})));
  CHECK(!(Sequent({p, p}, {}) == Sequent({p}, {})));
  Fm b1 = ar.box(ar.conj(p, q));
  Fm b2 = ar.box(ar.conj(p, q));
  CHECK(Sequent({}, {b1}) == Sequent({}, {b2}));
}

TEST_CASE("language mismatch is rejected") {
  Arena ar;
  Fm p = ar.var("p");
  CHECK_THROWS_AS(compose(Sequent({ar.box(p)}, {}), Sequent({}, {ar.cond(p, p)})),
                  std::invalid_argument);
}

TEST_CASE("sequent text form round trips") {
  Arena ar;
  Sequent s = parseSequent(ar, "p, p & q => r, false", Lang::Modal);
  CHECK(s.ant.size() == 2);
  CHECK(s.suc.size() == 2);
  CHECK(parseSequent(ar, printSequent(s), Lang::Modal) == s);

  Sequent empty = parseSequent(ar, "=>", Lang::Modal);
  CHECK(empty.empty());
  CHECK(parseSequent(ar, printSequent(empty), Lang::Modal) == empty);

  Sequent leftOnly = parseSequent(ar, "p =>", Lang::Modal);
  CHECK(leftOnly.suc.empty());

  CHECK_THROWS_AS(parseSequent(ar, "p, => q", Lang::Modal), ParseError);
  CHECK_THROWS_AS(parseSequent(ar, "p q", Lang::Modal), ParseError);
  CHECK_THROWS_AS(parseSequent(ar, "p => q => r", Lang::Modal), ParseError);

  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  Rng rng(17);
  for (int i = 0; i < 300; i++) {
    Lang lang = i % 2 ? Lang::Modal : Lang::Conditional;
    Sequent t = randomSequent(ar, rng, lang, atoms, 6, 3);
    CHECK(parseSequent(ar, printSequent(t), lang) == t);
  }
}
