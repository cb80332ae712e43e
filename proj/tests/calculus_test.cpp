#include <doctest.h>

#include <json.hpp>
#include <set>

#include "nnml/calculus.hpp"
#include "nnml/gen.hpp"

using namespace nnml;

namespace {

size_t countRule(const std::vector<RuleInstance>& v, RuleId r) {
  size_t n = 0;
  for (const auto& i : v) n += i.rule == r;
  return n;
}

}  // namespace

TEST_CASE("calculi contain exactly the documented rules") {
  CHECK(!calculusHas(LogicId::EC, RuleId::Lw));
  CHECK(!calculusHas(LogicId::ECN, RuleId::Rw));
  CHECK(calculusHas(LogicId::ECN, RuleId::RuleNW));
  CHECK(calculusHas(LogicId::K, RuleId::RuleMC));
  CHECK(calculusHas(LogicId::K, RuleId::RuleN));
  CHECK(!calculusHas(LogicId::MC, RuleId::RuleN));
  CHECK(calculusHas(LogicId::CE, RuleId::Lw));
  CHECK(calculusHas(LogicId::CE, RuleId::RuleCE));
  CHECK(!calculusHas(LogicId::CE, RuleId::RuleCN));
  CHECK(calculusHas(LogicId::CK, RuleId::RuleCMC));
  CHECK(calculusHas(LogicId::CK, RuleId::RuleCN));
  CHECK(calculusHas(LogicId::CKID, RuleId::RuleCKID));
  CHECK(!calculusHas(LogicId::CKID, RuleId::RuleCN));
  CHECK(calculusHas(LogicId::CKCEM, RuleId::RuleCKCEM));
  CHECK(!calculusHas(LogicId::CKCEMID, RuleId::RuleCKCEM));
  CHECK(calculusHas(LogicId::CKCEMID, RuleId::RuleCKCEMID));
  for (int i = 0; i < kLogicCount; i++) {
    LogicId l = static_cast<LogicId>(i);
    CHECK(calculusHas(l, RuleId::Ax));
    CHECK(calculusHas(l, RuleId::LImp));
    CHECK(!calculusHas(l, RuleId::Cut));
  }
}

TEST_CASE("axiom matching needs an atomic principal formula") {
  Arena ar;
  Fm p = ar.var("p"), q = ar.var("q");
  CHECK(axiomMatch(Sequent({p, q}, {p})) == RuleId::Ax);
  CHECK(axiomMatch(Sequent({ar.bot()}, {})) == RuleId::LBot);
  CHECK(!axiomMatch(Sequent({ar.conj(p, q)}, {ar.conj(p, q)})));
  CHECK(!axiomMatch(Sequent({p}, {q})));
}

TEST_CASE("backward instances for a boxed identity in K") {
  Arena ar;
  Fm bp = ar.box(ar.var("p"));
  Sequent s({bp}, {bp});
  auto insts = backwardInstances(LogicId::K, s);
  CHECK(insts.size() == 3);
  CHECK(countRule(insts, RuleId::RuleMC) == 1);
  CHECK(countRule(insts, RuleId::Lw) == 1);
  CHECK(countRule(insts, RuleId::Rw) == 1);
  for (const auto& i : insts)
    if (i.rule == RuleId::RuleMC) {
      REQUIRE(i.premises.size() == 1);
      CHECK(i.premises[0] == Sequent({ar.var("p")}, {ar.var("p")}));
    }
}

TEST_CASE("backward instances designate each succedent conditional in CKCEM") {
  Arena ar;
  Fm p = ar.var("p"), q = ar.var("q"), r = ar.var("r");
  Sequent s({}, {ar.cond(p, r), ar.cond(q, ar.neg(r))});
  auto insts = backwardInstances(LogicId::CKCEM, s);
  CHECK(countRule(insts, RuleId::RuleCKCEM) == 2);
  for (const auto& i : insts) {
    if (i.rule != RuleId::RuleCKCEM) continue;
    REQUIRE(i.premises.size() == 3);  // two equivalence premises + psi premise
    Fm head = i.sucPrincipal[0];
    Fm other = i.sucPrincipal[1];
    CHECK(i.premises[0] == Sequent({head->l}, {other->l}));
    CHECK(i.premises[1] == Sequent({other->l}, {head->l}));
    CHECK(i.premises[2] == Sequent({}, {head->r, other->r}));
  }
}

TEST_CASE("backward instances enumerate contexts for EC and NW") {
  Arena ar;
  Fm s0 = ar.var("s"), t0 = ar.var("t");
  Fm ba = ar.box(ar.var("a")), bb = ar.box(ar.var("b"));
  Sequent s({s0, ba}, {bb, t0});
  auto ec = backwardInstances(LogicId::ECN, s);
  CHECK(countRule(ec, RuleId::RuleEC) == 1);
  CHECK(countRule(ec, RuleId::RuleNW) == 1);
  CHECK(countRule(ec, RuleId::Lw) == 0);
  for (const auto& i : ec) {
    if (i.rule == RuleId::RuleEC) {
      REQUIRE(i.premises.size() == 2);
      CHECK(i.premises[0] == Sequent({ar.var("a")}, {ar.var("b")}));
      CHECK(i.premises[1] == Sequent({ar.var("b")}, {ar.var("a")}));
    }
    if (i.rule == RuleId::RuleNW) {
      REQUIRE(i.premises.size() == 1);
      CHECK(i.premises[0] == Sequent({}, {ar.var("b")}));
    }
  }

  // two boxed antecedents: selections of size one and two, times one head
  Sequent s2({ba, bb}, {ar.box(ar.var("c"))});
  auto ec2 = backwardInstances(LogicId::EC, s2);
  CHECK(countRule(ec2, RuleId::RuleEC) == 3);
}

TEST_CASE("instances strictly decrease the lexicographic measure") {
  // the weight never grows and drops strictly except when weakening removes
  // a weight-zero formula, which strictly shrinks the multiset instead
  Arena ar;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  Rng rng(2024);
  int seen = 0;
  for (int i = 0; seen < 10000 && i < 5000; i++) {
    LogicId l = static_cast<LogicId>(rng.below(kLogicCount));
    Sequent s = randomSequent(ar, rng, logicLang(l), atoms, 5, 3);
    for (const RuleInstance& inst : backwardInstances(l, s)) {
      for (const Sequent& prem : inst.premises) {
        seen++;
        int32_t dw = seqWeight(s) - seqWeight(prem);
        if (inst.rule == RuleId::Lw || inst.rule == RuleId::Rw) {
          CHECK(dw >= 0);
          if (dw == 0) CHECK(prem.sizeTotal() < s.sizeTotal());
        } else {
          CHECK(dw > 0);
        }
      }
    }
  }
  CHECK(seen >= 10000);
}

TEST_CASE("structural instances preserve signed variables per polarity") {
  Arena ar;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  Rng rng(77);
  for (int i = 0; i < 2000; i++) {
    LogicId l = static_cast<LogicId>(rng.below(kLogicCount));
    Sequent s = randomSequent(ar, rng, logicLang(l), atoms, 5, 3);
    for (const RuleInstance& inst : backwardInstances(l, s)) {
      switch (inst.rule) {
        case RuleId::LAnd:
        case RuleId::RAnd:
        case RuleId::LOr:
        case RuleId::ROr:
        case RuleId::LImp:
        case RuleId::RImp:
        case RuleId::Lw:
        case RuleId::Rw:
          for (const Sequent& prem : inst.premises) {
            CHECK((seqVars(prem, Pol::Pos) & ~seqVars(s, Pol::Pos)) == 0);
            CHECK((seqVars(prem, Pol::Neg) & ~seqVars(s, Pol::Neg)) == 0);
          }
          break;
        default:
          break;
      }
    }
  }
}

TEST_CASE("every instance reports its own conclusion") {
  Arena ar;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q")};
  Rng rng(31);
  for (int i = 0; i < 500; i++) {
    LogicId l = static_cast<LogicId>(rng.below(kLogicCount));
    Sequent s = randomSequent(ar, rng, logicLang(l), atoms, 5, 3);
    for (const RuleInstance& inst : backwardInstances(l, s))
      CHECK(inst.conclusion == s);
  }
}

TEST_CASE("rule registry is complete machine-readable json") {
  auto j = nlohmann::json::parse(ruleRegistryJson());
  REQUIRE(j.is_array());
  CHECK(j.size() == kLogicCount);
  std::set<std::string> logics;
  for (const auto& entry : j) {
    logics.insert(entry["logic"].get<std::string>());
    REQUIRE(entry.contains("rules"));
    for (const auto& rule : entry["rules"]) {
      CHECK(!rule["name"].get<std::string>().empty());
      CHECK(!rule["conclusion"].get<std::string>().empty());
    }
  }
  CHECK(logics.count("K"));
  CHECK(logics.count("CKCEMID"));
}
