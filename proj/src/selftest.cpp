#include "nnml/selftest.hpp"

#include <atomic>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "nnml/cutelim.hpp"
#include "nnml/gen.hpp"
#include "nnml/json_io.hpp"
#include "nnml/verify.hpp"

namespace nnml {

namespace {

struct CaseOutcome {
  bool pass = false;
  std::string detail;
};

struct Case {
  std::string name;
  std::string criterion;
  std::function<CaseOutcome(uint64_t)> fn;  // argument: derived seed
};

uint64_t mixSeed(uint64_t seed, const std::string& tag) {
  uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

const std::vector<LogicId>& ulipLogics() {
  static const std::vector<LogicId> v = {
      LogicId::E,  LogicId::M,   LogicId::EN,  LogicId::MN, LogicId::MC,
      LogicId::K,  LogicId::CE,  LogicId::CM,  LogicId::CEN,
      LogicId::CMN, LogicId::CMC, LogicId::CK, LogicId::CKID};
  return v;
}

// ---------------------------------------------------------------- criterion 1

struct AxiomCase {
  LogicId logic;
  const char* text;
  bool provable;
};

const std::vector<AxiomCase>& axiomTable() {
  static const std::vector<AxiomCase> t = {
      // defining axioms and rule consequences
      {LogicId::E, "[](p & q) => [](q & p)", true},
      {LogicId::M, "=> [](p & q) -> []p & []q", true},
      {LogicId::MC, "=> [](p & q) -> []p & []q", true},
      {LogicId::MC, "=> []p & []q -> [](p & q)", true},
      {LogicId::EN, "=> []true", true},
      {LogicId::MN, "=> []true", true},
      {LogicId::K, "=> [](p -> q) -> ([]p -> []q)", true},
      {LogicId::K, "=> []true", true},
      {LogicId::EC, "=> []p & []q -> [](p & q)", true},
      {LogicId::EC, "[](p & q) => [](q & p)", true},
      {LogicId::EC, "[](~q & r), [](p & q) => []false", true},
      {LogicId::ECN, "=> []true", true},
      {LogicId::CE, "(p & q) > r => (q & p) > r", true},
      {LogicId::CM, "=> (p > (q & r)) -> ((p > q) & (p > r))", true},
      {LogicId::CMC, "=> ((p > q) & (p > r)) -> (p > (q & r))", true},
      {LogicId::CEN, "=> p > true", true},
      {LogicId::CMN, "=> p > true", true},
      {LogicId::CK, "=> ((p > (q -> r)) & (p > q)) -> (p > r)", true},
      {LogicId::CK, "=> p > true", true},
      {LogicId::CKID, "=> p > p", true},
      {LogicId::CKID, "=> ((p > q) & (p > r)) -> (p > (q & r))", true},
      {LogicId::CKCEM, "=> (p > q) | (p > ~q)", true},
      {LogicId::CKCEMID, "=> (p > q) | (p > ~q)", true},
      {LogicId::CKCEMID, "=> p > p", true},
      {LogicId::CEC, "=> ((p > q) & (p > r)) -> (p > (q & r))", true},
      {LogicId::CECN, "=> p > true", true},
      // documented non-theorems
      {LogicId::M, "=> []p & []q -> [](p & q)", false},
      {LogicId::E, "=> []true", false},
      {LogicId::EC, "=> [](p & q) -> []p & []q", false},
      {LogicId::E, "=> [](p & q) -> []p & []q", false},
      {LogicId::M, "=> [](p -> q) -> ([]p -> []q)", false},
      {LogicId::CM, "=> ((p > q) & (p > r)) -> (p > (q & r))", false},
      {LogicId::CE, "=> (p > (q & r)) -> ((p > q) & (p > r))", false},
      {LogicId::CK, "=> p > p", false},
      {LogicId::CK, "=> (p > q) | (p > ~q)", false},
      {LogicId::CKCEM, "=> p > p", false},
      {LogicId::K, "=> []p", false},
      {LogicId::K, "p =>", false},
  };
  return t;
}

CaseOutcome runAxiomMatrix(uint64_t) {
  Arena ar;
  Prover pv;
  int pos = 0, neg = 0;
  std::string bad;
  for (const AxiomCase& c : axiomTable()) {
    Sequent s = parseSequent(ar, c.text, logicLang(c.logic));
    bool got = pv.decide(c.logic, s);
    if (got != c.provable) {
      bad += std::string(" [") + logicName(c.logic) + " " + c.text + "]";
      continue;
    }
    (c.provable ? pos : neg)++;
  }
  std::ostringstream os;
  if (!bad.empty()) return {false, "mismatch:" + bad};
  os << pos << " theorems and " << neg << " non-theorems matched";
  return {pos >= 12 && neg >= 6, os.str()};
}

// ----------------------------------------------------------- criteria 2 and 3

CaseOutcome runUniformSuite(LogicId logic, bool plain, uint64_t seed) {
  Arena ar;
  Prover pv;
  Interpolator itp(ar, pv, logic);
  AtomId p = ar.atom("p");
  std::vector<AtomId> atoms{p, ar.atom("q"), ar.atom("r")};
  Rng rng(seed);
  uint64_t checked = 0;
  int made = 0;
  std::string firstBad;
  for (int i = 0; i < 200; i++) {
    Sequent s = randomSequent(ar, rng, logicLang(logic), atoms, 5, 3);
    for (int side = 0; side < (plain ? 1 : 2); side++) {
      std::optional<Pol> pol;
      Fm cand;
      if (plain) {
        cand = itp.plainForallSequent(s, p);
      } else {
        pol = side == 0 ? Pol::Pos : Pol::Neg;
        cand = itp.forallSequent(s, p, *pol);
      }
      made++;
      InterpolantReport rep =
          verifyInterpolant(itp, s, p, pol, cand, 3, atoms);
      checked += rep.checked;
      if (!rep.ok() && firstBad.empty())
        firstBad = printSequent(s) + " : " + rep.violations[0].kind + " " +
                   rep.violations[0].witness;
    }
  }
  std::ostringstream os;
  if (!firstBad.empty()) return {false, "violation at " + firstBad};
  os << made << " interpolants verified, " << checked << " side sequents";
  return {true, os.str()};
}

// ---------------------------------------------------------------- criterion 4

CaseOutcome runCutSuite(LogicId logic, uint64_t seed) {
  Arena ar;
  Prover pv;
  Lang lang = logicLang(logic);
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  Rng rng(seed);
  int done = 0;
  long trials = 0;
  while (done < 300 && trials < 300000) {
    trials++;
    Fm cut = randomFormula(ar, rng, lang, atoms,
                           static_cast<int>(1 + rng.below(2)));
    Sequent left = randomSequent(ar, rng, lang, atoms, 3, 2);
    Sequent right = randomSequent(ar, rng, lang, atoms, 3, 2);
    if (rng.chance(50)) left = addAnt(left, cut);
    left = addSuc(left, cut);
    right = addAnt(right, cut);
    if (!pv.decide(logic, left) || !pv.decide(logic, right)) continue;

    ProofPtr l = pv.prove(logic, left);
    ProofPtr r = pv.prove(logic, right);
    ProofPtr withCut = makeCut(l, r, cut);
    if (!pv.decide(logic, withCut->root))
      return {false, "composed endsequent unprovable: " +
                         printSequent(withCut->root)};
    ProofPtr elim;
    try {
      elim = eliminateCut(pv, logic, withCut);
    } catch (const std::exception& e) {
      return {false, std::string("elimination threw: ") + e.what() + " at " +
                         printSequent(withCut->root)};
    }
    if (proofHasCut(*elim))
      return {false, "cut survived at " + printSequent(withCut->root)};
    if (!(elim->root == withCut->root))
      return {false, "endsequent changed at " + printSequent(withCut->root)};
    if (!pv.checkProof(logic, *elim))
      return {false, "result fails the checker at " +
                         printSequent(withCut->root)};
    done++;
  }
  std::ostringstream os;
  os << done << " cut compositions eliminated (" << trials << " samples)";
  return {done == 300, os.str()};
}

// ---------------------------------------------------------------- criterion 5

CaseOutcome runNoCip(uint64_t) {
  Arena ar;
  Prover pv;
  Fm phi = parseFormula(ar, "[](~q & r)", Lang::Modal);
  Fm psi = parseFormula(ar, "[](p & q) -> []false", Lang::Modal);
  Sequent tree =
      parseSequent(ar, "[](~q & r), [](p & q) => []false", Lang::Modal);
  if (!pv.decide(LogicId::EC, tree))
    return {false, "the witness sequent is not provable in EC"};
  std::vector<AtomId> alpha{ar.atom("q")};
  for (LogicId l : {LogicId::EC, LogicId::ECN}) {
    auto found = searchCraigInterpolant(ar, pv, l, phi, psi, alpha, 4);
    if (found)
      return {false, std::string("unexpected interpolant in ") + logicName(l) +
                         ": " + printFormula(*found)};
  }
  auto inK = searchCraigInterpolant(ar, pv, LogicId::K, phi, psi, alpha, 4);
  if (!inK) return {false, "no interpolant found in K"};
  return {true, "none in EC/ECN up to weight 4; K finds " +
                    printFormula(*inK)};
}

// ---------------------------------------------------------------- criterion 6

CaseOutcome runCemWitness(uint64_t) {
  Arena ar;
  Prover pv;
  Sequent good = parseSequent(ar, "=> (q > r), (q > ~r)", Lang::Conditional);
  Sequent bad = parseSequent(ar, "=> (p > r), (q > ~r)", Lang::Conditional);
  for (LogicId l : {LogicId::CKCEM, LogicId::CKCEMID}) {
    if (!pv.decide(l, good))
      return {false, std::string("q-instance unprovable in ") + logicName(l)};
    if (pv.decide(l, bad))
      return {false, std::string("p/q-instance provable in ") + logicName(l)};
  }
  return {true, "(=> q>r, q>~r) provable, (=> p>r, q>~r) unprovable in both"};
}

// ---------------------------------------------------------------- criterion 7

CaseOutcome runBridge(uint64_t seed) {
  Arena ar;
  Prover pv;
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  Rng rng(seed);

  auto provableFormula = [&](LogicId logic, Lang lang) -> Fm {
    for (int guard = 0; guard < 100000; guard++) {
      Sequent s = randomSequent(ar, rng, lang, atoms, 4, 2);
      if (rng.chance(50) && !s.suc.empty()) s = addAnt(s, s.suc[0]);
      if (!pv.decide(logic, s)) continue;
      Fm f = foldSequent(ar, s);
      if (!pv.decide(logic, Sequent({}, {f})))
        throw std::logic_error("sequent folding lost provability");
      return f;
    }
    throw std::logic_error("no provable sample found");
  };

  for (auto [mod, cond] : {std::pair{LogicId::EC, LogicId::CEC},
                           std::pair{LogicId::ECN, LogicId::CECN}}) {
    for (int i = 0; i < 50; i++) {
      Fm f = provableFormula(mod, Lang::Modal);
      if (!pv.decide(cond, Sequent({}, {translateT(ar, f)})))
        return {false, std::string(logicName(mod)) + " theorem lost: " +
                           printFormula(f)};
    }
    for (int i = 0; i < 50; i++) {
      Fm f = provableFormula(cond, Lang::Conditional);
      if (!pv.decide(mod, Sequent({}, {translateS(ar, f)})))
        return {false, std::string(logicName(cond)) + " theorem lost: " +
                           printFormula(f)};
    }
  }
  for (int i = 0; i < 1000; i++) {
    Fm f = randomFormula(ar, rng, Lang::Modal, atoms,
                         static_cast<int>(rng.below(7)));
    if (translateS(ar, translateT(ar, f)) != f)
      return {false, "round trip differs for " + printFormula(f)};
  }
  return {true, "200 translated theorems and 1000 round trips"};
}

// ---------------------------------------------------------------- criterion 8

CaseOutcome runLyndonSuite(LogicId logic, uint64_t seed) {
  Arena ar;
  Prover pv;
  Interpolator itp(ar, pv, logic);
  Lang lang = logicLang(logic);
  std::vector<AtomId> atoms{ar.atom("p"), ar.atom("q"), ar.atom("r")};
  std::vector<AtomId> shared{atoms[1], atoms[2]};
  Rng rng(seed);
  int done = 0;
  long trials = 0;
  while (done < 100 && trials < 300000) {
    trials++;
    // mix implications whose right side drops atoms of the left, so the
    // existential quantifiers actually fire, with fully random pairs
    Fm lhs, rhs;
    uint32_t mode = rng.below(10);
    if (mode < 4) {
      Fm f = randomFormula(ar, rng, lang, shared,
                           static_cast<int>(rng.below(3)));
      Fm g = randomFormula(ar, rng, lang, atoms,
                           static_cast<int>(rng.below(3)));
      Fm h = randomFormula(ar, rng, lang, shared,
                           static_cast<int>(rng.below(3)));
      lhs = ar.conj(f, g);
      rhs = ar.disj(f, h);
    } else {
      lhs = randomFormula(ar, rng, lang, atoms,
                          static_cast<int>(rng.below(4)));
      rhs = randomFormula(ar, rng, lang, mode < 7 ? shared : atoms,
                          static_cast<int>(rng.below(4)));
      if (mode == 9) rhs = ar.disj(lhs, rhs);
    }
    if (!pv.decide(logic, Sequent({lhs}, {rhs}))) continue;
    Fm theta;
    try {
      theta = itp.lyndonInterpolant(lhs, rhs);
    } catch (const std::exception& e) {
      return {false, std::string("failed for ") + printFormula(lhs) + " -> " +
                         printFormula(rhs) + ": " + e.what()};
    }
    bool vars = (posVars(theta) & ~(posVars(lhs) & posVars(rhs))) == 0 &&
                (negVars(theta) & ~(negVars(lhs) & negVars(rhs))) == 0;
    bool proofs = pv.decide(logic, Sequent({lhs}, {theta})) &&
                  pv.decide(logic, Sequent({theta}, {rhs}));
    if (!vars || !proofs)
      return {false, "conditions fail for " + printFormula(lhs) + " -> " +
                         printFormula(rhs)};
    done++;
  }
  std::ostringstream os;
  os << done << " interpolated implications (" << trials << " samples)";
  return {done == 100, os.str()};
}

// ------------------------------------------------------------------- driver

std::vector<Case> buildCases() {
  std::vector<Case> cases;
  cases.push_back({"c1.axioms", "1", runAxiomMatrix});
  for (LogicId l : ulipLogics())
    cases.push_back({std::string("c2.ulip.") + logicName(l), "2",
                     [l](uint64_t s) { return runUniformSuite(l, false, s); }});
  for (LogicId l : {LogicId::CKCEM, LogicId::CKCEMID})
    cases.push_back({std::string("c3.uip.") + logicName(l), "3",
                     [l](uint64_t s) { return runUniformSuite(l, true, s); }});
  for (int i = 0; i < kLogicCount; i++) {
    LogicId l = static_cast<LogicId>(i);
    cases.push_back({std::string("c4.cut.") + logicName(l), "4",
                     [l](uint64_t s) { return runCutSuite(l, s); }});
  }
  cases.push_back({"c5.nocip", "5", runNoCip});
  cases.push_back({"c6.cem", "6", runCemWitness});
  cases.push_back({"c7.bridge", "7", runBridge});
  for (LogicId l : ulipLogics())
    cases.push_back({std::string("c8.lyndon.") + logicName(l), "8",
                     [l](uint64_t s) { return runLyndonSuite(l, s); }});
  return cases;
}

const char* criterionTitle(const std::string& id) {
  if (id == "1") return "axiom regression matrix";
  if (id == "2") return "uniform Lyndon interpolation";
  if (id == "3") return "uniform interpolation for the CEM family";
  if (id == "4") return "cut admissibility and elimination";
  if (id == "5") return "EC/ECN Craig interpolation failure";
  if (id == "6") return "CKCEM Lyndon failure witness";
  if (id == "7") return "translation bridge";
  if (id == "8") return "Lyndon interpolation from implications";
  return "?";
}

struct PassResult {
  std::string body;
  int failures;
};

PassResult runOnce(const SelftestOptions& opt) {
  std::vector<Case> cases = buildCases();
  std::vector<Case> selected;
  for (Case& c : cases)
    if (opt.only.empty() || c.name.rfind(opt.only, 0) == 0)
      selected.push_back(std::move(c));

  std::vector<CaseOutcome> outcomes(selected.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= selected.size()) break;
      try {
        outcomes[i] = selected[i].fn(mixSeed(opt.seed, selected[i].name));
      } catch (const std::exception& e) {
        outcomes[i] = {false, std::string("exception: ") + e.what()};
      }
      // progress on stderr only; stdout stays byte-comparable
      std::cerr << "[" << (i + 1) << "/" << selected.size() << "] "
                << selected[i].name << (outcomes[i].pass ? " ok" : " FAIL")
                << std::endl;
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream out;
  int failures = 0;
  std::vector<std::pair<std::string, bool>> perCriterion;
  for (size_t i = 0; i < selected.size(); i++) {
    const CaseOutcome& o = outcomes[i];
    if (!o.pass) failures++;
    if (opt.json) {
      out << "{\"case\":\"" << selected[i].name << "\",\"pass\":"
          << (o.pass ? "true" : "false") << ",\"detail\":\"" << o.detail
          << "\"}\n";
    } else {
      out << selected[i].name << ": " << (o.pass ? "PASS" : "FAIL") << " - "
          << o.detail << "\n";
    }
    bool fresh = perCriterion.empty() ||
                 perCriterion.back().first != selected[i].criterion;
    if (fresh) perCriterion.emplace_back(selected[i].criterion, true);
    perCriterion.back().second &= o.pass;
  }
  if (!opt.json)
    for (auto& [id, pass] : perCriterion)
      out << "criterion " << id << " (" << criterionTitle(id)
          << "): " << (pass ? "PASS" : "FAIL") << "\n";
  return {out.str(), failures};
}

}  // namespace

SelftestResult runSelftest(const SelftestOptions& opt) {
  PassResult first = runOnce(opt);
  std::string report = first.body;
  int failures = first.failures;
  if (opt.repeat) {
    PassResult second = runOnce(opt);
    bool same = second.body == first.body;
    if (!same) failures++;
    if (opt.json)
      report += std::string("{\"case\":\"c9.determinism\",\"pass\":") +
                (same ? "true" : "false") + ",\"detail\":\"\"}\n";
    else
      report += std::string("criterion 9 (determinism): ") +
                (same ? "PASS" : "FAIL") + "\n";
  }
  std::ostringstream tail;
  tail << "selftest: " << (failures == 0 ? "PASS" : "FAIL") << " ("
       << failures << " failing)\n";
  return {report + tail.str(), failures};
}

}  // namespace nnml
