#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "nnml/cutelim.hpp"
#include "nnml/json_io.hpp"
#include "nnml/selftest.hpp"
#include "nnml/verify.hpp"

namespace {

using namespace nnml;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string readInput(const std::string& arg) {
  if (!arg.empty()) return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

LogicId needLogic(const std::string& name) {
  auto l = logicFromName(name);
  if (!l) throw CLI::ValidationError("--logic", "unknown logic " + name);
  return *l;
}

void printProofTree(const Proof& p, int depth, std::ostream& os) {
  os << std::string(depth * 2, ' ') << ruleName(p.rule) << "  "
     << printSequent(p.root) << "\n";
  for (const auto& k : p.kids) printProofTree(*k, depth + 1, os);
}

std::vector<AtomId> atomsOfMask(Arena& ar, uint64_t mask) {
  std::vector<AtomId> out;
  for (AtomId a = 0; a < Arena::kMaxAtoms; a++)
    if (mask >> a & 1) out.push_back(a);
  (void)ar;
  return out;
}

int cmdProve(const std::string& logicName_, const std::string& input,
             bool json) {
  Arena ar;
  Prover pv;
  LogicId logic = needLogic(logicName_);
  Sequent s = parseSequent(ar, readInput(input), logicLang(logic));
  ProofPtr proof = pv.prove(logic, s);
  if (!proof) {
    if (json)
      std::cout << "{\"provable\":false,\"sequent\":\"" << printSequent(s)
                << "\"}\n";
    else
      std::cout << "unprovable\n";
    return kNegative;
  }
  if (json)
    std::cout << "{\"provable\":true,\"proof\":" << proofToJson(*proof)
              << "}\n";
  else
    printProofTree(*proof, 0, std::cout);
  return kOk;
}

int cmdInterp(const std::string& logicName_, const std::string& atomName,
              const std::string& polName, const std::string& quant,
              int bound, const std::string& input, bool json) {
  Arena ar;
  Prover pv;
  LogicId logic = needLogic(logicName_);
  if (!hasUlip(logic) && !hasPlainUip(logic)) {
    std::cerr << logicName(logic)
              << " has no uniform interpolation (no Craig interpolation for "
                 "the EC family)\n";
    return kUsage;
  }
  if (polName != "plain" && hasPlainUip(logic)) {
    std::cerr << logicName(logic)
              << " has uniform interpolation but no uniform Lyndon "
                 "interpolation; use --pol plain\n";
    return kUsage;
  }
  Fm f = parseFormula(ar, readInput(input), logicLang(logic));
  AtomId p = ar.atom(atomName);
  Interpolator itp(ar, pv, logic);

  std::optional<Pol> pol;
  if (polName == "pos")
    pol = Pol::Pos;
  else if (polName == "neg")
    pol = Pol::Neg;
  else if (polName != "plain")
    throw CLI::ValidationError("--pol", "expected pos, neg or plain");

  bool exists = quant == "exists";
  Fm cand;
  if (pol)
    cand = exists ? itp.existsFormula(f, p, *pol) : itp.forallFormula(f, p, *pol);
  else
    cand = exists ? itp.plainExists(f, p) : itp.plainForall(f, p);

  std::vector<AtomId> alphabet = atomsOfMask(ar, vars(f) | (1ull << p));
  InterpolantReport rep =
      exists ? verifyExistsFormula(itp, f, p, pol, cand, bound, alphabet)
             : verifyInterpolant(itp, Sequent({}, {f}), p, pol, cand, bound,
                                 alphabet);
  if (json) {
    std::cout << reportToJson(ar, rep, true) << "\n";
  } else {
    std::cout << "interpolant: " << printFormula(cand) << "\n";
    std::cout << "checked " << rep.checked << " side cases, "
              << rep.violations.size() << " violations\n";
    for (const Violation& v : rep.violations)
      std::cout << "  " << v.kind << ": " << v.witness << "\n";
  }
  return rep.ok() ? kOk : kNegative;
}

int cmdCraig(const std::string& logicName_, const std::string& lhsText,
             const std::string& rhsText, int bound, bool json) {
  Arena ar;
  Prover pv;
  LogicId logic = needLogic(logicName_);
  Fm lhs = parseFormula(ar, lhsText, logicLang(logic));
  Fm rhs = parseFormula(ar, rhsText, logicLang(logic));
  if (!pv.decide(logic, Sequent({lhs}, {rhs}))) {
    std::cerr << "the implication is not provable in " << logicName(logic)
              << "\n";
    return kUsage;
  }
  std::vector<AtomId> alphabet = atomsOfMask(ar, vars(lhs) & vars(rhs));
  auto found = searchCraigInterpolant(ar, pv, logic, lhs, rhs, alphabet, bound);
  if (json) {
    std::cout << "{\"found\":" << (found ? "true" : "false");
    if (found) std::cout << ",\"interpolant\":\"" << printFormula(*found) << "\"";
    std::cout << "}\n";
  } else if (found) {
    std::cout << printFormula(*found) << "\n";
  } else {
    std::cout << "no interpolant up to weight " << bound << "\n";
  }
  return found ? kOk : kNegative;
}

int cmdCheck(const std::string& logicName_, const std::string& input,
             bool allowCut, bool json) {
  Arena ar;
  Prover pv;
  LogicId logic = needLogic(logicName_);
  ProofPtr proof = proofFromJson(ar, logic, readInput(input));
  bool ok = pv.checkProof(logic, *proof, allowCut);
  if (json)
    std::cout << "{\"valid\":" << (ok ? "true" : "false") << "}\n";
  else
    std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? kOk : kNegative;
}

int cmdCutelim(const std::string& logicName_, const std::string& input,
               bool json) {
  Arena ar;
  Prover pv;
  LogicId logic = needLogic(logicName_);
  ProofPtr proof = proofFromJson(ar, logic, readInput(input));
  ProofPtr out = eliminateCut(pv, logic, proof);
  if (json)
    std::cout << proofToJson(*out) << "\n";
  else
    printProofTree(*out, 0, std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theorem prover and uniform interpolant synthesizer for basic "
               "non-normal modal and conditional logics"};
  app.require_subcommand(0, 1);

  bool dumpRules = false;
  app.add_flag("--dump-rules", dumpRules, "print the rule registry and exit");

  std::string logic, input, atom, pol = "pos", quant = "forall";
  std::string lhs, rhs, only;
  bool json = false, allowCut = false;
  int bound = 3, jobs = 1;
  uint64_t seed = 1;

  auto* prove = app.add_subcommand("prove", "decide a sequent");
  prove->add_option("--logic", logic)->required();
  prove->add_flag("--json", json);
  prove->add_option("sequent", input);

  auto* interp = app.add_subcommand("interp", "compute a uniform interpolant");
  interp->add_option("--logic", logic)->required();
  interp->add_option("--atom", atom)->required();
  interp->add_option("--pol", pol)->check(CLI::IsMember({"pos", "neg", "plain"}));
  interp->add_option("--quant", quant)->check(CLI::IsMember({"forall", "exists"}));
  interp->add_option("--bound", bound);
  interp->add_flag("--json", json);
  interp->add_option("formula", input);

  auto* craig = app.add_subcommand("craig", "search a Craig interpolant");
  craig->add_option("--logic", logic)->required();
  craig->add_option("--bound", bound);
  craig->add_flag("--json", json);
  craig->add_option("lhs", lhs)->required();
  craig->add_option("rhs", rhs)->required();

  auto* check = app.add_subcommand("check", "validate a proof record");
  check->add_option("--logic", logic)->required();
  check->add_flag("--allow-cut", allowCut);
  check->add_flag("--json", json);
  check->add_option("proof", input);

  auto* cutelim = app.add_subcommand("cutelim", "eliminate cuts from a proof");
  cutelim->add_option("--logic", logic)->required();
  cutelim->add_flag("--json", json);
  cutelim->add_option("proof", input);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", seed);
  selftest->add_option("--jobs", jobs);
  selftest->add_option("--only", only);
  selftest->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (dumpRules) {
      std::cout << nnml::ruleRegistryJson() << "\n";
      return kOk;
    }
    if (prove->parsed()) return cmdProve(logic, input, json);
    if (interp->parsed())
      return cmdInterp(logic, atom, pol, quant, bound, input, json);
    if (craig->parsed()) return cmdCraig(logic, lhs, rhs, bound, json);
    if (check->parsed()) return cmdCheck(logic, input, allowCut, json);
    if (cutelim->parsed()) return cmdCutelim(logic, input, json);
    if (selftest->parsed()) {
      nnml::SelftestOptions opt;
      opt.seed = seed;
      opt.jobs = jobs;
      opt.only = only;
      opt.json = json;
      nnml::SelftestResult res = nnml::runSelftest(opt);
      std::cout << res.report;
      return res.failures == 0 ? kOk : kNegative;
    }
    std::cerr << app.help();
    return kUsage;
  } catch (const nnml::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}
