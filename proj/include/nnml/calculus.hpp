#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nnml/sequent.hpp"

namespace nnml {

// The supported logics. CEC and CECN are not given sequent systems in the
// usual presentations; we derive them from GEC/GECN through the box-to-
// conditional translation so the translation bridge can be exercised from
// both ends.
enum class LogicId : uint8_t {
  E, M, EN, MN, MC, K, EC, ECN,
  CE, CM, CEN, CMN, CMC, CK, CKID, CKCEM, CKCEMID,
  CEC, CECN,
};

constexpr int kLogicCount = 19;

enum class RuleId : uint8_t {
  Ax, LBot,
  LAnd, RAnd, LOr, ROr, LImp, RImp,
  Lw, Rw,
  RuleE, RuleM, RuleMC, RuleN, RuleNW, RuleEC,
  RuleCE, RuleCM, RuleCMC, RuleCN, RuleCKID, RuleCKCEM, RuleCKCEMID,
  RuleCEC, RuleCNW,
  Cut,
};

const char* logicName(LogicId l);
const char* calculusName(LogicId l);
const char* ruleName(RuleId r);
std::optional<LogicId> logicFromName(std::string_view name);

Lang logicLang(LogicId l);

// Exact rule set of the calculus: G3cp, explicit weakening in every system
// except the EC/CEC family, plus the logic's modal or conditional rules.
std::vector<RuleId> calculusFor(LogicId l);
bool calculusHas(LogicId l, RuleId r);
bool calculusHasWeakening(LogicId l);
const std::vector<RuleId>& modalRulesOf(LogicId l);

// Logics with uniform Lyndon interpolants (polarity-aware construction).
bool hasUlip(LogicId l);
// Logics handled by the plain (polarity-free) construction.
bool hasPlainUip(LogicId l);

// One concrete backward application: conclusion, premises (ordered by the
// rule's schema) and the principal formulas on each side.
struct RuleInstance {
  RuleId rule;
  Sequent conclusion;
  std::vector<Sequent> premises;
  std::vector<Fm> antPrincipal;
  std::vector<Fm> sucPrincipal;
};

// Ax if some atom occurs on both sides, else LBot if bottom is in the
// antecedent, else nothing. Ax insists on an atomic principal formula.
std::optional<RuleId> axiomMatch(const Sequent& s);

// Complete, duplicate-free enumeration of every rule instance with
// conclusion s, in the fixed search order: non-branching propositional,
// branching propositional, modal/conditional, weakening last. Axioms are
// leaves and not included.
std::vector<RuleInstance> backwardInstances(LogicId l, const Sequent& s);

// Visits the modal/conditional instances only, in enumeration order, and
// stops early once the visitor returns true. Returns whether it stopped.
bool visitModalInstances(LogicId l, const Sequent& s,
                         const std::function<bool(const RuleInstance&)>& visit);

// Machine-readable rule table (schemas and side conditions) per calculus.
std::string ruleRegistryJson();

}  // namespace nnml
