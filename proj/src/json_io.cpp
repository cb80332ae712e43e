#include "nnml/json_io.hpp"

#include <json.hpp>

namespace nnml {

using nlohmann::json;

namespace {

json proofNode(const Proof& p) {
  json j;
  j["rule"] = ruleName(p.rule);
  j["sequent"] = printSequent(p.root);
  json kids = json::array();
  for (const auto& k : p.kids) kids.push_back(proofNode(*k));
  j["premises"] = std::move(kids);
  return j;
}

std::optional<RuleId> ruleFromName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(RuleId::Cut); i++) {
    RuleId r = static_cast<RuleId>(i);
    if (name == ruleName(r)) return r;
  }
  return std::nullopt;
}

ProofPtr nodeFromJson(Arena& ar, Lang lang, const json& j) {
  if (!j.is_object() || !j.contains("rule") || !j.contains("sequent"))
    throw std::invalid_argument("proof record needs rule and sequent");
  auto rule = ruleFromName(j["rule"].get<std::string>());
  if (!rule)
    throw std::invalid_argument("unknown rule " + j["rule"].get<std::string>());
  Sequent root = parseSequent(ar, j["sequent"].get<std::string>(), lang);
  std::vector<ProofPtr> kids;
  if (j.contains("premises"))
    for (const json& k : j["premises"]) kids.push_back(nodeFromJson(ar, lang, k));
  return makeNode(*rule, std::move(root), std::move(kids));
}

}  // namespace

std::string proofToJson(const Proof& p, bool pretty) {
  json j = proofNode(p);
  return pretty ? j.dump(2) : j.dump();
}

ProofPtr proofFromJson(Arena& ar, LogicId logic, const std::string& text) {
  json j = json::parse(text);
  return nodeFromJson(ar, logicLang(logic), j);
}

namespace {

struct RuleSchema {
  const char* conclusion;
  std::vector<const char*> premises;
  const char* side;
};

RuleSchema schemaFor(RuleId r) {
  switch (r) {
    case RuleId::Ax:
      return {"G, p => p, D", {}, "p atomic"};
    case RuleId::LBot:
      return {"G, false => D", {}, ""};
    case RuleId::LAnd:
      return {"G, A & B => D", {"G, A, B => D"}, ""};
    case RuleId::RAnd:
      return {"G => A & B, D", {"G => A, D", "G => B, D"}, ""};
    case RuleId::LOr:
      return {"G, A | B => D", {"G, A => D", "G, B => D"}, ""};
    case RuleId::ROr:
      return {"G => A | B, D", {"G => A, B, D"}, ""};
    case RuleId::LImp:
      return {"G, A -> B => D", {"G => A, D", "G, B => D"}, ""};
    case RuleId::RImp:
      return {"G => A -> B, D", {"G, A => B, D"}, ""};
    case RuleId::Lw:
      return {"G, A => D", {"G => D"}, ""};
    case RuleId::Rw:
      return {"G => A, D", {"G => D"}, ""};
    case RuleId::RuleE:
      return {"[]A => []B", {"A => B", "B => A"}, ""};
    case RuleId::RuleM:
      return {"[]A => []B", {"A => B"}, ""};
    case RuleId::RuleMC:
      return {"[]A_1, ..., []A_n => []B", {"A_1, ..., A_n => B"}, "n >= 1"};
    case RuleId::RuleN:
      return {"=> []B", {"=> B"}, ""};
    case RuleId::RuleNW:
      return {"S => []B, L", {"=> B"}, ""};
    case RuleId::RuleEC:
      return {"S, []A_1, ..., []A_n => []B, L",
              {"A_1, ..., A_n => B", "B => A_i  (each i)"},
              "n >= 1"};
    case RuleId::RuleCE:
      return {"A1 > B1 => A0 > B0",
              {"A0 => A1", "A1 => A0", "B0 => B1", "B1 => B0"},
              ""};
    case RuleId::RuleCM:
      return {"A1 > B1 => A0 > B0",
              {"A0 => A1", "A1 => A0", "B1 => B0"},
              ""};
    case RuleId::RuleCMC:
      return {"A_1 > B_1, ..., A_n > B_n => A0 > B0",
              {"A0 => A_i, A_i => A0  (each i)", "B_1, ..., B_n => B0"},
              "n >= 1"};
    case RuleId::RuleCN:
      return {"=> A0 > B0", {"=> B0"}, ""};
    case RuleId::RuleCKID:
      return {"{A_i > B_i}_I => A0 > B0",
              {"A0 => A_i, A_i => A0  (each i in I)", "A0, {B_i}_I => B0"},
              "I may be empty"};
    case RuleId::RuleCKCEM:
      return {"{A_i > B_i}_I => A0 > B0, {A_j > B_j}_J",
              {"A0 => A_r, A_r => A0  (each r in I u J)",
               "{B_i}_I => B0, {B_j}_J"},
              "I, J may be empty"};
    case RuleId::RuleCKCEMID:
      return {"{A_i > B_i}_I => A0 > B0, {A_j > B_j}_J",
              {"A0 => A_r, A_r => A0  (each r in I u J)",
               "A0, {B_i}_I => B0, {B_j}_J"},
              "I, J may be empty"};
    case RuleId::RuleCEC:
      return {"S, A_1 > B_1, ..., A_n > B_n => A0 > B0, L",
              {"A0 => A_i, A_i => A0  (each i)", "B_1, ..., B_n => B0",
               "B0 => B_i  (each i)"},
              "n >= 1"};
    case RuleId::RuleCNW:
      return {"S => A0 > B0, L", {"=> B0"}, ""};
    case RuleId::Cut:
      return {"G1, G2 => D1, D2", {"G1 => A, D1", "A, G2 => D2"}, ""};
  }
  return {"", {}, ""};
}

}  // namespace

std::string ruleRegistryJson() {
  json out = json::array();
  for (int i = 0; i < kLogicCount; i++) {
    LogicId l = static_cast<LogicId>(i);
    json entry;
    entry["logic"] = logicName(l);
    entry["calculus"] = calculusName(l);
    entry["language"] = logicLang(l) == Lang::Modal ? "modal" : "conditional";
    json rules = json::array();
    for (RuleId r : calculusFor(l)) {
      RuleSchema s = schemaFor(r);
      json jr;
      jr["name"] = ruleName(r);
      jr["conclusion"] = s.conclusion;
      json prems = json::array();
      for (const char* p : s.premises) prems.push_back(p);
      jr["premises"] = std::move(prems);
      if (s.side[0]) jr["side"] = s.side;
      rules.push_back(std::move(jr));
    }
    entry["rules"] = std::move(rules);
    out.push_back(std::move(entry));
  }
  return out.dump(2);
}

std::string reportToJson(const Arena& ar, const InterpolantReport& rep,
                         bool withProof) {
  json j;
  j["interpolant"] = printFormula(rep.interpolant);
  j["varCheck"] = {{"free", rep.varFree}, {"subsets", rep.varSubsets}};
  if (withProof && rep.proofOfI) j["proofOfI"] = json::parse(proofToJson(*rep.proofOfI));
  j["ii"] = {{"bound", rep.bound}, {"checked", rep.checked}};
  json alpha = json::array();
  for (AtomId a : rep.alphabet) alpha.push_back(ar.atomName(a));
  j["ii"]["alphabet"] = std::move(alpha);
  json viols = json::array();
  for (const Violation& v : rep.violations)
    viols.push_back({{"kind", v.kind}, {"witness", v.witness}});
  j["violations"] = std::move(viols);
  j["ok"] = rep.ok();
  return j.dump();
}

}  // namespace nnml
