#pragma once

#include <array>
#include <memory>

#include "nnml/calculus.hpp"

namespace nnml {

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// A proof tree. Leaves are axiom instances (height 1). Cut nodes appear only
// in inputs to the eliminator.
struct Proof {
  RuleId rule;
  Sequent root;
  std::vector<ProofPtr> kids;
  int height;
};

ProofPtr makeNode(RuleId rule, Sequent root, std::vector<ProofPtr> kids);
bool proofHasCut(const Proof& p);
size_t proofSize(const Proof& p);

// Builds the cut of left (Gamma1 => cut, Delta1) and right
// (cut, Gamma2 => Delta2). Throws if the cut formula is not positioned so.
ProofPtr makeCut(const ProofPtr& left, const ProofPtr& right, Fm cut);

// Recovers a cut formula and checks that the children compose to root.
std::optional<Fm> cutSplit(const Sequent& root, const Sequent& left,
                           const Sequent& right);

// Backward proof search with memoized provability. Rules strictly decrease
// the (weight, size) measure, so exhaustive search terminates and decides
// provability; the six propositional rules are invertible in every calculus
// here (cut is admissible), which lets the search commit to the first
// propositional decomposition it finds.
class Prover {
 public:
  Prover() = default;

  bool decide(LogicId logic, const Sequent& s);

  // A checking proof, or nothing when no cut-free proof exists. Picks the
  // first closing instance in the fixed enumeration order.
  ProofPtr prove(LogicId logic, const Sequent& s);

  bool checkProof(LogicId logic, const Proof& p, bool allowCut = false);

  // Admissible structural rules, realized by re-running the search.
  // nullopt when the given sequent is not provable; failure of the re-search
  // on a provable input would be a soundness bug and throws.
  std::optional<ProofPtr> admissibleContraction(LogicId logic, const Sequent& s,
                                                Fm f, bool inAntecedent);
  std::optional<ProofPtr> admissibleBotElim(LogicId logic, const Sequent& s);

  // proof of root extended by extraAnt/extraSuc; uses explicit weakening
  // where the calculus has it and context absorption otherwise
  ProofPtr weakenProof(LogicId logic, const ProofPtr& p,
                       const std::vector<Fm>& extraAnt,
                       const std::vector<Fm>& extraSuc);

  void clearCache() {
    for (auto& m : cache_) m.clear();
    for (auto& m : proofCache_) m.clear();
  }
  size_t cacheSize() const {
    size_t n = 0;
    for (const auto& m : cache_) n += m.size();
    return n;
  }
  void setCacheCap(size_t cap) { cacheCap_ = cap; }
  uint64_t searchSteps() const { return steps_; }

 private:
  bool search(LogicId logic, const Sequent& s);
  bool modalClosed(LogicId logic, const Sequent& s);
  ProofPtr buildProof(LogicId logic, const Sequent& s);

  using SeqMap = std::unordered_map<Sequent, bool, SequentHash>;
  using ProofMap = std::unordered_map<Sequent, ProofPtr, SequentHash>;
  std::array<SeqMap, kLogicCount> cache_;
  std::array<ProofMap, kLogicCount> proofCache_;
  size_t cacheCap_ = 3'000'000;
  uint64_t steps_ = 0;
};

}  // namespace nnml
