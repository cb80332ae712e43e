#pragma once

#include "nnml/prover.hpp"
#include "nnml/simplify.hpp"

namespace nnml {

// box-to-conditional translation and its left inverse
Fm translateT(Arena& ar, Fm modal);
Fm translateS(Arena& ar, Fm conditional);

// Uniform interpolant synthesis for one logic. Thirteen logics get the
// polarity-aware (Lyndon) construction; CKCEM and CKCEMID get the plain one.
// The remaining logics have no uniform interpolation and are rejected.
class Interpolator {
 public:
  enum class Kind : uint8_t { Lyndon, Plain };

  Interpolator(Arena& ar, Prover& pv, LogicId logic);

  LogicId logic() const { return logic_; }
  Kind kind() const { return kind_; }
  Arena& arena() { return ar_; }
  Prover& prover() { return pv_; }

  // strongest p^pol-free right-weakening of S (the universal quantifier on
  // sequents); Lyndon logics only
  Fm forallSequent(const Sequent& s, AtomId p, Pol pol);
  // polarity-free variant; CKCEM-family only
  Fm plainForallSequent(const Sequent& s, AtomId p);

  // the axiom disjunct and the modal/conditional disjunct of the
  // construction, exposed on their own
  Fm axiomInterpolant(const Sequent& s, AtomId p, std::optional<Pol> pol);
  Fm modalInterpolant(const Sequent& s, AtomId p, std::optional<Pol> pol);

  Fm forallFormula(Fm f, AtomId p, Pol pol);
  Fm existsFormula(Fm f, AtomId p, Pol pol);

  // polarity-free quantifiers; composition of both polarities on Lyndon
  // logics, the direct construction on the CKCEM family
  Fm plainForall(Fm f, AtomId p);
  Fm plainExists(Fm f, AtomId p);

  // interpolant for a provable implication, with both implications and the
  // variable conditions checked before returning; throws if lhs => rhs is
  // not provable
  Fm lyndonInterpolant(Fm lhs, Fm rhs);

  // prover-checked simplification hook used on every synthesized formula
  Fm simp(Fm f);
  Simplifier& simplifier() { return simp_; }

  void setDebugChecks(bool on) { debugChecks_ = on; }

 private:
  struct Key {
    Sequent s;
    AtomId p;
    uint8_t polCode;  // 0 pos, 1 neg, 2 plain
    bool operator==(const Key& o) const {
      return p == o.p && polCode == o.polCode && s == o.s;
    }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return SequentHash()(k.s) * 131 + static_cast<size_t>(k.p) * 7 +
             k.polCode;
    }
  };

  Fm uni(const Sequent& s, AtomId p, std::optional<Pol> pol);
  Fm modalPart(const Sequent& s, AtomId p, std::optional<Pol> pol);
  Fm axiomPart(const Sequent& s, AtomId p, std::optional<Pol> pol);
  bool equivalent(Fm a, Fm b);
  Fm orAll(std::vector<Fm>& xs);
  Fm andAll(std::vector<Fm>& xs);
  // drops disjuncts implied by the rest (dually for conjuncts); keeps the
  // composed quantifiers from snowballing
  Fm subsume(Fm f);

  Arena& ar_;
  Prover& pv_;
  LogicId logic_;
  Kind kind_;
  Simplifier simp_;
  std::unordered_map<Key, Fm, KeyHash> memo_;
  bool debugChecks_ = false;
};

}  // namespace nnml
