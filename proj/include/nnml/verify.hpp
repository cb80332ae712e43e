#pragma once

#include "nnml/interpolate.hpp"

namespace nnml {

struct Violation {
  std::string kind;  // "var", "i" or "ii" ("iii"/"iv" for the exists side)
  std::string witness;
};

struct InterpolantReport {
  Fm interpolant = nullptr;
  bool varFree = false;
  bool varSubsets = false;
  ProofPtr proofOfI;
  int bound = 0;
  std::vector<AtomId> alphabet;
  uint64_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// All formulas over the alphabet of weight <= maxWeight, one representative
// per class of the conservative simplifier, in a deterministic order.
// Testing a representative decides its whole class, since provability is
// invariant under provable equivalence.
std::vector<Fm> formulaUniverse(Arena& ar, Simplifier& simp, Lang lang,
                                const std::vector<AtomId>& alphabet,
                                int maxWeight);

// Checks a candidate uniform interpolant of S against the sequent-level
// definition: (var) exactly, (i) by proof search, and (ii) over all
// representative side sequents with at most maxSide formulas, each drawn
// from the bounded universe, pairs capped by the same weight bound.
// pol == nullopt runs the plain (polarity-free) check.
InterpolantReport verifyInterpolant(Interpolator& interp, const Sequent& s,
                                    AtomId p, std::optional<Pol> pol,
                                    Fm candidate, int bound,
                                    const std::vector<AtomId>& alphabet,
                                    int maxSide = 2);

// Bounded check of the dual conditions (iii)/(iv) for an exists-form
// interpolant of a formula.
InterpolantReport verifyExistsFormula(Interpolator& interp, Fm f, AtomId p,
                                      std::optional<Pol> pol, Fm candidate,
                                      int bound,
                                      const std::vector<AtomId>& alphabet);

// First formula over the alphabet (by weight, then the fixed order) that
// interpolates lhs -> rhs in the logic, if any exists up to the bound.
// Throws when lhs -> rhs is not provable.
std::optional<Fm> searchCraigInterpolant(Arena& ar, Prover& pv, LogicId logic,
                                         Fm lhs, Fm rhs,
                                         const std::vector<AtomId>& alphabet,
                                         int bound);

}  // namespace nnml
