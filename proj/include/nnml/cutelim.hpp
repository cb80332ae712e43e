#pragma once

#include "nnml/prover.hpp"

namespace nnml {

// Rewrites a checking proof that may contain Cut nodes into a cut-free proof
// of the same endsequent. Topmost cuts are reduced first; each reduction
// recurses on cuts of smaller weight or smaller combined height. Contraction
// and bottom-elimination steps are realized by re-running the search, as are
// the equivalence side premises in the CKCEM-style reductions, whose
// cross-family chains do not stay below the cut weight.
ProofPtr eliminateCut(Prover& prover, LogicId logic, const ProofPtr& proof);

}  // namespace nnml
