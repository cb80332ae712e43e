#pragma once

#include <string>

#include "nnml/verify.hpp"

namespace nnml {

// proof as a nested {rule, sequent, premises} record
std::string proofToJson(const Proof& p, bool pretty = false);

// parses the same shape back; formulas are read in the logic's language
ProofPtr proofFromJson(Arena& ar, LogicId logic, const std::string& text);

std::string reportToJson(const Arena& ar, const InterpolantReport& rep,
                         bool withProof);

}  // namespace nnml
