#pragma once

#include <string>

#include "nnml/syntax.hpp"

namespace nnml {

struct ParseError : std::runtime_error {
  std::string msg;
  size_t pos;
  ParseError(const std::string& m, size_t p)
      : std::runtime_error(m + " at position " + std::to_string(p)),
        msg(m),
        pos(p) {}
};

// Grammar (ASCII), loosest to tightest: `->` (right-assoc), `>` (non-assoc),
// `|`, `&`, prefix `~` and `[]`. `false` is bottom, `true` sugars
// `false -> false`. Operands of `>` may be any tighter expression;
// a chained `p > q > r` is rejected.
Fm parseFormula(Arena& ar, std::string_view text, Lang lang);

std::string printFormula(Fm f);

}  // namespace nnml
