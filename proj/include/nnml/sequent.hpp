#pragma once

#include <algorithm>
#include <string>

#include "nnml/parse.hpp"
#include "nnml/syntax.hpp"

namespace nnml {

// A sequent over formula multisets. Both sides are kept sorted by the fixed
// total order, so multiset equality is vector equality and the sorted pair is
// its own canonical memoization key.
struct Sequent {
  std::vector<Fm> ant;
  std::vector<Fm> suc;

  Sequent() = default;
  Sequent(std::vector<Fm> a, std::vector<Fm> s)
      : ant(std::move(a)), suc(std::move(s)) {
    std::sort(ant.begin(), ant.end(), ltFm);
    std::sort(suc.begin(), suc.end(), ltFm);
  }

  bool operator==(const Sequent& o) const { return ant == o.ant && suc == o.suc; }
  bool empty() const { return ant.empty() && suc.empty(); }
  size_t sizeTotal() const { return ant.size() + suc.size(); }
};

struct SequentHash {
  size_t operator()(const Sequent& s) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    for (Fm f : s.ant) mix(f->id * 2 + 1);
    mix(0xabcdefull);
    for (Fm f : s.suc) mix(f->id * 2);
    return static_cast<size_t>(h);
  }
};

int cmpSequent(const Sequent& a, const Sequent& b);

// Multiset union componentwise. Throws if the two sides do not share a
// language.
Sequent compose(const Sequent& s, const Sequent& t);

int32_t seqWeight(const Sequent& s);

// V+(S) = V-(ant) u V+(suc), V-(S) = V+(ant) u V-(suc).
uint64_t seqVars(const Sequent& s, Pol pol);
inline uint64_t seqVarsAll(const Sequent& s) {
  return seqVars(s, Pol::Pos) | seqVars(s, Pol::Neg);
}

// A sequent is "p^pol-free" when p does not occur in V^pol of it.
inline bool seqIsFree(const Sequent& s, AtomId a, Pol pol) {
  return (seqVars(s, pol) >> a & 1) == 0;
}

bool sequentFitsLang(const Sequent& s, Lang l);

// helpers used across modules
Sequent withoutAnt(const Sequent& s, size_t idx);
Sequent withoutSuc(const Sequent& s, size_t idx);
Sequent addAnt(const Sequent& s, Fm f);
Sequent addSuc(const Sequent& s, Fm f);
Sequent replaceAnt(const Sequent& s, size_t idx, std::initializer_list<Fm> repl);
Sequent replaceSuc(const Sequent& s, size_t idx, std::initializer_list<Fm> repl);
// removes one occurrence of f; no-op count mismatch guarded by caller
Sequent removeAntFm(const Sequent& s, Fm f);
Sequent removeSucFm(const Sequent& s, Fm f);
size_t countAnt(const Sequent& s, Fm f);
size_t countSuc(const Sequent& s, Fm f);

Sequent parseSequent(Arena& ar, std::string_view text, Lang lang);
std::string printSequent(const Sequent& s);

}  // namespace nnml
