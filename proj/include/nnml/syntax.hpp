#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nnml {

// Connectives. Top and negation are abbreviations: true = false -> false,
// ~A = A -> false. Constructors produce exactly those shapes.
enum class Tag : uint8_t { Bot, Var, And, Or, Imp, Box, Cond };

enum class Pol : uint8_t { Pos, Neg };
constexpr Pol dual(Pol p) { return p == Pol::Pos ? Pol::Neg : Pol::Pos; }

enum class Lang : uint8_t { Modal, Conditional };

using AtomId = int32_t;

struct Node {
  Tag tag;
  uint8_t langbits;  // bit 0: contains a Box, bit 1: contains a Cond
  AtomId atom;       // Var only, else -1
  uint32_t id;       // arena insertion index
  int32_t w;         // formula weight
  const Node* l;
  const Node* r;
  const std::string* name;  // Var only
  uint64_t pos;             // positive-variable mask over arena atom ids
  uint64_t neg;
};

using Fm = const Node*;

inline int32_t weight(Fm f) { return f->w; }
inline uint64_t posVars(Fm f) { return f->pos; }
inline uint64_t negVars(Fm f) { return f->neg; }
inline uint64_t vars(Fm f) { return f->pos | f->neg; }
inline uint64_t varsOf(Fm f, Pol p) { return p == Pol::Pos ? f->pos : f->neg; }
inline bool isFree(Fm f, AtomId a, Pol p) { return (varsOf(f, p) >> a & 1) == 0; }
inline bool isPlainFree(Fm f, AtomId a) { return (vars(f) >> a & 1) == 0; }

inline bool hasBox(Fm f) { return f->langbits & 1; }
inline bool hasCond(Fm f) { return f->langbits & 2; }
inline bool fitsLang(Fm f, Lang l) {
  return l == Lang::Modal ? !hasCond(f) : !hasBox(f);
}

// Total order on formulas: weight, then tag, then atom name / children.
// Used for canonical multiset sorting and deterministic tie-breaking.
int cmpFm(Fm a, Fm b);
inline bool ltFm(Fm a, Fm b) { return cmpFm(a, b) < 0; }

// Hash-consing arena. Structural equality of interned formulas is pointer
// equality. Not thread-safe; concurrent workers each own an Arena.
class Arena {
 public:
  static constexpr int kMaxAtoms = 64;

  AtomId atom(std::string_view name);
  const std::string& atomName(AtomId a) const { return atomNames_.at(a); }
  int atomCount() const { return static_cast<int>(atomNames_.size()); }

  Fm bot();
  Fm var(AtomId a);
  Fm var(std::string_view name) { return var(atom(name)); }
  Fm conj(Fm a, Fm b);
  Fm disj(Fm a, Fm b);
  Fm imp(Fm a, Fm b);
  Fm box(Fm a);
  Fm cond(Fm a, Fm b);

  Fm top() { return imp(bot(), bot()); }
  Fm neg(Fm a) { return imp(a, bot()); }

  bool isTop(Fm f) const {
    return f->tag == Tag::Imp && f->l->tag == Tag::Bot && f->r->tag == Tag::Bot;
  }
  bool isNeg(Fm f) const { return f->tag == Tag::Imp && f->r->tag == Tag::Bot; }

  // Replaces every occurrence of atom a by g. Throws on language mismatch.
  Fm substitute(Fm f, AtomId a, Fm g);

  size_t size() const { return nodes_.size(); }

 private:
  struct Key {
    Tag tag;
    AtomId atom;
    const Node* l;
    const Node* r;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      size_t h = static_cast<size_t>(k.tag) * 0x9e3779b97f4a7c15ull;
      h ^= std::hash<const void*>()(k.l) + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= std::hash<const void*>()(k.r) + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= static_cast<size_t>(k.atom) * 0xff51afd7ed558ccdull;
      return h;
    }
  };

  Fm intern(Tag t, AtomId atom, Fm l, Fm r);

  std::deque<Node> nodes_;
  std::unordered_map<Key, Fm, KeyHash> interned_;
  std::deque<std::string> atomNames_;
  std::unordered_map<std::string, AtomId, std::hash<std::string>> atomIds_;
};

}  // namespace nnml
