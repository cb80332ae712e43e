#include "nnml/simplify.hpp"

#include <algorithm>

namespace nnml {

namespace {

void collect(Fm f, Tag t, std::vector<Fm>& parts) {
  if (f->tag == t) {
    collect(f->l, t, parts);
    collect(f->r, t, parts);
  } else {
    parts.push_back(f);
  }
}

}  // namespace

Fm Simplifier::rebuild(Tag t, std::vector<Fm>& parts) {
  // sorted, duplicate-free spine, folded to the right
  std::sort(parts.begin(), parts.end(), ltFm);
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  Fm acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;)
    acc = t == Tag::And ? ar_.conj(parts[i], acc) : ar_.disj(parts[i], acc);
  return acc;
}

Fm Simplifier::simplify(Fm f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;

  Fm out = f;
  switch (f->tag) {
    case Tag::Bot:
    case Tag::Var:
      break;
    case Tag::And:
    case Tag::Or: {
      Fm a = simplify(f->l), b = simplify(f->r);
      std::vector<Fm> parts;
      collect(a, f->tag, parts);
      collect(b, f->tag, parts);
      Fm bot = ar_.bot(), top = ar_.top();
      Fm killer = f->tag == Tag::And ? bot : top;
      Fm unit = f->tag == Tag::And ? top : bot;
      bool killed = false;
      std::vector<Fm> kept;
      for (Fm g : parts) {
        if (g == killer) killed = true;
        if (g == killer || g == unit) continue;
        kept.push_back(g);
      }
      if (killed)
        out = killer;
      else if (kept.empty())
        out = unit;
      else
        out = rebuild(f->tag, kept);
      break;
    }
    case Tag::Imp: {
      Fm a = simplify(f->l), b = simplify(f->r);
      if (a->tag == Tag::Bot)
        out = ar_.top();
      else if (b->tag == Tag::Bot && ar_.isNeg(a))
        out = a->l;  // ~~x
      else if (ar_.isTop(a))
        out = b;
      else if (ar_.isTop(b))
        out = ar_.top();
      else
        out = ar_.imp(a, b);
      break;
    }
    case Tag::Box:
      out = ar_.box(simplify(f->l));
      break;
    case Tag::Cond:
      out = ar_.cond(simplify(f->l), simplify(f->r));
      break;
  }
  memo_.emplace(f, out);
  return out;
}

}  // namespace nnml
