#include "nnml/syntax.hpp"

namespace nnml {

int cmpFm(Fm a, Fm b) {
  if (a == b) return 0;
  if (a->w != b->w) return a->w < b->w ? -1 : 1;
  if (a->tag != b->tag) return a->tag < b->tag ? -1 : 1;
  switch (a->tag) {
    case Tag::Bot:
      return 0;
    case Tag::Var:
      return a->name->compare(*b->name) < 0 ? -1 : 1;
    case Tag::Box:
      return cmpFm(a->l, b->l);
    default: {
      int c = cmpFm(a->l, b->l);
      return c != 0 ? c : cmpFm(a->r, b->r);
    }
  }
}

AtomId Arena::atom(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  if (!(isalpha(static_cast<unsigned char>(name[0]))))
    throw std::invalid_argument("bad atom name: " + std::string(name));
  for (char c : name)
    if (!isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("bad atom name: " + std::string(name));
  auto it = atomIds_.find(std::string(name));
  if (it != atomIds_.end()) return it->second;
  if (atomNames_.size() >= kMaxAtoms)
    throw std::runtime_error("atom table full (64 distinct atoms supported)");
  AtomId id = static_cast<AtomId>(atomNames_.size());
  atomNames_.emplace_back(name);
  atomIds_.emplace(std::string(name), id);
  return id;
}

Fm Arena::intern(Tag t, AtomId atom, Fm l, Fm r) {
  Key k{t, atom, l, r};
  auto it = interned_.find(k);
  if (it != interned_.end()) return it->second;

  Node n{};
  n.tag = t;
  n.atom = atom;
  n.l = l;
  n.r = r;
  n.id = static_cast<uint32_t>(nodes_.size());
  switch (t) {
    case Tag::Bot:
      n.w = 0;
      break;
    case Tag::Var:
      n.w = 0;
      n.pos = 1ull << atom;
      n.name = &atomNames_[atom];
      break;
    case Tag::And:
    case Tag::Or:
      n.w = l->w + r->w + 1;
      n.pos = l->pos | r->pos;
      n.neg = l->neg | r->neg;
      n.langbits = l->langbits | r->langbits;
      break;
    case Tag::Imp:
    case Tag::Cond:
      n.w = l->w + r->w + 1;
      n.pos = l->neg | r->pos;
      n.neg = l->pos | r->neg;
      n.langbits = l->langbits | r->langbits;
      if (t == Tag::Cond) n.langbits |= 2;
      break;
    case Tag::Box:
      n.w = l->w + 1;
      n.pos = l->pos;
      n.neg = l->neg;
      n.langbits = l->langbits | 1;
      break;
  }
  if ((n.langbits & 3) == 3)
    throw std::invalid_argument("box and conditional cannot occur in one formula");
  nodes_.push_back(n);
  Fm p = &nodes_.back();
  interned_.emplace(k, p);
  return p;
}

Fm Arena::bot() { return intern(Tag::Bot, -1, nullptr, nullptr); }
Fm Arena::var(AtomId a) { return intern(Tag::Var, a, nullptr, nullptr); }
Fm Arena::conj(Fm a, Fm b) { return intern(Tag::And, -1, a, b); }
Fm Arena::disj(Fm a, Fm b) { return intern(Tag::Or, -1, a, b); }
Fm Arena::imp(Fm a, Fm b) { return intern(Tag::Imp, -1, a, b); }
Fm Arena::box(Fm a) { return intern(Tag::Box, -1, a, nullptr); }
Fm Arena::cond(Fm a, Fm b) { return intern(Tag::Cond, -1, a, b); }

Fm Arena::substitute(Fm f, AtomId a, Fm g) {
  if ((hasBox(f) && hasCond(g)) || (hasCond(f) && hasBox(g)))
    throw std::invalid_argument("substitute: language mismatch");
  if ((vars(f) >> a & 1) == 0) return f;
  switch (f->tag) {
    case Tag::Bot:
      return f;
    case Tag::Var:
      return f->atom == a ? g : f;
    case Tag::And:
      return conj(substitute(f->l, a, g), substitute(f->r, a, g));
    case Tag::Or:
      return disj(substitute(f->l, a, g), substitute(f->r, a, g));
    case Tag::Imp:
      return imp(substitute(f->l, a, g), substitute(f->r, a, g));
    case Tag::Box:
      return box(substitute(f->l, a, g));
    case Tag::Cond:
      return cond(substitute(f->l, a, g), substitute(f->r, a, g));
  }
  return f;
}

}  // namespace nnml
