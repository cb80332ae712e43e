#include "nnml/sequent.hpp"

namespace nnml {

int cmpSequent(const Sequent& a, const Sequent& b) {
  auto cmpSide = [](const std::vector<Fm>& x, const std::vector<Fm>& y) {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t i = 0; i < x.size(); i++) {
      int c = cmpFm(x[i], y[i]);
      if (c != 0) return c;
    }
    return 0;
  };
  int c = cmpSide(a.ant, b.ant);
  return c != 0 ? c : cmpSide(a.suc, b.suc);
}

Sequent compose(const Sequent& s, const Sequent& t) {
  uint8_t bits = 0;
  for (Fm f : s.ant) bits |= f->langbits;
  for (Fm f : s.suc) bits |= f->langbits;
  for (Fm f : t.ant) bits |= f->langbits;
  for (Fm f : t.suc) bits |= f->langbits;
  if ((bits & 3) == 3)
    throw std::invalid_argument("compose: language mismatch");
  Sequent r;
  r.ant.resize(s.ant.size() + t.ant.size());
  std::merge(s.ant.begin(), s.ant.end(), t.ant.begin(), t.ant.end(),
             r.ant.begin(), ltFm);
  r.suc.resize(s.suc.size() + t.suc.size());
  std::merge(s.suc.begin(), s.suc.end(), t.suc.begin(), t.suc.end(),
             r.suc.begin(), ltFm);
  return r;
}

int32_t seqWeight(const Sequent& s) {
  int32_t w = 0;
  for (Fm f : s.ant) w += f->w;
  for (Fm f : s.suc) w += f->w;
  return w;
}

uint64_t seqVars(const Sequent& s, Pol pol) {
  uint64_t m = 0;
  for (Fm f : s.ant) m |= varsOf(f, dual(pol));
  for (Fm f : s.suc) m |= varsOf(f, pol);
  return m;
}

bool sequentFitsLang(const Sequent& s, Lang l) {
  for (Fm f : s.ant)
    if (!fitsLang(f, l)) return false;
  for (Fm f : s.suc)
    if (!fitsLang(f, l)) return false;
  return true;
}

Sequent withoutAnt(const Sequent& s, size_t idx) {
  Sequent r = s;
  r.ant.erase(r.ant.begin() + idx);
  return r;
}

Sequent withoutSuc(const Sequent& s, size_t idx) {
  Sequent r = s;
  r.suc.erase(r.suc.begin() + idx);
  return r;
}

Sequent addAnt(const Sequent& s, Fm f) {
  Sequent r = s;
  r.ant.insert(std::upper_bound(r.ant.begin(), r.ant.end(), f, ltFm), f);
  return r;
}

Sequent addSuc(const Sequent& s, Fm f) {
  Sequent r = s;
  r.suc.insert(std::upper_bound(r.suc.begin(), r.suc.end(), f, ltFm), f);
  return r;
}

Sequent replaceAnt(const Sequent& s, size_t idx, std::initializer_list<Fm> repl) {
  Sequent r = withoutAnt(s, idx);
  for (Fm f : repl)
    r.ant.insert(std::upper_bound(r.ant.begin(), r.ant.end(), f, ltFm), f);
  return r;
}

Sequent replaceSuc(const Sequent& s, size_t idx, std::initializer_list<Fm> repl) {
  Sequent r = withoutSuc(s, idx);
  for (Fm f : repl)
    r.suc.insert(std::upper_bound(r.suc.begin(), r.suc.end(), f, ltFm), f);
  return r;
}

Sequent removeAntFm(const Sequent& s, Fm f) {
  Sequent r = s;
  auto it = std::find(r.ant.begin(), r.ant.end(), f);
  if (it == r.ant.end()) throw std::logic_error("removeAntFm: not a member");
  r.ant.erase(it);
  return r;
}

Sequent removeSucFm(const Sequent& s, Fm f) {
  Sequent r = s;
  auto it = std::find(r.suc.begin(), r.suc.end(), f);
  if (it == r.suc.end()) throw std::logic_error("removeSucFm: not a member");
  r.suc.erase(it);
  return r;
}

size_t countAnt(const Sequent& s, Fm f) {
  return std::count(s.ant.begin(), s.ant.end(), f);
}
size_t countSuc(const Sequent& s, Fm f) {
  return std::count(s.suc.begin(), s.suc.end(), f);
}

Sequent parseSequent(Arena& ar, std::string_view text, Lang lang) {
  size_t arrow = text.find("=>");
  if (arrow == std::string_view::npos)
    throw ParseError("sequent must contain =>", 0);
  if (text.find("=>", arrow + 2) != std::string_view::npos)
    throw ParseError("sequent must contain a single =>", arrow + 2);

  auto parseSide = [&](std::string_view side, size_t base) {
    std::vector<Fm> out;
    if (side.find_first_not_of(" \t\r\n") == std::string_view::npos)
      return out;  // empty side
    size_t start = 0;
    for (size_t i = 0; i <= side.size(); i++) {
      if (i < side.size() && side[i] != ',') continue;
      std::string_view piece = side.substr(start, i - start);
      if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw ParseError("empty formula in sequent", base + start);
      try {
        out.push_back(parseFormula(ar, piece, lang));
      } catch (const ParseError& e) {
        throw ParseError(e.msg, base + start + e.pos);
      }
      start = i + 1;
    }
    return out;
  };

  std::string_view lhs = text.substr(0, arrow);
  std::string_view rhs = text.substr(arrow + 2);
  return Sequent(parseSide(lhs, 0), parseSide(rhs, arrow + 2));
}

std::string printSequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.ant.size(); i++) {
    if (i) out += ", ";
    out += printFormula(s.ant[i]);
  }
  out += s.ant.empty() ? "=>" : " =>";
  for (size_t i = 0; i < s.suc.size(); i++) {
    out += i ? ", " : " ";
    out += printFormula(s.suc[i]);
  }
  return out;
}

}  // namespace nnml
