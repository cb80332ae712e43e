#include "nnml/calculus.hpp"

#include <array>

namespace nnml {

namespace {

struct LogicInfo {
  const char* name;
  const char* calculus;
  Lang lang;
  bool weakening;
  std::vector<RuleId> extra;  // modal/conditional rules
};

const std::array<LogicInfo, kLogicCount>& logicTable() {
  static const std::array<LogicInfo, kLogicCount> t = {{
      {"E", "GE", Lang::Modal, true, {RuleId::RuleE}},
      {"M", "GM", Lang::Modal, true, {RuleId::RuleM}},
      {"EN", "GEN", Lang::Modal, true, {RuleId::RuleE, RuleId::RuleN}},
      {"MN", "GMN", Lang::Modal, true, {RuleId::RuleM, RuleId::RuleN}},
      {"MC", "GMC", Lang::Modal, true, {RuleId::RuleMC}},
      {"K", "GK", Lang::Modal, true, {RuleId::RuleMC, RuleId::RuleN}},
      {"EC", "GEC", Lang::Modal, false, {RuleId::RuleEC}},
      {"ECN", "GECN", Lang::Modal, false, {RuleId::RuleEC, RuleId::RuleNW}},
      {"CE", "GCE", Lang::Conditional, true, {RuleId::RuleCE}},
      {"CM", "GCM", Lang::Conditional, true, {RuleId::RuleCM}},
      {"CEN", "GCEN", Lang::Conditional, true, {RuleId::RuleCE, RuleId::RuleCN}},
      {"CMN", "GCMN", Lang::Conditional, true, {RuleId::RuleCM, RuleId::RuleCN}},
      {"CMC", "GCMC", Lang::Conditional, true, {RuleId::RuleCMC}},
      {"CK", "GCK", Lang::Conditional, true, {RuleId::RuleCMC, RuleId::RuleCN}},
      {"CKID", "GCKID", Lang::Conditional, true, {RuleId::RuleCKID}},
      {"CKCEM", "GCKCEM", Lang::Conditional, true, {RuleId::RuleCKCEM}},
      {"CKCEMID", "GCKCEMID", Lang::Conditional, true, {RuleId::RuleCKCEMID}},
      {"CEC", "GCEC", Lang::Conditional, false, {RuleId::RuleCEC}},
      {"CECN", "GCECN", Lang::Conditional, false, {RuleId::RuleCEC, RuleId::RuleCNW}},
  }};
  return t;
}

const LogicInfo& info(LogicId l) { return logicTable()[static_cast<size_t>(l)]; }

}  // namespace

const char* logicName(LogicId l) { return info(l).name; }
const char* calculusName(LogicId l) { return info(l).calculus; }
Lang logicLang(LogicId l) { return info(l).lang; }
bool calculusHasWeakening(LogicId l) { return info(l).weakening; }
const std::vector<RuleId>& modalRulesOf(LogicId l) { return info(l).extra; }

std::optional<LogicId> logicFromName(std::string_view name) {
  for (int i = 0; i < kLogicCount; i++)
    if (name == logicTable()[i].name) return static_cast<LogicId>(i);
  return std::nullopt;
}

const char* ruleName(RuleId r) {
  switch (r) {
    case RuleId::Ax: return "Ax";
    case RuleId::LBot: return "LBot";
    case RuleId::LAnd: return "LAnd";
    case RuleId::RAnd: return "RAnd";
    case RuleId::LOr: return "LOr";
    case RuleId::ROr: return "ROr";
    case RuleId::LImp: return "LImp";
    case RuleId::RImp: return "RImp";
    case RuleId::Lw: return "Lw";
    case RuleId::Rw: return "Rw";
    case RuleId::RuleE: return "E";
    case RuleId::RuleM: return "M";
    case RuleId::RuleMC: return "MC";
    case RuleId::RuleN: return "N";
    case RuleId::RuleNW: return "NW";
    case RuleId::RuleEC: return "EC";
    case RuleId::RuleCE: return "CE";
    case RuleId::RuleCM: return "CM";
    case RuleId::RuleCMC: return "CMC";
    case RuleId::RuleCN: return "CN";
    case RuleId::RuleCKID: return "CKID";
    case RuleId::RuleCKCEM: return "CKCEM";
    case RuleId::RuleCKCEMID: return "CKCEMID";
    case RuleId::RuleCEC: return "CEC";
    case RuleId::RuleCNW: return "CNW";
    case RuleId::Cut: return "Cut";
  }
  return "?";
}

std::vector<RuleId> calculusFor(LogicId l) {
  std::vector<RuleId> out = {RuleId::Ax,  RuleId::LBot, RuleId::LAnd,
                             RuleId::RAnd, RuleId::LOr,  RuleId::ROr,
                             RuleId::LImp, RuleId::RImp};
  if (info(l).weakening) {
    out.push_back(RuleId::Lw);
    out.push_back(RuleId::Rw);
  }
  for (RuleId r : info(l).extra) out.push_back(r);
  return out;
}

bool calculusHas(LogicId l, RuleId r) {
  switch (r) {
    case RuleId::Ax:
    case RuleId::LBot:
    case RuleId::LAnd:
    case RuleId::RAnd:
    case RuleId::LOr:
    case RuleId::ROr:
    case RuleId::LImp:
    case RuleId::RImp:
      return true;
    case RuleId::Lw:
    case RuleId::Rw:
      return info(l).weakening;
    case RuleId::Cut:
      return false;
    default:
      for (RuleId x : info(l).extra)
        if (x == r) return true;
      return false;
  }
}

bool hasUlip(LogicId l) {
  switch (l) {
    case LogicId::E:
    case LogicId::M:
    case LogicId::EN:
    case LogicId::MN:
    case LogicId::MC:
    case LogicId::K:
    case LogicId::CE:
    case LogicId::CM:
    case LogicId::CEN:
    case LogicId::CMN:
    case LogicId::CMC:
    case LogicId::CK:
    case LogicId::CKID:
      return true;
    default:
      return false;
  }
}

bool hasPlainUip(LogicId l) {
  return l == LogicId::CKCEM || l == LogicId::CKCEMID;
}

std::optional<RuleId> axiomMatch(const Sequent& s) {
  uint64_t antAtoms = 0;
  bool bot = false;
  for (Fm f : s.ant) {
    if (f->tag == Tag::Var) antAtoms |= 1ull << f->atom;
    if (f->tag == Tag::Bot) bot = true;
  }
  for (Fm f : s.suc)
    if (f->tag == Tag::Var && (antAtoms >> f->atom & 1)) return RuleId::Ax;
  if (bot) return RuleId::LBot;
  return std::nullopt;
}

namespace {

// iteration over distinct members of a sorted side
template <typename F>
void forDistinct(const std::vector<Fm>& side, F&& fn) {
  for (size_t i = 0; i < side.size(); i++) {
    if (i && side[i] == side[i - 1]) continue;
    fn(i, side[i]);
  }
}

bool allTag(const std::vector<Fm>& side, Tag t) {
  for (Fm f : side)
    if (f->tag != t) return false;
  return true;
}

Sequent seqOf(std::vector<Fm> a, std::vector<Fm> s) {
  return Sequent(std::move(a), std::move(s));
}

struct Enumerator {
  LogicId logic;
  const Sequent& s;
  const std::function<bool(const RuleInstance&)>& sink;
  bool stopped = false;

  void emit(RuleId r, std::vector<Sequent> prem, std::vector<Fm> antP,
            std::vector<Fm> sucP) {
    if (stopped) return;
    RuleInstance inst{r, s, std::move(prem), std::move(antP), std::move(sucP)};
    if (sink(inst)) stopped = true;
  }

  void propositional() {
    // non-branching
    forDistinct(s.ant, [&](size_t i, Fm f) {
      if (f->tag == Tag::And)
        emit(RuleId::LAnd, {replaceAnt(s, i, {f->l, f->r})}, {f}, {});
    });
    forDistinct(s.suc, [&](size_t i, Fm f) {
      if (f->tag == Tag::Or)
        emit(RuleId::ROr, {replaceSuc(s, i, {f->l, f->r})}, {}, {f});
    });
    forDistinct(s.suc, [&](size_t i, Fm f) {
      if (f->tag == Tag::Imp) {
        Sequent p = replaceSuc(s, i, {f->r});
        p.ant.insert(std::upper_bound(p.ant.begin(), p.ant.end(), f->l, ltFm),
                     f->l);
        emit(RuleId::RImp, {std::move(p)}, {}, {f});
      }
    });
    // branching
    forDistinct(s.suc, [&](size_t i, Fm f) {
      if (f->tag == Tag::And)
        emit(RuleId::RAnd, {replaceSuc(s, i, {f->l}), replaceSuc(s, i, {f->r})},
             {}, {f});
    });
    forDistinct(s.ant, [&](size_t i, Fm f) {
      if (f->tag == Tag::Or)
        emit(RuleId::LOr, {replaceAnt(s, i, {f->l}), replaceAnt(s, i, {f->r})},
             {f}, {});
    });
    forDistinct(s.ant, [&](size_t i, Fm f) {
      if (f->tag == Tag::Imp) {
        Sequent p1 = withoutAnt(s, i);
        p1.suc.insert(std::upper_bound(p1.suc.begin(), p1.suc.end(), f->l, ltFm),
                      f->l);
        emit(RuleId::LImp, {std::move(p1), replaceAnt(s, i, {f->r})}, {f}, {});
      }
    });
  }

  void modalRule(RuleId r) {
    switch (r) {
      case RuleId::RuleM:
      case RuleId::RuleE: {
        if (s.ant.size() != 1 || s.suc.size() != 1) return;
        if (s.ant[0]->tag != Tag::Box || s.suc[0]->tag != Tag::Box) return;
        Fm phi = s.ant[0]->l, psi = s.suc[0]->l;
        std::vector<Sequent> prem{seqOf({phi}, {psi})};
        if (r == RuleId::RuleE) prem.push_back(seqOf({psi}, {phi}));
        emit(r, std::move(prem), {s.ant[0]}, {s.suc[0]});
        return;
      }
      case RuleId::RuleMC: {
        if (s.ant.empty() || s.suc.size() != 1) return;
        if (!allTag(s.ant, Tag::Box) || s.suc[0]->tag != Tag::Box) return;
        std::vector<Fm> phis;
        for (Fm f : s.ant) phis.push_back(f->l);
        emit(RuleId::RuleMC, {seqOf(std::move(phis), {s.suc[0]->l})}, s.ant,
             {s.suc[0]});
        return;
      }
      case RuleId::RuleN: {
        if (!s.ant.empty() || s.suc.size() != 1 || s.suc[0]->tag != Tag::Box)
          return;
        emit(RuleId::RuleN, {seqOf({}, {s.suc[0]->l})}, {}, {s.suc[0]});
        return;
      }
      case RuleId::RuleCN: {
        if (!s.ant.empty() || s.suc.size() != 1 || s.suc[0]->tag != Tag::Cond)
          return;
        emit(RuleId::RuleCN, {seqOf({}, {s.suc[0]->r})}, {}, {s.suc[0]});
        return;
      }
      case RuleId::RuleNW: {
        forDistinct(s.suc, [&](size_t i, Fm f) {
          if (f->tag != Tag::Box) return;
          (void)i;
          emit(RuleId::RuleNW, {seqOf({}, {f->l})}, {}, {f});
        });
        return;
      }
      case RuleId::RuleCNW: {
        forDistinct(s.suc, [&](size_t i, Fm f) {
          if (f->tag != Tag::Cond) return;
          (void)i;
          emit(RuleId::RuleCNW, {seqOf({}, {f->r})}, {}, {f});
        });
        return;
      }
      case RuleId::RuleEC:
      case RuleId::RuleCEC: {
        Tag boxTag = r == RuleId::RuleEC ? Tag::Box : Tag::Cond;
        // group the boxed/conditional antecedent occurrences
        std::vector<std::pair<Fm, int>> groups;
        for (Fm f : s.ant) {
          if (f->tag != boxTag) continue;
          if (!groups.empty() && groups.back().first == f)
            groups.back().second++;
          else
            groups.emplace_back(f, 1);
        }
        if (groups.empty()) return;
        forDistinct(s.suc, [&](size_t, Fm head) {
          if (head->tag != boxTag || stopped) return;
          // odometer over sub-multisets of the grouped antecedent
          std::vector<int> take(groups.size(), 0);
          while (!stopped) {
            size_t k = 0;
            while (k < take.size() && take[k] == groups[k].second) {
              take[k] = 0;
              k++;
            }
            if (k == take.size()) break;
            take[k]++;
            std::vector<Fm> sel;
            for (size_t g = 0; g < groups.size(); g++)
              for (int c = 0; c < take[g]; c++) sel.push_back(groups[g].first);
            emitAggregate(r, sel, head);
          }
        });
        return;
      }
      case RuleId::RuleCE:
      case RuleId::RuleCM: {
        if (s.ant.size() != 1 || s.suc.size() != 1) return;
        if (s.ant[0]->tag != Tag::Cond || s.suc[0]->tag != Tag::Cond) return;
        Fm a = s.ant[0], c = s.suc[0];
        std::vector<Sequent> prem{seqOf({c->l}, {a->l}), seqOf({a->l}, {c->l})};
        if (r == RuleId::RuleCE) {
          prem.push_back(seqOf({c->r}, {a->r}));
          prem.push_back(seqOf({a->r}, {c->r}));
        } else {
          prem.push_back(seqOf({a->r}, {c->r}));
        }
        emit(r, std::move(prem), {a}, {c});
        return;
      }
      case RuleId::RuleCMC:
      case RuleId::RuleCKID: {
        if (s.suc.size() != 1 || s.suc[0]->tag != Tag::Cond) return;
        if (!allTag(s.ant, Tag::Cond)) return;
        if (r == RuleId::RuleCMC && s.ant.empty()) return;
        Fm head = s.suc[0];
        std::vector<Sequent> prem;
        for (Fm f : s.ant) {
          prem.push_back(seqOf({head->l}, {f->l}));
          prem.push_back(seqOf({f->l}, {head->l}));
        }
        std::vector<Fm> hyps;
        if (r == RuleId::RuleCKID) hyps.push_back(head->l);
        for (Fm f : s.ant) hyps.push_back(f->r);
        prem.push_back(seqOf(std::move(hyps), {head->r}));
        emit(r, std::move(prem), s.ant, {head});
        return;
      }
      case RuleId::RuleCKCEM:
      case RuleId::RuleCKCEMID: {
        if (s.suc.empty()) return;
        if (!allTag(s.ant, Tag::Cond) || !allTag(s.suc, Tag::Cond)) return;
        forDistinct(s.suc, [&](size_t d, Fm head) {
          std::vector<Sequent> prem;
          auto equivs = [&](Fm other) {
            prem.push_back(seqOf({head->l}, {other->l}));
            prem.push_back(seqOf({other->l}, {head->l}));
          };
          for (Fm f : s.ant) equivs(f);
          for (size_t j = 0; j < s.suc.size(); j++)
            if (j != d) equivs(s.suc[j]);
          std::vector<Fm> hyps, goals;
          if (r == RuleId::RuleCKCEMID) hyps.push_back(head->l);
          for (Fm f : s.ant) hyps.push_back(f->r);
          goals.push_back(head->r);
          for (size_t j = 0; j < s.suc.size(); j++)
            if (j != d) goals.push_back(s.suc[j]->r);
          prem.push_back(seqOf(std::move(hyps), std::move(goals)));
          // the whole succedent is active; the designated conditional first
          std::vector<Fm> sucP{head};
          for (size_t j = 0; j < s.suc.size(); j++)
            if (j != d) sucP.push_back(s.suc[j]);
          emit(r, std::move(prem), s.ant, std::move(sucP));
        });
        return;
      }
      default:
        return;
    }
  }

  // EC / CEC instance for a selected principal multiset and succedent head
  void emitAggregate(RuleId r, const std::vector<Fm>& sel, Fm head) {
    std::vector<Sequent> prem;
    if (r == RuleId::RuleEC) {
      std::vector<Fm> phis;
      for (Fm f : sel) phis.push_back(f->l);
      prem.push_back(seqOf(std::move(phis), {head->l}));
      for (Fm f : sel) prem.push_back(seqOf({head->l}, {f->l}));
    } else {
      for (Fm f : sel) {
        prem.push_back(seqOf({head->l}, {f->l}));
        prem.push_back(seqOf({f->l}, {head->l}));
      }
      std::vector<Fm> psis;
      for (Fm f : sel) psis.push_back(f->r);
      prem.push_back(seqOf(std::move(psis), {head->r}));
      for (Fm f : sel) prem.push_back(seqOf({head->r}, {f->r}));
    }
    emit(r, std::move(prem), sel, {head});
  }

  void weakening() {
    forDistinct(s.ant, [&](size_t i, Fm f) {
      emit(RuleId::Lw, {withoutAnt(s, i)}, {f}, {});
    });
    forDistinct(s.suc, [&](size_t i, Fm f) {
      emit(RuleId::Rw, {withoutSuc(s, i)}, {}, {f});
    });
  }

  void modal() {
    for (RuleId r : info(logic).extra) {
      if (stopped) return;
      modalRule(r);
    }
  }

  void run() {
    propositional();
    if (!stopped) modal();
    if (!stopped && info(logic).weakening) weakening();
  }
};

}  // namespace

std::vector<RuleInstance> backwardInstances(LogicId l, const Sequent& s) {
  std::vector<RuleInstance> out;
  std::function<bool(const RuleInstance&)> collect =
      [&out](const RuleInstance& inst) {
        out.push_back(inst);
        return false;
      };
  Enumerator e{l, s, collect};
  e.run();
  return out;
}

bool visitModalInstances(LogicId l, const Sequent& s,
                         const std::function<bool(const RuleInstance&)>& visit) {
  Enumerator e{l, s, visit};
  e.modal();
  return e.stopped;
}

}  // namespace nnml
