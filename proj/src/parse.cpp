#include "nnml/parse.hpp"

namespace nnml {

namespace {

struct Parser {
  Arena& ar;
  std::string_view s;
  size_t i = 0;
  Lang lang;

  void skipWs() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) i++;
  }
  bool eat(std::string_view tok) {
    skipWs();
    if (s.substr(i, tok.size()) == tok) {
      if (isalpha(static_cast<unsigned char>(tok[0]))) {
        size_t j = i + tok.size();
        if (j < s.size() &&
            (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
          return false;
      }
      i += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

  Fm primary() {
    skipWs();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat("~")) return ar.neg(primary());
    if (eat("[]")) {
      if (lang != Lang::Modal) fail("[] not allowed in the conditional language");
      return ar.box(primary());
    }
    if (eat("(")) {
      Fm f = impl();
      if (!eat(")")) fail("expected )");
      return f;
    }
    if (eat("false")) return ar.bot();
    if (eat("true")) return ar.top();
    if (isalpha(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() &&
             (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        j++;
      Fm v = ar.var(s.substr(i, j - i));
      i = j;
      return v;
    }
    fail(std::string("unexpected character '") + s[i] + "'");
  }

  Fm conjE() {
    Fm f = primary();
    while (eat("&")) f = ar.conj(f, primary());
    return f;
  }

  Fm disjE() {
    Fm f = conjE();
    while (true) {
      skipWs();
      if (i < s.size() && s[i] == '|') {
        i++;
        f = ar.disj(f, conjE());
      } else {
        break;
      }
    }
    return f;
  }

  bool atCondArrow() {
    skipWs();
    return i < s.size() && s[i] == '>';
  }

  Fm condE() {
    Fm f = disjE();
    if (atCondArrow()) {
      if (lang != Lang::Conditional) fail("> not allowed in the modal language");
      i++;
      Fm g = disjE();
      if (atCondArrow()) fail("> is non-associative, parentheses required");
      return ar.cond(f, g);
    }
    return f;
  }

  Fm impl() {
    Fm f = condE();
    if (eat("->")) return ar.imp(f, impl());
    return f;
  }

  Fm run() {
    Fm f = impl();
    skipWs();
    if (i != s.size()) fail("trailing input");
    return f;
  }
};

bool atomicToken(Fm f) {
  return f->tag == Tag::Bot || f->tag == Tag::Var ||
         (f->tag == Tag::Imp && f->l->tag == Tag::Bot && f->r->tag == Tag::Bot);
}

// precedence levels: 0 impl, 1 cond, 2 disj, 3 conj, 4 prefix/primary
void print(Fm f, int level, std::string& out) {
  auto paren = [&](int mine, auto&& body) {
    if (level > mine) out += '(';
    body();
    if (level > mine) out += ')';
  };
  switch (f->tag) {
    case Tag::Bot:
      out += "false";
      return;
    case Tag::Var:
      out += *f->name;
      return;
    case Tag::And:
      paren(3, [&] {
        print(f->l, 3, out);
        out += " & ";
        print(f->r, 4, out);
      });
      return;
    case Tag::Or:
      paren(2, [&] {
        print(f->l, 2, out);
        out += " | ";
        print(f->r, 3, out);
      });
      return;
    case Tag::Imp:
      if (f->l->tag == Tag::Bot && f->r->tag == Tag::Bot) {
        out += "true";
        return;
      }
      if (f->r->tag == Tag::Bot) {
        paren(4, [&] {
          out += '~';
          print(f->l, 4, out);
        });
        return;
      }
      paren(0, [&] {
        print(f->l, 1, out);
        out += " -> ";
        print(f->r, 0, out);
      });
      return;
    case Tag::Box:
      paren(4, [&] {
        out += "[]";
        print(f->l, 4, out);
      });
      return;
    case Tag::Cond:
      paren(1, [&] {
        // operands of > are printed parenthesized unless atomic
        if (atomicToken(f->l)) {
          print(f->l, 4, out);
        } else {
          out += '(';
          print(f->l, 0, out);
          out += ')';
        }
        out += " > ";
        if (atomicToken(f->r)) {
          print(f->r, 4, out);
        } else {
          out += '(';
          print(f->r, 0, out);
          out += ')';
        }
      });
      return;
  }
}

}  // namespace

Fm parseFormula(Arena& ar, std::string_view text, Lang lang) {
  Parser p{ar, text, 0, lang};
  return p.run();
}

std::string printFormula(Fm f) {
  std::string out;
  print(f, 0, out);
  return out;
}

}  // namespace nnml
