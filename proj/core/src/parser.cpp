#include "plt/parser.hpp"

#include <cctype>

#include "plt/error.hpp"

namespace plt {

const Program::Decl* Program::find(const std::string& name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

TermPtr Program::def(const std::string& name) const {
  const Decl* d = find(name);
  if (!d || d->kind != Decl::Kind::Def) throw Error("no definition named '" + name + "'");
  return d->term;
}

TypePtr Program::type(const std::string& name) const {
  const Decl* d = find(name);
  if (!d || d->kind != Decl::Kind::Type) throw Error("no type named '" + name + "'");
  return d->type;
}

Signature Program::signature(const std::string& name) const {
  const Decl* d = find(name);
  if (!d || d->kind != Decl::Kind::Sig) throw Error("no signature named '" + name + "'");
  return d->sig;
}

namespace {

struct Token {
  enum class Kind { Name, Sym, End };
  Kind kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;
  Token cur;

  explicit Lexer(const std::string& s) : src(s) { next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur.line, cur.col, msg);
  }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') { ++line; col = 1; } else { ++col; }
    }
  }

  void next() {
    for (;;) {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance(1);
      if (pos + 1 < src.size() && src[pos] == '-' && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') advance(1);
        continue;
      }
      break;
    }
    cur.line = line;
    cur.col = col;
    if (pos >= src.size()) {
      cur = {Token::Kind::End, "", line, col};
      return;
    }
    char c = src[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      // letter constants may be digits (e.g. the alphabet {0,1,2})
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
              src[pos] == '\''))
        advance(1);
      cur = {Token::Kind::Name, src.substr(start, pos - start), cur.line, cur.col};
      return;
    }
    if (c == '-' && pos + 1 < src.size() && (src[pos + 1] == 'o' || src[pos + 1] == '>')) {
      std::string sym = src.substr(pos, 2);
      advance(2);
      cur = {Token::Kind::Sym, sym, cur.line, cur.col};
      return;
    }
    static const std::string singles = "{}()[],=.\\";
    if (singles.find(c) != std::string::npos) {
      advance(1);
      cur = {Token::Kind::Sym, std::string(1, c), cur.line, cur.col};
      return;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

  bool at_sym(const std::string& s) const { return cur.kind == Token::Kind::Sym && cur.text == s; }
  // declaration keywords are reserved so that term parsing stops at the
  // next declaration
  bool at_name() const {
    return cur.kind == Token::Kind::Name && cur.text != "sig" && cur.text != "type" &&
           cur.text != "def";
  }

  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    next();
  }

  std::string expect_name(const std::string& what) {
    if (!at_name()) fail("expected " + what);
    std::string n = cur.text;
    next();
    return n;
  }
};

struct Parser {
  Lexer lx;
  const Program& env;

  Parser(const std::string& text, const Program& env) : lx(text), env(env) {}

  // type := lin ( "->" type )?     right-associative, "-o" binds tighter
  TypePtr parse_type() {
    TypePtr left = parse_lin();
    if (lx.at_sym("->")) {
      lx.next();
      return full(left, parse_type());
    }
    return left;
  }

  TypePtr parse_lin() {
    TypePtr left = parse_type_atom();
    if (lx.at_sym("-o")) {
      lx.next();
      return lin(left, parse_lin());
    }
    return left;
  }

  TypePtr parse_type_atom() {
    if (lx.at_sym("(")) {
      lx.next();
      TypePtr t = parse_type();
      lx.expect_sym(")");
      return t;
    }
    if (!lx.at_name()) lx.fail("expected a type");
    std::string n = lx.cur.text;
    if (n == "o") {
      lx.next();
      return base_type();
    }
    if (n == "Str") {
      lx.next();
      return parse_str_sugar();
    }
    const Program::Decl* d = env.find(n);
    if (!d || d->kind != Program::Decl::Kind::Type)
      lx.fail("unknown type name '" + n + "'");
    lx.next();
    return d->type;
  }

  // Str{a,b} / Str{a,b}[k]  ->  (o-oo) -> ... -> (o-oo) -> o -> o  [k]
  TypePtr parse_str_sugar() {
    lx.expect_sym("{");
    int count = 0;
    for (;;) {
      lx.expect_name("letter");
      ++count;
      if (lx.at_sym(",")) { lx.next(); continue; }
      break;
    }
    lx.expect_sym("}");
    TypePtr t = full(base_type(), base_type());
    for (int i = 0; i < count; ++i) t = full(lin(base_type(), base_type()), t);
    if (lx.at_sym("[")) {
      lx.next();
      TypePtr kappa = parse_type();
      lx.expect_sym("]");
      t = type_subst(t, kappa);
    }
    return t;
  }

  // term := "\" NAME+ "." term | app
  TermPtr parse_term() {
    if (lx.at_sym("\\")) {
      lx.next();
      std::vector<std::string> binders;
      while (lx.at_name()) {
        binders.push_back(lx.cur.text);
        lx.next();
      }
      if (binders.empty()) lx.fail("expected binder after '\\'");
      lx.expect_sym(".");
      TermPtr body = parse_term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = lam(*it, body);
      return body;
    }
    return parse_app();
  }

  TermPtr parse_app() {
    TermPtr t = parse_term_atom();
    for (;;) {
      if (lx.at_name() || lx.at_sym("(") || lx.at_sym("\\")) {
        if (lx.at_sym("\\")) {
          t = app(t, parse_term());  // trailing lambda argument
        } else {
          t = app(t, parse_term_atom());
        }
        continue;
      }
      return t;
    }
  }

  TermPtr parse_term_atom() {
    if (lx.at_sym("(")) {
      lx.next();
      TermPtr t = parse_term();
      lx.expect_sym(")");
      return t;
    }
    if (lx.at_name()) {
      std::string n = lx.cur.text;
      lx.next();
      return var(n);  // constants are resolved during typechecking
    }
    lx.fail("expected a term");
  }

  Signature parse_sig_body() {
    lx.expect_sym("{");
    Signature sig;
    for (;;) {
      std::string l = lx.expect_name("letter");
      if (l == kEps) lx.fail("'eps' is reserved and cannot be a letter");
      if (l.size() != 1) lx.fail("letter names must be single characters, got '" + l + "'");
      if (sig.has_letter(l)) lx.fail("duplicate letter '" + l + "'");
      sig.letters.push_back(l);
      if (lx.at_sym(",")) { lx.next(); continue; }
      break;
    }
    lx.expect_sym("}");
    return sig;
  }
};

}  // namespace

Program parse_program(const std::string& text) {
  Program prog;
  Parser p(text, prog);
  while (p.lx.cur.kind != Token::Kind::End) {
    Program::Decl d;
    d.line = p.lx.cur.line;
    d.col = p.lx.cur.col;
    if (p.lx.cur.kind != Token::Kind::Name)
      p.lx.fail("expected 'sig', 'type' or 'def'");
    std::string kw = p.lx.cur.text;
    p.lx.next();
    if (kw == "sig") {
      d.kind = Program::Decl::Kind::Sig;
      d.name = p.lx.expect_name("signature name");
      d.sig = p.parse_sig_body();
    } else if (kw == "type") {
      d.kind = Program::Decl::Kind::Type;
      d.name = p.lx.expect_name("type name");
      p.lx.expect_sym("=");
      d.type = p.parse_type();
    } else if (kw == "def") {
      d.kind = Program::Decl::Kind::Def;
      d.name = p.lx.expect_name("definition name");
      p.lx.expect_sym("=");
      d.term = p.parse_term();
    } else {
      throw ParseError(d.line, d.col, "expected 'sig', 'type' or 'def', got '" + kw + "'");
    }
    if (prog.find(d.name))
      throw ParseError(d.line, d.col, "duplicate definition name '" + d.name + "'");
    prog.decls.push_back(std::move(d));
  }
  return prog;
}

TypePtr parse_type(const std::string& text, const Program& env) {
  Parser p(text, env);
  TypePtr t = p.parse_type();
  if (p.lx.cur.kind != Token::Kind::End) p.lx.fail("trailing input after type");
  return t;
}

TermPtr parse_term(const std::string& text) {
  Program empty;
  Parser p(text, empty);
  TermPtr t = p.parse_term();
  if (p.lx.cur.kind != Token::Kind::End) p.lx.fail("trailing input after term");
  return t;
}

}  // namespace plt
