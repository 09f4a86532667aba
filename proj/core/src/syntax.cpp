#include "plt/syntax.hpp"

#include <algorithm>
#include <map>

#include "plt/error.hpp"

namespace plt {

TypePtr base_type() {
  static const TypePtr o = std::make_shared<Type>(Type{Type::Kind::Base, nullptr, nullptr});
  return o;
}

TypePtr lin(TypePtr dom, TypePtr cod) {
  return std::make_shared<Type>(Type{Type::Kind::Lin, std::move(dom), std::move(cod)});
}

TypePtr full(TypePtr dom, TypePtr cod) {
  return std::make_shared<Type>(Type{Type::Kind::Full, std::move(dom), std::move(cod)});
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == Type::Kind::Base) return true;
  return type_equal(a->dom, b->dom) && type_equal(a->cod, b->cod);
}

bool purely_affine(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Base: return true;
    case Type::Kind::Lin: return purely_affine(t->dom) && purely_affine(t->cod);
    case Type::Kind::Full: return false;
  }
  return false;
}

std::string show(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Base: return "o";
    case Type::Kind::Lin:
    case Type::Kind::Full: {
      std::string d = show(t->dom);
      if (t->dom->kind != Type::Kind::Base) d = "(" + d + ")";
      return d + (t->kind == Type::Kind::Lin ? " -o " : " -> ") + show(t->cod);
    }
  }
  return "?";
}

TypePtr type_subst(const TypePtr& tau, const TypePtr& kappa) {
  switch (tau->kind) {
    case Type::Kind::Base: return kappa;
    case Type::Kind::Lin: return lin(type_subst(tau->dom, kappa), type_subst(tau->cod, kappa));
    case Type::Kind::Full: return full(type_subst(tau->dom, kappa), type_subst(tau->cod, kappa));
  }
  return tau;
}

TermPtr var(std::string name) {
  return std::make_shared<Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}

TermPtr cst(std::string name) {
  return std::make_shared<Term>(Term{Term::Kind::Const, std::move(name), nullptr, nullptr});
}

TermPtr lam(std::string binder, TermPtr body) {
  return std::make_shared<Term>(Term{Term::Kind::Lam, std::move(binder), std::move(body), nullptr});
}

TermPtr app(TermPtr fun, TermPtr arg) {
  return std::make_shared<Term>(Term{Term::Kind::App, "", std::move(fun), std::move(arg)});
}

TermPtr app(TermPtr fun, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(fun);
  for (const auto& a : args) t = app(t, a);
  return t;
}

namespace {

bool alpha_eq(const TermPtr& t, const TermPtr& u,
              std::map<std::string, std::string>& tm,
              std::map<std::string, std::string>& um, int& depth) {
  if (t->kind != u->kind) return false;
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = tm.find(t->name);
      auto iu = um.find(u->name);
      if ((it == tm.end()) != (iu == um.end())) return false;
      if (it == tm.end()) return t->name == u->name;  // both free
      return it->second == iu->second;
    }
    case Term::Kind::Const:
      return t->name == u->name;
    case Term::Kind::Lam: {
      std::string tag = "#" + std::to_string(depth++);
      auto st = tm.find(t->name), su = um.find(u->name);
      std::string ot = (st != tm.end()) ? st->second : "";
      std::string ou = (su != um.end()) ? su->second : "";
      bool ht = st != tm.end(), hu = su != um.end();
      tm[t->name] = tag;
      um[u->name] = tag;
      bool r = alpha_eq(t->a, u->a, tm, um, depth);
      if (ht) tm[t->name] = ot; else tm.erase(t->name);
      if (hu) um[u->name] = ou; else um.erase(u->name);
      return r;
    }
    case Term::Kind::App:
      return alpha_eq(t->a, u->a, tm, um, depth) && alpha_eq(t->b, u->b, tm, um, depth);
  }
  return false;
}

void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case Term::Kind::Const:
      break;
    case Term::Kind::Lam: {
      bool was = bound.count(t->name) > 0;
      bound.insert(t->name);
      collect_free(t->a, bound, out);
      if (!was) bound.erase(t->name);
      break;
    }
    case Term::Kind::App:
      collect_free(t->a, bound, out);
      collect_free(t->b, bound, out);
      break;
  }
}

}  // namespace

bool alpha_equal(const TermPtr& t, const TermPtr& u) {
  std::map<std::string, std::string> tm, um;
  int depth = 0;
  return alpha_eq(t, u, tm, um, depth);
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "'" + (i > 1 ? std::to_string(i) : "");
    if (!taken.count(cand)) return cand;
  }
}

std::string show(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t->name;
    case Term::Kind::Lam: {
      // collapse consecutive binders
      std::string binders = t->name;
      TermPtr body = t->a;
      while (body->kind == Term::Kind::Lam) {
        binders += " " + body->name;
        body = body->a;
      }
      return "\\" + binders + ". " + show(body);
    }
    case Term::Kind::App: {
      std::string f = show(t->a);
      if (t->a->kind == Term::Kind::Lam) f = "(" + f + ")";
      std::string x = show(t->b);
      if (t->b->kind != Term::Kind::Var && t->b->kind != Term::Kind::Const) x = "(" + x + ")";
      return f + " " + x;
    }
  }
  return "?";
}

bool Signature::has_letter(const std::string& name) const {
  return std::find(letters.begin(), letters.end(), name) != letters.end();
}

std::string Signature::alphabet() const {
  std::string a;
  for (const auto& l : letters) a += l;
  return a;
}

Signature make_signature(const std::string& alphabet) {
  Signature sig;
  for (char c : alphabet) {
    std::string name(1, c);
    if (sig.has_letter(name)) throw ValidationError("duplicate letter '" + name + "' in alphabet");
    sig.letters.push_back(name);
  }
  return sig;
}

}  // namespace plt
