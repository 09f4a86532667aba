#include "plt/normalize.hpp"

#include <cstdlib>
#include <map>

#include "plt/error.hpp"

namespace plt {

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x ? u : t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      if (t->name == x) return t;  // x shadowed
      std::set<std::string> fu = free_vars(u);
      if (fu.count(t->name)) {
        // binder would capture a free variable of u: rename it first
        std::set<std::string> taken = fu;
        for (const auto& v : free_vars(t->a)) taken.insert(v);
        taken.insert(x);
        std::string nn = fresh_name(t->name, taken);
        TermPtr body = substitute(t->a, t->name, var(nn));
        return lam(nn, substitute(body, x, u));
      }
      if (!free_vars(t->a).count(x)) return t;
      return lam(t->name, substitute(t->a, x, u));
    }
    case Term::Kind::App:
      return app(substitute(t->a, x, u), substitute(t->b, x, u));
  }
  return t;
}

long default_fuel() {
  static long fuel = [] {
    if (const char* env = std::getenv("PLT_FUEL")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return 1000000L;
  }();
  return fuel;
}

namespace {

void spend(long& fuel) {
  if (--fuel < 0)
    throw FuelError("normalization step bound exhausted (this signals a bug or an untyped term)");
}

TermPtr whnf(TermPtr t, long& fuel) {
  while (t->kind == Term::Kind::App) {
    TermPtr f = whnf(t->a, fuel);
    if (f->kind == Term::Kind::Lam) {
      spend(fuel);
      t = substitute(f->a, f->name, t->b);
    } else {
      return f == t->a ? t : app(f, t->b);
    }
  }
  return t;
}

TermPtr nf(TermPtr t, long& fuel) {
  t = whnf(std::move(t), fuel);
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam:
      return lam(t->name, nf(t->a, fuel));
    case Term::Kind::App:
      // head is not a lambda after whnf
      return app(nf(t->a, fuel), nf(t->b, fuel));
  }
  return t;
}

struct EtaExpander {
  const Signature& sig;
  std::map<std::string, TypePtr> env;
  int fresh = 0;

  TypePtr head_type(const TermPtr& h) {
    if (h->kind == Term::Kind::Var) {
      auto it = env.find(h->name);
      if (it == env.end()) throw TypeError("unbound variable '" + h->name + "' in eta expansion");
      return it->second;
    }
    if (h->kind == Term::Kind::Const) {
      if (h->name == kEps) return base_type();
      if (sig.has_letter(h->name)) return lin(base_type(), base_type());
      throw TypeError("letter '" + h->name + "' is not in the signature");
    }
    throw ShapeError("beta-normal spine head is neither a variable nor a constant: " + show(h));
  }

  TermPtr expand(const TermPtr& t, const TypePtr& ty) {
    if (ty->kind != Type::Kind::Base) {
      if (t->kind == Term::Kind::Lam) {
        auto saved = env.find(t->name) != env.end() ? env[t->name] : nullptr;
        env[t->name] = ty->dom;
        TermPtr body = expand(t->a, ty->cod);
        if (saved) env[t->name] = saved; else env.erase(t->name);
        return lam(t->name, body);
      }
      std::string x = "$eta" + std::to_string(fresh++);
      env[x] = ty->dom;
      TermPtr body = expand(app(t, var(x)), ty->cod);
      env.erase(x);
      return lam(x, body);
    }
    // base type: t is a spine h u1 ... um
    std::vector<TermPtr> args;
    TermPtr h = t;
    while (h->kind == Term::Kind::App) {
      args.push_back(h->b);
      h = h->a;
    }
    if (h->kind == Term::Kind::Lam)
      throw ShapeError("term is not beta-normal: " + show(t));
    TypePtr hty = head_type(h);
    TermPtr out = h;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      if (hty->kind == Type::Kind::Base)
        throw TypeError("over-applied spine in eta expansion: " + show(t));
      out = app(out, expand(*it, hty->dom));
      hty = hty->cod;
    }
    if (hty->kind != Type::Kind::Base)
      throw TypeError("under-applied spine at base type in eta expansion: " + show(t));
    return out;
  }
};

}  // namespace

TermPtr normalize(const TermPtr& t, long fuel) {
  if (fuel < 0) fuel = default_fuel();
  return nf(t, fuel);
}

TermPtr eta_long(const TermPtr& normal, const TypePtr& ty, const Signature& sig) {
  EtaExpander e{sig};
  return e.expand(normal, ty);
}

bool beta_eta_equal(const TermPtr& t, const TermPtr& u, const TypePtr& ty, const Signature& sig) {
  TermPtr tn = eta_long(normalize(t), ty, sig);
  TermPtr un = eta_long(normalize(u), ty, sig);
  return alpha_equal(tn, un);
}

}  // namespace plt
