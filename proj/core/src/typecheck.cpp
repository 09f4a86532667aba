#include "plt/typecheck.hpp"

#include <map>
#include <set>

#include "plt/error.hpp"
#include "plt/normalize.hpp"

namespace plt {

namespace {

TermPtr resolve_rec(const TermPtr& t, const Signature& sig, std::set<std::string>& bound) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->name) && (sig.has_letter(t->name) || t->name == kEps))
        return cst(t->name);
      return t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      bool was = bound.count(t->name) > 0;
      bound.insert(t->name);
      TermPtr body = resolve_rec(t->a, sig, bound);
      if (!was) bound.erase(t->name);
      return body == t->a ? t : lam(t->name, body);
    }
    case Term::Kind::App: {
      TermPtr f = resolve_rec(t->a, sig, bound);
      TermPtr x = resolve_rec(t->b, sig, bound);
      return (f == t->a && x == t->b) ? t : app(f, x);
    }
  }
  return t;
}

TermPtr uniquify_rec(const TermPtr& t, std::map<std::string, std::string>& ren,
                     std::set<std::string>& taken) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : var(it->second);
    }
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      std::string nn = fresh_name(t->name, taken);
      taken.insert(nn);
      auto it = ren.find(t->name);
      bool had = it != ren.end();
      std::string old = had ? it->second : "";
      ren[t->name] = nn;
      TermPtr body = uniquify_rec(t->a, ren, taken);
      if (had) ren[t->name] = old; else ren.erase(t->name);
      return lam(nn, body);
    }
    case Term::Kind::App:
      return app(uniquify_rec(t->a, ren, taken), uniquify_rec(t->b, ren, taken));
  }
  return t;
}

int count_occ(const TermPtr& t, const std::string& name) {
  switch (t->kind) {
    case Term::Kind::Var: return t->name == name ? 1 : 0;
    case Term::Kind::Const: return 0;
    case Term::Kind::Lam: return t->name == name ? 0 : count_occ(t->a, name);
    case Term::Kind::App: return count_occ(t->a, name) + count_occ(t->b, name);
  }
  return 0;
}

struct Checker {
  const Signature& sig;
  Mode mode;

  struct Binding {
    std::string name;
    TypePtr type;
    bool linear;
    int lin_index;  // only meaningful when linear
  };
  std::vector<Binding> scope;
  int lin_count = 0;

  const Binding* lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  // indices (in binding order) of linear variables occurring free in t
  std::set<int> linear_uses(const TermPtr& t) const {
    std::set<int> out;
    for (const auto& name : free_vars(t)) {
      const Binding* b = lookup(name);
      if (b && b->linear) out.insert(b->lin_index);
    }
    return out;
  }

  void check(const TermPtr& t, const TypePtr& ty) {
    if (t->kind == Term::Kind::Lam) {
      if (ty->kind == Type::Kind::Base)
        throw TypeError("type mismatch: lambda cannot have base type o");
      scope.push_back({t->name, ty->dom, ty->kind == Type::Kind::Lin, lin_count});
      if (ty->kind == Type::Kind::Lin) {
        ++lin_count;
        if (count_occ(t->a, t->name) > 1)
          throw TypeError("linear variable '" + t->name + "' used twice");
      }
      check(t->a, ty->cod);
      if (ty->kind == Type::Kind::Lin) --lin_count;
      scope.pop_back();
      return;
    }
    // beta-redex in head position: check the reduct; the redex's own
    // side conditions (affine use, planar split, typability of a
    // discarded argument) are enforced directly
    if (TermPtr r = contract_head(t)) {
      check(r, ty);
      return;
    }
    TypePtr it = infer(t);
    if (!type_equal(it, ty))
      throw TypeError("type mismatch: expected " + show(ty) + " but " + show(t) + " has type " +
                      show(it));
  }

  void redex_conditions(const TermPtr& t) {
    if (count_occ(t->a->a, t->a->name) > 1)
      throw TypeError("linear variable '" + t->a->name + "' used twice");
    if (count_occ(t->a->a, t->a->name) == 0) infer(t->b);  // still has to be typable
    enforce_split(t);
  }

  // one leftmost head contraction, or null when the head spine carries no
  // beta-redex; affine use keeps this size-decreasing
  TermPtr contract_head(const TermPtr& t) {
    if (t->kind != Term::Kind::App) return nullptr;
    if (t->a->kind == Term::Kind::Lam) {
      redex_conditions(t);
      return substitute(t->a->a, t->a->name, t->b);
    }
    TermPtr f = contract_head(t->a);
    return f ? app(f, t->b) : nullptr;
  }

  void enforce_split(const TermPtr& t) {
    if (mode != Mode::Planar) return;
    std::set<int> fu = linear_uses(t->a);
    std::set<int> au = linear_uses(t->b);
    if (!fu.empty() && !au.empty() && *fu.rbegin() >= *au.begin())
      throw TypeError("planar-order violation in application " + show(t) +
                      ": function part uses a variable bound after one used by the argument");
  }

  TypePtr infer(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var: {
        const Binding* b = lookup(t->name);
        if (!b) throw TypeError("unbound variable '" + t->name + "'");
        return b->type;
      }
      case Term::Kind::Const: {
        if (t->name == kEps) return base_type();
        if (sig.has_letter(t->name)) return lin(base_type(), base_type());
        throw TypeError("letter '" + t->name + "' is not in the signature");
      }
      case Term::Kind::Lam:
        throw TypeError("cannot infer the type of " + show(t) +
                        " (lambda in inference position)");
      case Term::Kind::App: {
        if (TermPtr r = contract_head(t)) return infer(r);
        TypePtr ft = infer(t->a);
        switch (ft->kind) {
          case Type::Kind::Base:
            throw TypeError("cannot apply " + show(t->a) + " of base type o");
          case Type::Kind::Lin:
            check(t->b, ft->dom);
            enforce_split(t);
            return ft->cod;
          case Type::Kind::Full:
            check(t->b, ft->dom);
            if (!linear_uses(t->b).empty())
              throw TypeError("argument of a non-linear application uses linear variables: " +
                              show(t->b));
            return ft->cod;
        }
        throw TypeError("unreachable");
      }
    }
    throw TypeError("unreachable");
  }
};

}  // namespace

TermPtr resolve_constants(const TermPtr& t, const Signature& sig) {
  std::set<std::string> bound;
  return resolve_rec(t, sig, bound);
}

TermPtr uniquify(const TermPtr& t, const Signature& sig) {
  std::map<std::string, std::string> ren;
  std::set<std::string> taken;
  for (const auto& l : sig.letters) taken.insert(l);
  taken.insert(kEps);
  for (const auto& v : free_vars(t)) taken.insert(v);
  return uniquify_rec(t, ren, taken);
}

Judgement typecheck(const TermPtr& term, const TypePtr& expected, const Signature& sig,
                    Mode mode) {
  TermPtr resolved = resolve_constants(term, sig);
  Checker c{sig, mode};
  c.check(uniquify(resolved, sig), expected);
  return Judgement{sig, mode, resolved, expected};
}

TypePtr infer_type(const TermPtr& t,
                   const std::vector<std::pair<std::string, TypePtr>>& lin_ctx,
                   const Signature& sig, Mode mode) {
  Checker c{sig, mode};
  for (const auto& [name, ty] : lin_ctx) {
    c.scope.push_back({name, ty, true, c.lin_count});
    ++c.lin_count;
  }
  return c.infer(t);
}

bool typechecks(const TermPtr& term, const TypePtr& expected, const Signature& sig, Mode mode) {
  try {
    typecheck(term, expected, sig, mode);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace plt
