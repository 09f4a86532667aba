#include "plt/interp.hpp"

#include <algorithm>

#include "plt/error.hpp"

namespace plt {

std::string interp_type(const TypePtr& tau) {
  switch (tau->kind) {
    case Type::Kind::Base:
      return "+-";
    case Type::Kind::Lin:
      return interp_type(tau->cod) + dual_object(interp_type(tau->dom));
    case Type::Kind::Full:
      throw TypeError("cannot interpret the non-affine arrow -> (term is not purely affine)");
  }
  return "";
}

Diagram InterpEnv::constant(const std::string& name) const {
  DiagCat c = cat();
  if (name == kEps) {
    // single wire bending back: 1 -> "+-"
    return make_diagram(mode, c.alphabet, "", "+-", {{Vertex{true, 2}, Vertex{true, 1}, ""}});
  }
  if (!sig.has_letter(name)) throw TypeError("letter '" + name + "' is not in the signature");
  // 1 -> [[o -o o]] = "+-+-": the outer wire is silent, the inner one
  // emits the letter
  return make_diagram(mode, c.alphabet, "", "+-+-",
                      {{Vertex{true, 4}, Vertex{true, 1}, ""},
                       {Vertex{true, 2}, Vertex{true, 3}, name}});
}

namespace {

struct Interp {
  InterpEnv env;
  DiagCat cat;
  Mode tymode;

  struct Entry {
    std::string name;
    TypePtr type;
    std::string obj;
  };
  using Ctx = std::vector<Entry>;

  static std::string ctx_object(const Ctx& ctx) {
    std::string o;
    for (const auto& e : ctx) o += e.obj;
    return o;
  }

  TypePtr infer(const TermPtr& t, const Ctx& ctx) const {
    std::vector<std::pair<std::string, TypePtr>> lc;
    for (const auto& e : ctx) lc.emplace_back(e.name, e.type);
    return infer_type(t, lc, env.sig, tymode);
  }

  // block-wise wiring sending ctx order to the permuted order; identity when
  // perm is the identity
  Diagram permutation(const Ctx& ctx, const std::vector<int>& perm) const {
    std::vector<int> dom_off(ctx.size() + 1, 0);
    for (size_t i = 0; i < ctx.size(); ++i)
      dom_off[i + 1] = dom_off[i] + static_cast<int>(ctx[i].obj.size());
    std::string cod;
    std::vector<DEdge> edges;
    int coff = 0;
    for (int i : perm) {
      const std::string& obj = ctx[i].obj;
      for (int k = 1; k <= static_cast<int>(obj.size()); ++k) {
        Vertex vin{false, dom_off[i] + k}, vout{true, coff + k};
        if (obj[k - 1] == '+') edges.push_back({vin, vout, ""});
        else edges.push_back({vout, vin, ""});
      }
      cod += obj;
      coff += static_cast<int>(obj.size());
    }
    return make_diagram(cat.mode, cat.alphabet, ctx_object(ctx), cod, std::move(edges));
  }

  Diagram go(const TermPtr& t, const TypePtr& ty, const Ctx& ctx) const {
    switch (t->kind) {
      case Term::Kind::Const:
        return compose(cat.bottom(ctx_object(ctx), ""), env.constant(t->name));

      case Term::Kind::Var: {
        int pos = -1;
        for (int i = static_cast<int>(ctx.size()) - 1; i >= 0; --i)
          if (ctx[i].name == t->name) { pos = i; break; }
        if (pos < 0) throw TypeError("unbound variable '" + t->name + "' in interpretation");
        std::string pre, post;
        for (int i = 0; i < pos; ++i) pre += ctx[i].obj;
        for (size_t i = pos + 1; i < ctx.size(); ++i) post += ctx[i].obj;
        return tensor(tensor(cat.bottom(pre, ""), cat.identity(ctx[pos].obj)),
                      cat.bottom(post, ""));
      }

      case Term::Kind::Lam: {
        if (ty->kind != Type::Kind::Lin)
          throw TypeError("lambda at non-linear type in interpretation: " + show(t));
        Ctx inner = ctx;
        inner.push_back({t->name, ty->dom, interp_type(ty->dom)});
        Diagram body = go(t->a, ty->cod, inner);
        return curry(body, interp_type(ty->dom));
      }

      case Term::Kind::App: {
        // recover the function type; a lambda (or a redex contracting to
        // one) in function position is typed through its argument instead
        TypePtr fun_ty;
        if (t->a->kind != Term::Kind::Lam) {
          try {
            fun_ty = infer(t->a, ctx);
          } catch (const TypeError&) {
            fun_ty = nullptr;
          }
          if (fun_ty && fun_ty->kind != Type::Kind::Lin)
            throw TypeError("non-linear application in interpretation: " + show(t));
        }
        if (!fun_ty) fun_ty = lin(infer(t->b, ctx), ty);
        // split the context between function and argument
        std::set<std::string> fv_f = free_vars(t->a), fv_u = free_vars(t->b);
        std::vector<int> fpart, upart;
        int first_u = static_cast<int>(ctx.size());
        for (size_t i = 0; i < ctx.size(); ++i)
          if (fv_u.count(ctx[i].name) && !fv_f.count(ctx[i].name)) {
            first_u = static_cast<int>(i);
            break;
          }
        for (size_t i = 0; i < ctx.size(); ++i) {
          bool in_f = fv_f.count(ctx[i].name) > 0;
          bool in_u = fv_u.count(ctx[i].name) > 0;
          if (in_f || (!in_u && static_cast<int>(i) < first_u)) fpart.push_back(i);
          else upart.push_back(i);
        }
        Ctx fctx, uctx;
        for (int i : fpart) fctx.push_back(ctx[i]);
        for (int i : upart) uctx.push_back(ctx[i]);

        Diagram df = go(t->a, fun_ty, fctx);
        Diagram du = go(t->b, fun_ty->dom, uctx);
        Diagram pair = tensor(df, du);
        // ev = id_[[sigma]] (x) cap_[[tau]]
        Diagram ev = tensor(cat.identity(interp_type(ty)), cat.cap(interp_type(fun_ty->dom)));
        Diagram result = compose(pair, ev);

        std::vector<int> perm = fpart;
        perm.insert(perm.end(), upart.begin(), upart.end());
        bool is_id = std::is_sorted(perm.begin(), perm.end());
        if (is_id) return result;
        if (cat.mode == DiagMode::Planar)
          throw TypeError("planar-order violation surfaced during interpretation of " + show(t));
        return compose(permutation(ctx, perm), result);
      }
    }
    throw TypeError("unreachable");
  }
};

}  // namespace

Diagram interp_term(const Judgement& j) {
  InterpEnv env{j.sig, diag_mode(j.mode)};
  Interp in{env, env.cat(), j.mode};
  TermPtr t = uniquify(j.term, j.sig);
  return in.go(t, j.type, {});
}

std::optional<std::string> readoff(const Diagram& d) {
  if (!d.dom.empty() || d.cod != "+-")
    throw ValidationError("readoff expects a diagram from the unit to \"+-\"");
  if (d.edges.empty()) return std::nullopt;
  return d.edges.front().label;
}

}  // namespace plt
