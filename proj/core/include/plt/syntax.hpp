#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace plt {

// ---------------------------------------------------------------------------
// Types: o | tau -o sigma | tau -> sigma

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { Base, Lin, Full };
  Kind kind = Kind::Base;
  TypePtr dom, cod;  // null for Base
};

TypePtr base_type();
TypePtr lin(TypePtr dom, TypePtr cod);
TypePtr full(TypePtr dom, TypePtr cod);

bool type_equal(const TypePtr& a, const TypePtr& b);
bool purely_affine(const TypePtr& t);
std::string show(const TypePtr& t);

// tau[kappa]: replace every base-type leaf by kappa (FullArrow nodes pass
// through with their subtrees substituted as well)
TypePtr type_subst(const TypePtr& tau, const TypePtr& kappa);

// ---------------------------------------------------------------------------
// Terms

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Const, Lam, App };
  Kind kind = Kind::Var;
  std::string name;  // Var / Const / Lam binder
  TermPtr a, b;      // Lam: a = body; App: a = fun, b = arg
};

TermPtr var(std::string name);
TermPtr cst(std::string name);
TermPtr lam(std::string binder, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr app(TermPtr fun, const std::vector<TermPtr>& args);

bool alpha_equal(const TermPtr& t, const TermPtr& u);
std::string show(const TermPtr& t);
std::set<std::string> free_vars(const TermPtr& t);

// fresh name based on `base` avoiding everything in `taken`
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

// ---------------------------------------------------------------------------
// Signature: output alphabet Gamma with constants a : o -o o and eps : o

inline const std::string kEps = "eps";

struct Signature {
  // single-character letter names, pairwise distinct, "eps" excluded
  std::vector<std::string> letters;

  bool has_letter(const std::string& name) const;
  std::string alphabet() const;  // letters concatenated, e.g. "ab"
};

Signature make_signature(const std::string& alphabet);

}  // namespace plt
