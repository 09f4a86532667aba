#pragma once

#include "plt/syntax.hpp"

namespace plt {

// Planar: linear variables must be used at most once and in context order.
// Commutative: the order restriction is dropped (exchange rule admitted).
enum class Mode { Planar, Commutative };

struct Judgement {
  Signature sig;
  Mode mode;
  TermPtr term;  // with signature constants resolved to Const nodes
  TypePtr type;
};

// Free names matching a signature letter or "eps" become Const nodes;
// bound occurrences are left alone.
TermPtr resolve_constants(const TermPtr& t, const Signature& sig);

// Rename binders so that all bound names are pairwise distinct and disjoint
// from the signature letters and "eps".
TermPtr uniquify(const TermPtr& t, const Signature& sig);

// Check a closed term (modulo signature constants) against `expected`.
// Throws TypeError on: unbound variable, linear variable used twice,
// planar-order violation (planar mode), type mismatch.
Judgement typecheck(const TermPtr& term, const TypePtr& expected, const Signature& sig,
                    Mode mode);

bool typechecks(const TermPtr& term, const TypePtr& expected, const Signature& sig, Mode mode);

// type inference for a term under an explicit linear context (binding order);
// used by the interpreter to recover argument types at applications
TypePtr infer_type(const TermPtr& t,
                   const std::vector<std::pair<std::string, TypePtr>>& lin_ctx,
                   const Signature& sig, Mode mode);

}  // namespace plt
