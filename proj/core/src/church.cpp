#include "plt/church.hpp"

#include "plt/error.hpp"
#include "plt/normalize.hpp"

namespace plt {

TypePtr str_type(const Signature& sig, const TypePtr& kappa) {
  TypePtr t = full(base_type(), base_type());
  for (size_t i = 0; i < sig.letters.size(); ++i) t = full(lin(base_type(), base_type()), t);
  return kappa ? type_subst(t, kappa) : t;
}

TermPtr church_encode_open(const std::string& word, const Signature& sig) {
  TermPtr t = cst(kEps);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::string l(1, *it);
    if (!sig.has_letter(l)) throw Error("letter '" + l + "' is not in the alphabet");
    t = app(cst(l), t);
  }
  return t;
}

TermPtr church_encode(const std::string& word, const Signature& sig) {
  TermPtr t = var(kEps);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::string l(1, *it);
    if (!sig.has_letter(l)) throw Error("letter '" + l + "' is not in the alphabet");
    t = app(var(l), t);
  }
  t = lam(kEps, t);
  for (auto it = sig.letters.rbegin(); it != sig.letters.rend(); ++it) t = lam(*it, t);
  return t;
}

std::string church_readback(const TermPtr& t, const Signature& sig) {
  TermPtr n = normalize(t);
  if (n->kind == Term::Kind::Lam) {
    // closed form: apply to the signature constants and renormalize
    TermPtr applied = n;
    for (const auto& l : sig.letters) applied = app(applied, cst(l));
    applied = app(applied, cst(kEps));
    n = normalize(applied);
  }
  std::string word;
  while (n->kind == Term::Kind::App) {
    const TermPtr& head = n->a;
    if (head->kind != Term::Kind::Const || !sig.has_letter(head->name))
      throw ShapeError("normal form is not a word: " + show(n));
    word += head->name;
    n = n->b;
  }
  if (n->kind != Term::Kind::Const || n->name != kEps)
    throw ShapeError("normal form is not a word: " + show(n));
  return word;
}

}  // namespace plt
