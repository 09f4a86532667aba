#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plt/syntax.hpp"

namespace plt {

// A parsed .lam source file: a list of named signature / type / term
// declarations. Parsing resolves type names against earlier declarations
// but performs no typing.
struct Program {
  struct Decl {
    enum class Kind { Sig, Type, Def };
    Kind kind;
    std::string name;
    Signature sig;  // Kind::Sig
    TypePtr type;   // Kind::Type
    TermPtr term;   // Kind::Def
    int line = 0, col = 0;
  };

  std::vector<Decl> decls;

  const Decl* find(const std::string& name) const;
  TermPtr def(const std::string& name) const;       // throws if absent
  TypePtr type(const std::string& name) const;      // throws if absent
  Signature signature(const std::string& name) const;
};

Program parse_program(const std::string& text);

// standalone entry points (used by the CLI for --type / --term arguments);
// names are resolved against the given program's declarations
TypePtr parse_type(const std::string& text, const Program& env = {});
TermPtr parse_term(const std::string& text);

}  // namespace plt
