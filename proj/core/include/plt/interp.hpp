#pragma once

#include <optional>

#include "plt/diagram.hpp"
#include "plt/typecheck.hpp"

namespace plt {

inline DiagMode diag_mode(Mode m) {
  return m == Mode::Planar ? DiagMode::Planar : DiagMode::Symmetric;
}

// ambient data of the interpretation: [[o]] = "+-" and one generator
// diagram per signature constant
struct InterpEnv {
  Signature sig;
  DiagMode mode = DiagMode::Planar;

  DiagCat cat() const { return DiagCat{sig.alphabet(), mode}; }
  Diagram constant(const std::string& name) const;  // letter or "eps"
};

// [[o]] = "+-", [[tau -o sigma]] = [[sigma]] (x) [[tau]]*; throws on ->
std::string interp_type(const TypePtr& tau);

// interpretation of a derivable purely affine judgement; the result is a
// diagram 1 -> [[type]] (the top-level linear context is empty)
Diagram interp_term(const Judgement& j);

// label of the unique possible edge of a diagram 1 -> "+-", if present
std::optional<std::string> readoff(const Diagram& d);

}  // namespace plt
