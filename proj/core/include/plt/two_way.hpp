#pragma once

#include <map>
#include <optional>

#include "plt/church.hpp"
#include "plt/interp.hpp"

namespace plt {

// ---------------------------------------------------------------------------
// Lambda-transducers: an iteration type kappa with step/init/readout terms

struct LambdaTransducer {
  Signature input;   // Sigma
  Signature output;  // Gamma (the ambient signature of all terms)
  Mode mode = Mode::Planar;
  TypePtr kappa;                         // purely affine
  std::map<std::string, TermPtr> step;   // d_a : kappa -o kappa per input letter
  TermPtr d_eps;                         // d_eps : kappa
  TermPtr readout;                       // o : kappa -o o
};

// typecheck every component at its stated type; throws TypeError
void validate_transducer(const LambdaTransducer& L);

// o (d_{w_n} (... (d_{w_1} d_eps)...)) -- first letter innermost
TermPtr state_term(const LambdaTransducer& L, const std::string& word);

// normalization semantics: the state term read back as a word
std::string run_lambda(const LambdaTransducer& L, const std::string& word);

// ---------------------------------------------------------------------------
// Two-way reversible transducers as diagram-valued transition tables

// eps_pm: init 1 -> S, final S -> "+-", output read via readoff.
// pp:     init "+" -> S, final S -> "+", output read off the in1->out1 edge.
enum class Convention { EpsPm, Pp };

struct TwoWayTransducer {
  Convention convention = Convention::EpsPm;
  Signature input;
  std::string output_alphabet;
  DiagMode mode = DiagMode::Planar;
  std::string states;  // polarity word S
  Diagram init;
  std::map<std::string, Diagram> step;
  Diagram final;
};

// boundary shapes and per-diagram validity; throws ValidationError
void validate_transducer(const TwoWayTransducer& T);

// init ; step(w_1) ; ... ; step(w_n) ; final, then read the output edge;
// nullopt is the undefined value
std::optional<std::string> run_word(const TwoWayTransducer& T, const std::string& word);

// compilation: states = [[kappa]], init = [[d_eps]], step(a) = uncurried
// [[d_a]], final = uncurried [[o]]; agrees with run_lambda on every word
TwoWayTransducer compile(const LambdaTransducer& L);

// hom-set isomorphism in both directions; run_word is preserved pointwise.
// Converting to the convention already in use returns the input unchanged.
TwoWayTransducer convert_convention(const TwoWayTransducer& T, Convention to);

// ---------------------------------------------------------------------------
// Concrete transition tables (pp convention)

struct TransitionTable {
  struct Row {
    std::string state;
    std::string symbol;  // single input letter, ">" or "<"
    std::string target;
    std::string output;
    int line = 0;
  };
  std::vector<std::pair<std::string, bool>> states;  // (name, forward?)
  std::vector<Row> rows;
};

// "states: q0+ q1+ q2+ q3- q4+" then one row per line "q1 2 q3 eps"
// ('>' / '<' for the endmarkers, "eps" for the empty output)
TransitionTable parse_table(const std::string& text);

TwoWayTransducer from_table(const TransitionTable& tbl, DiagMode mode = DiagMode::Planar);

// ---------------------------------------------------------------------------
// Normal-form extraction and randomized equivalence testing

// t must typecheck at Str_Sigma[kappa] -o Str_Gamma; after eta-expansion the
// normal form is  \s b_1..b_k e. o-context[s d_1 ... d_n d_eps ...]  and the
// components are read off (output binders re-bound as signature constants).
// Note the orientation: the iterator applies the first letter outermost, so
// run_lambda of the result computes w |-> t(<mirror of w>); precompose a
// reversal stage when the original left-to-right function is wanted.
LambdaTransducer extract_lambda_transducer(const TermPtr& t, const Signature& input,
                                           const Signature& output, const TypePtr& kappa,
                                           Mode mode = Mode::Planar);

// .lam packaging convention for transducers: declarations
//   sig input { ... }   sig output { ... }   type kappa = ...
//   def d_<letter> = ... (per input letter)   def d_eps = ...   def o = ...
struct Program;
LambdaTransducer transducer_from_program(const Program& p, Mode mode = Mode::Planar);
std::string transducer_to_lam(const LambdaTransducer& L);

struct EquivReport {
  bool ok = true;
  long tested = 0;
  std::string counterexample;  // meaningful only when !ok
  std::optional<std::string> lhs, rhs;
};

// compare run_lambda(L, w) against run_word(T, w) on the empty word plus
// `samples` pseudo-random words of length <= max_len
EquivReport check_equiv(const LambdaTransducer& L, const TwoWayTransducer& T, int samples,
                        int max_len, unsigned seed);

}  // namespace plt
