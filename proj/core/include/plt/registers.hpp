#pragma once

#include <map>

#include "plt/two_way.hpp"

namespace plt {

// ---------------------------------------------------------------------------
// Copyless monotone register updates

// one symbol of an update word: an output letter or a source-register index
struct RegItem {
  bool is_reg = false;
  char letter = 0;  // when !is_reg
  int index = 0;    // when is_reg
  friend auto operator<=>(const RegItem&, const RegItem&) = default;
};

using RegWord = std::vector<RegItem>;

// an element of CMRupdate{src_count}{words.size()}
struct RegisterUpdate {
  int src_count = 0;
  std::vector<RegWord> words;
};

RegItem reg_letter(char c);
RegItem reg_index(int i);

// convenience notation: digits are register indices, \d escapes a
// digit-valued output letter, anything else is an output letter
RegWord parse_reg_word(const std::string& s);
std::string show_reg_word(const RegWord& w);

// empty string if both the copyless and the monotone clause hold,
// otherwise a description of the first failure
std::string validate_update_report(const RegisterUpdate& u);
void validate_update(const RegisterUpdate& u);  // throws ValidationError

RegisterUpdate identity_update(int n);

// substitute each index i of `outer` by the i-th word of `inner`;
// validity is preserved (and re-asserted)
RegisterUpdate compose_update(const RegisterUpdate& outer, const RegisterUpdate& inner);

// ---------------------------------------------------------------------------
// Stateless register transducers

struct RegisterMachine {
  int registers = 0;  // n >= 1
  Signature input;
  Signature output;  // Gamma: letters usable in update words
  std::map<std::string, RegisterUpdate> updates;  // sigma_a in CMRupdate{n}{n}
};

void validate_machine(const RegisterMachine& m);

// fold the per-letter updates over w starting from the all-empty registers,
// then read off register 0
std::string run_machine(const RegisterMachine& m, const std::string& word);

// ---------------------------------------------------------------------------
// Lambda encodings

// kappa_m = (o -o o) -o ... -o (o -o o) -o o, m-fold
TypePtr kappa_type(int m);

// the term sigma_ : kappa_n -o kappa_k for sigma in CMRupdate{k}{n};
// composition-compatible up to beta-eta
TermPtr update_to_lambda(const RegisterUpdate& u);

// iteration type kappa_n -o o; agrees with run_machine on every word
LambdaTransducer machine_to_lambda(const RegisterMachine& m);

// \s a_1 .. a_k e. s (\x z. x (a_1 z)) ... (\x z. x (a_k z)) (\x. x) e
// of type Str_Sigma[o -o o] -o Str_Sigma: word reversal
TermPtr reverse_term(const Signature& sigma);

// \s. f (g s); with g : Str_Sigma[k1] -o Str_Delta and
// f : Str_Delta[k2] -o Str_Gamma this has type Str_Sigma[k1[k2]] -o Str_Gamma
TermPtr pipeline_compose(const TermPtr& f, const TermPtr& g);

}  // namespace plt
