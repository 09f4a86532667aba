// Shared fixtures and random generators for the test suite.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "plt/error.hpp"
#include "plt/json_io.hpp"
#include "plt/normalize.hpp"
#include "plt/registers.hpp"

namespace plt::testing {

// ---------------------------------------------------------------------------
// Hand-written lambda-transducers over the alphabet {a, b}

// kappa = o, d_a = \x. a x, d_eps = eps, o = \x. x  (computes reversal)
inline LambdaTransducer make_rev() {
  LambdaTransducer L;
  L.input = L.output = make_signature("ab");
  L.kappa = base_type();
  for (const auto& l : L.output.letters) L.step[l] = lam("x", app(cst(l), var("x")));
  L.d_eps = cst(kEps);
  L.readout = lam("x", var("x"));
  return L;
}

// kappa = o -o o, d_a = \f z. f (a z), d_eps = \x. x, o = \f. f eps  (identity)
inline LambdaTransducer make_id() {
  LambdaTransducer L;
  L.input = L.output = make_signature("ab");
  L.kappa = lin(base_type(), base_type());
  for (const auto& l : L.output.letters)
    L.step[l] = lam("f", lam("z", app(var("f"), app(cst(l), var("z")))));
  L.d_eps = lam("x", var("x"));
  L.readout = lam("f", app(var("f"), cst(kEps)));
  return L;
}

// kappa = o, d_a = \x. x, d_eps = eps, o = \x. a x  (constantly "a")
inline LambdaTransducer make_const() {
  LambdaTransducer L;
  L.input = L.output = make_signature("ab");
  L.kappa = base_type();
  for (const auto& l : L.output.letters) L.step[l] = lam("x", var("x"));
  L.d_eps = cst(kEps);
  L.readout = lam("x", app(cst("a"), var("x")));
  return L;
}

// one register copying its input: sigma_a = ("0a")
inline RegisterMachine make_machine_id() {
  RegisterMachine m;
  m.registers = 1;
  m.input = m.output = make_signature("ab");
  m.updates["a"] = {1, {parse_reg_word("0a")}};
  m.updates["b"] = {1, {parse_reg_word("0b")}};
  return m;
}

// one register doubling every letter: sigma_a = ("0aa")
inline RegisterMachine make_machine_dbl() {
  RegisterMachine m;
  m.registers = 1;
  m.input = m.output = make_signature("ab");
  m.updates["a"] = {1, {parse_reg_word("0aa")}};
  m.updates["b"] = {1, {parse_reg_word("0bb")}};
  return m;
}

// A transducer whose empty-word state is \x f. f x, which is well typed only
// when exchange is admitted: kappa = o -o (o -o o) -o o,
// d_a = \X x f. X (a x) f, o = \X. X eps (\y. y).
inline LambdaTransducer make_swap() {
  LambdaTransducer L;
  L.input = L.output = make_signature("ab");
  L.mode = Mode::Commutative;
  TypePtr oo = lin(base_type(), base_type());
  L.kappa = lin(base_type(), lin(oo, base_type()));
  for (const auto& l : L.output.letters)
    L.step[l] = lam("X", lam("x", lam("f", app(app(var("X"), app(cst(l), var("x"))), var("f")))));
  L.d_eps = lam("x", lam("f", app(var("f"), var("x"))));
  L.readout = lam("X", app(app(var("X"), cst(kEps)), lam("y", var("y"))));
  return L;
}

// The two-way table padding every 2 with a preceding 1 unless one is already
// there (input/output alphabet {0,1,2}).
inline const char* kPadTable =
    "states: q0+ q1+ q2+ q3- q4+\n"
    "q0 > q1 eps\n"
    "q1 < q2 eps\n"
    "q1 0 q1 0\n"
    "q1 1 q1 1\n"
    "q1 2 q3 eps\n"
    "q3 > q4 1\n"
    "q3 0 q4 1\n"
    "q3 1 q4 eps\n"
    "q3 2 q4 1\n"
    "q4 2 q1 2\n";

// ---------------------------------------------------------------------------
// Random words

inline std::string random_word(const std::string& alphabet, int max_len, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::string w;
  for (int n = len(rng); n > 0; --n) w += alphabet[pick(rng)];
  return w;
}

inline std::vector<std::string> all_words(const std::string& alphabet, int max_len) {
  std::vector<std::string> out{""};
  size_t start = 0;
  for (int n = 1; n <= max_len; ++n) {
    size_t stop = out.size();
    for (size_t i = start; i < stop; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    start = stop;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random diagrams

inline std::string random_object(std::mt19937& rng, int max_len = 4) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string w;
  for (int n = len(rng); n > 0; --n) w += bit(rng) ? '+' : '-';
  return w;
}

inline std::string random_label(const std::string& alphabet, std::mt19937& rng, int max_len = 3) {
  return random_word(alphabet, max_len, rng);
}

// a random valid diagram with the given boundary: shuffle the implicit
// sources, greedily attach each to a random free target, keep the edge only
// if the result still validates (planarity in planar mode)
inline Diagram random_diagram(const DiagCat& cat, const std::string& dom, const std::string& cod,
                              std::mt19937& rng) {
  std::vector<Vertex> sources, targets;
  for (int i = 0; i < (int)dom.size(); ++i)
    (dom[i] == '+' ? sources : targets).push_back(Vertex{false, i + 1});
  for (int i = 0; i < (int)cod.size(); ++i)
    (cod[i] == '-' ? sources : targets).push_back(Vertex{true, i + 1});
  std::shuffle(sources.begin(), sources.end(), rng);
  std::shuffle(targets.begin(), targets.end(), rng);

  Diagram d{cat.mode, cat.alphabet, dom, cod, {}};
  std::uniform_int_distribution<int> coin(0, 3);
  size_t next_target = 0;
  for (const Vertex& s : sources) {
    if (next_target >= targets.size()) break;
    if (coin(rng) == 0) continue;  // leave some vertices dangling
    DEdge e{s, targets[next_target], random_label(cat.alphabet, rng)};
    std::vector<DEdge> trial = d.edges;
    trial.push_back(e);
    try {
      d = make_diagram(cat.mode, cat.alphabet, dom, cod, trial);
      ++next_target;
    } catch (const ValidationError&) {
      // crossing edge in planar mode: skip this source
    }
  }
  return d;
}

inline Diagram random_diagram(const DiagCat& cat, std::mt19937& rng) {
  return random_diagram(cat, random_object(rng), random_object(rng), rng);
}

// a random subdiagram: drop a random subset of edges (still valid: removing
// edges cannot create crossings)
inline Diagram sub_diagram(const Diagram& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> keep(0, 1);
  std::vector<DEdge> edges;
  for (const DEdge& e : d.edges)
    if (keep(rng)) edges.push_back(e);
  return make_diagram(d.mode, d.alphabet, d.dom, d.cod, edges);
}

// ---------------------------------------------------------------------------
// Random purely affine types and well-typed terms

inline TypePtr random_affine_type(std::mt19937& rng, int depth = 2) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth <= 0 || coin(rng) == 0) return base_type();
  return lin(random_affine_type(rng, depth - 1), random_affine_type(rng, depth - 1));
}

// builds a term of type `ty` in the ordered linear context `ctx`, correct by
// construction: lambdas extend the context on the right, applications split
// it contiguously, a variable use discards the rest (affine weakening)
inline TermPtr random_typed_term(std::vector<std::pair<std::string, TypePtr>> ctx,
                                 const TypePtr& ty, const Signature& sig, std::mt19937& rng,
                                 int depth, int* counter);

inline bool inferable(const TermPtr& t, const std::vector<std::pair<std::string, TypePtr>>& ctx,
                      const Signature& sig) {
  try {
    infer_type(t, ctx, sig, Mode::Planar);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

// builds an application of some function to a fresh argument; avoids the one
// shape whose types cannot be reconstructed later (neither side inferable,
// e.g. a lambda applied to a lambda) by retrying at a base argument type
inline TermPtr random_app(const std::vector<std::pair<std::string, TypePtr>>& ctx,
                          const TypePtr& ty, const Signature& sig, std::mt19937& rng, int depth,
                          int* counter, TypePtr arg_ty) {
  std::uniform_int_distribution<size_t> split(0, ctx.size());
  size_t k = split(rng);
  std::vector<std::pair<std::string, TypePtr>> left(ctx.begin(), ctx.begin() + k);
  std::vector<std::pair<std::string, TypePtr>> right(ctx.begin() + k, ctx.end());
  TermPtr f = random_typed_term(left, lin(arg_ty, ty), sig, rng, depth - 1, counter);
  TermPtr x = random_typed_term(right, arg_ty, sig, rng, depth - 1, counter);
  if (!inferable(f, left, sig) && !inferable(x, right, sig)) {
    arg_ty = base_type();
    f = random_typed_term(left, lin(arg_ty, ty), sig, rng, depth - 1, counter);
    x = random_typed_term(right, arg_ty, sig, rng, depth - 1, counter);
    if (!inferable(f, left, sig) && !inferable(x, right, sig)) x = cst(kEps);
  }
  return app(f, x);
}

inline TermPtr random_typed_term(std::vector<std::pair<std::string, TypePtr>> ctx,
                                 const TypePtr& ty, const Signature& sig, std::mt19937& rng,
                                 int depth, int* counter) {
  std::uniform_int_distribution<int> coin(0, 5);
  if (ty->kind == Type::Kind::Lin) {
    // occasionally produce the function by application to create a redex
    if (depth > 0 && coin(rng) == 0)
      return random_app(ctx, ty, sig, rng, depth, counter, random_affine_type(rng, 1));
    std::string v = "v" + std::to_string((*counter)++);
    ctx.emplace_back(v, ty->dom);
    return lam(v, random_typed_term(ctx, ty->cod, sig, rng, depth - 1, counter));
  }
  // base type
  if (depth > 0) switch (coin(rng)) {
      case 0: case 1:  // application at a random argument type
        return random_app(ctx, ty, sig, rng, depth, counter,
                          random_affine_type(rng, depth > 2 ? 2 : 1));
      case 2: {  // a letter constant around a smaller term
        std::uniform_int_distribution<size_t> pick(0, sig.letters.size() - 1);
        return app(cst(sig.letters[pick(rng)]),
                   random_typed_term(ctx, base_type(), sig, rng, depth - 1, counter));
      }
      default: break;
    }
  for (const auto& [name, vty] : ctx)  // use a variable, dropping the rest
    if (type_equal(vty, ty)) return var(name);
  return cst(kEps);
}

inline TermPtr random_closed_term(const TypePtr& ty, const Signature& sig, std::mt19937& rng,
                                  int depth = 6) {
  // the checker cannot infer a type for a discarded lambda argument, so
  // resample the (rare) generated terms that contain one
  for (int attempt = 0; attempt < 100; ++attempt) {
    int counter = 0;
    TermPtr t = random_typed_term({}, ty, sig, rng, depth, &counter);
    if (typechecks(t, ty, sig, Mode::Planar)) return t;
  }
  int counter = 0;
  return random_typed_term({}, ty, sig, rng, 0, &counter);
}

// ---------------------------------------------------------------------------
// Random register updates (copyless and monotone by construction)

inline RegisterUpdate random_update(int src, int words, const std::string& alphabet,
                                    std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> used;
  for (int i = 0; i < src; ++i)
    if (coin(rng)) used.push_back(i);  // increasing by construction
  std::uniform_int_distribution<int> slot(0, words - 1);
  std::vector<int> slots(used.size());
  for (auto& s : slots) s = slot(rng);
  std::sort(slots.begin(), slots.end());  // nondecreasing: keeps monotonicity

  RegisterUpdate u{src, std::vector<RegWord>(words)};
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> pad(0, 2);
  size_t next = 0;
  for (int w = 0; w < words; ++w) {
    for (int p = pad(rng); p > 0; --p) u.words[w].push_back(reg_letter(alphabet[pick(rng)]));
    while (next < used.size() && slots[next] == w) {
      u.words[w].push_back(reg_index(used[next++]));
      for (int p = pad(rng); p > 0; --p) u.words[w].push_back(reg_letter(alphabet[pick(rng)]));
    }
  }
  validate_update(u);
  return u;
}

inline RegisterMachine random_machine(std::mt19937& rng) {
  std::uniform_int_distribution<int> regs(1, 3);
  RegisterMachine m;
  m.registers = regs(rng);
  m.input = make_signature("ab");
  m.output = make_signature("ab");
  for (const auto& l : m.input.letters)
    m.updates[l] = random_update(m.registers, m.registers, "ab", rng);
  validate_machine(m);
  return m;
}

}  // namespace plt::testing
