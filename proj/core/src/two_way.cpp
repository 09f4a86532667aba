#include "plt/two_way.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "plt/error.hpp"
#include "plt/normalize.hpp"
#include "plt/parser.hpp"

namespace plt {

// ---------------------------------------------------------------------------
// Lambda-transducers

void validate_transducer(const LambdaTransducer& L) {
  if (!L.kappa || !purely_affine(L.kappa))
    throw TypeError("iteration type must be purely affine");
  if (!L.d_eps || !L.readout) throw TypeError("transducer is missing d_eps or o");
  TypePtr kk = lin(L.kappa, L.kappa);
  for (const auto& l : L.input.letters) {
    auto it = L.step.find(l);
    if (it == L.step.end()) throw TypeError("missing step term for input letter '" + l + "'");
    typecheck(it->second, kk, L.output, L.mode);
  }
  typecheck(L.d_eps, L.kappa, L.output, L.mode);
  typecheck(L.readout, lin(L.kappa, base_type()), L.output, L.mode);
}

TermPtr state_term(const LambdaTransducer& L, const std::string& word) {
  TermPtr t = L.d_eps;
  for (char c : word) {
    auto it = L.step.find(std::string(1, c));
    if (it == L.step.end())
      throw Error("input letter '" + std::string(1, c) + "' has no step term");
    t = app(it->second, t);
  }
  return app(L.readout, t);
}

std::string run_lambda(const LambdaTransducer& L, const std::string& word) {
  return church_readback(state_term(L, word), L.output);
}

// ---------------------------------------------------------------------------
// Two-way transducers

namespace {

void expect_boundary(const Diagram& d, const std::string& dom, const std::string& cod,
                     const std::string& what) {
  if (d.dom != dom || d.cod != cod)
    throw ValidationError(what + " has boundary " + d.dom + " -> " + d.cod + ", expected " +
                          dom + " -> " + cod);
}

}  // namespace

void validate_transducer(const TwoWayTransducer& T) {
  std::string in_obj = T.convention == Convention::Pp ? "+" : "";
  std::string out_obj = T.convention == Convention::Pp ? "+" : "+-";
  expect_boundary(T.init, in_obj, T.states, "init diagram");
  expect_boundary(T.final, T.states, out_obj, "final diagram");
  validate_diagram(T.init);
  validate_diagram(T.final);
  for (const auto& l : T.input.letters) {
    auto it = T.step.find(l);
    if (it == T.step.end()) throw ValidationError("missing step diagram for letter '" + l + "'");
    expect_boundary(it->second, T.states, T.states, "step diagram for '" + l + "'");
    validate_diagram(it->second);
  }
}

std::optional<std::string> run_word(const TwoWayTransducer& T, const std::string& word) {
  Diagram d = T.init;
  for (char c : word) {
    auto it = T.step.find(std::string(1, c));
    if (it == T.step.end())
      throw Error("input letter '" + std::string(1, c) + "' has no step diagram");
    d = compose(d, it->second);
  }
  d = compose(d, T.final);
  if (T.convention == Convention::EpsPm) return readoff(d);
  for (const auto& e : d.edges)
    if (e.src == Vertex{false, 1} && e.tgt == Vertex{true, 1}) return e.label;
  return std::nullopt;
}

TwoWayTransducer compile(const LambdaTransducer& L) {
  validate_transducer(L);
  TwoWayTransducer T;
  T.convention = Convention::EpsPm;
  T.input = L.input;
  T.output_alphabet = L.output.alphabet();
  T.mode = diag_mode(L.mode);
  T.states = interp_type(L.kappa);
  TypePtr kk = lin(L.kappa, L.kappa);
  T.init = interp_term(typecheck(L.d_eps, L.kappa, L.output, L.mode));
  for (const auto& l : L.input.letters)
    T.step.emplace(l, uncurry(interp_term(typecheck(L.step.at(l), kk, L.output, L.mode)),
                              T.states));
  T.final = uncurry(interp_term(typecheck(L.readout, lin(L.kappa, base_type()), L.output,
                                          L.mode)),
                    T.states);
  return T;
}

TwoWayTransducer convert_convention(const TwoWayTransducer& T, Convention to) {
  if (T.convention == to) return T;
  DiagCat cat{T.output_alphabet, T.mode};
  TwoWayTransducer R = T;
  R.convention = to;
  R.step.clear();
  if (to == Convention::EpsPm) {
    // pp -> eps_pm: tensor a backward tracking wire onto the state object
    R.states = T.states + "-";
    R.init = curry(T.init, "+");
    for (const auto& [l, d] : T.step) R.step.emplace(l, tensor(d, cat.identity("-")));
    R.final = tensor(T.final, cat.identity("-"));
  } else {
    // eps_pm -> pp: tensor a forward wire and close it off at the readout
    R.states = T.states + "+";
    R.init = tensor(T.init, cat.identity("+"));
    for (const auto& [l, d] : T.step) R.step.emplace(l, tensor(d, cat.identity("+")));
    R.final = uncurry(T.final, "+");
  }
  validate_transducer(R);
  return R;
}

// ---------------------------------------------------------------------------
// Transition tables

TransitionTable parse_table(const std::string& text) {
  TransitionTable tbl;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool have_states = false;
  while (std::getline(is, line)) {
    ++lineno;
    size_t cut = line.find('#');
    if (cut != std::string::npos) line.resize(cut);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "states:") {
      if (have_states) throw ParseError(lineno, 1, "duplicate states: line");
      std::string s;
      while (ls >> s) {
        if (s.size() < 2 || (s.back() != '+' && s.back() != '-'))
          throw ParseError(lineno, 1, "state '" + s + "' must end with a direction mark +/-");
        tbl.states.emplace_back(s.substr(0, s.size() - 1), s.back() == '+');
      }
      if (tbl.states.empty()) throw ParseError(lineno, 1, "empty state list");
      have_states = true;
      continue;
    }
    TransitionTable::Row row;
    row.state = first;
    row.line = lineno;
    if (!(ls >> row.symbol >> row.target >> row.output))
      throw ParseError(lineno, 1, "expected: state symbol target output");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, 1, "trailing token '" + extra + "'");
    if (row.symbol.size() != 1)
      throw ParseError(lineno, 1, "symbol must be a single letter, '>' or '<'");
    if (row.output == "eps") row.output.clear();
    tbl.rows.push_back(std::move(row));
  }
  if (!have_states) throw ParseError(lineno, 1, "missing states: line");
  return tbl;
}

namespace {

std::string row_show(const TransitionTable::Row& r) {
  return "row (line " + std::to_string(r.line) + ") '" + r.state + " " + r.symbol + " " +
         r.target + " " + (r.output.empty() ? "eps" : r.output) + "'";
}

}  // namespace

TwoWayTransducer from_table(const TransitionTable& tbl, DiagMode mode) {
  std::map<std::string, int> pos;  // 1-based position in S
  std::map<std::string, bool> fwd;
  std::string S;
  for (const auto& [name, forward] : tbl.states) {
    if (pos.count(name)) throw ValidationError("state '" + name + "' listed twice");
    pos[name] = static_cast<int>(S.size()) + 1;
    fwd[name] = forward;
    S += forward ? '+' : '-';
  }

  std::set<char> letters, gamma;
  for (const auto& r : tbl.rows) {
    for (const auto& q : {r.state, r.target})
      if (!pos.count(q)) throw ValidationError(row_show(r) + ": unknown state '" + q + "'");
    char s = r.symbol[0];
    if (s != '>' && s != '<') letters.insert(s);
    for (char c : r.output) gamma.insert(c);
  }

  TwoWayTransducer T;
  T.convention = Convention::Pp;
  T.input = make_signature(std::string(letters.begin(), letters.end()));
  T.output_alphabet.assign(gamma.begin(), gamma.end());
  T.mode = mode;
  T.states = S;

  // build one diagram per symbol; report degree clashes by their rows
  auto build = [&](const std::string& symbol, const std::string& dom, const std::string& cod) {
    std::vector<DEdge> edges;
    std::map<Vertex, const TransitionTable::Row*> used_src, used_tgt;
    for (const auto& r : tbl.rows) {
      if (r.symbol != symbol) continue;
      Vertex src, tgt;
      if (symbol == ">") {
        src = fwd[r.state] ? Vertex{false, 1} : Vertex{true, pos[r.state]};
        if (!fwd[r.target])
          throw ValidationError(row_show(r) + ": the left endmarker cannot send the head left");
        tgt = Vertex{true, pos[r.target]};
      } else if (symbol == "<") {
        if (!fwd[r.state])
          throw ValidationError(row_show(r) +
                                ": a backward state never reads the right endmarker");
        src = Vertex{false, pos[r.state]};
        // forward target = halt and accept; backward target = turn around
        tgt = fwd[r.target] ? Vertex{true, 1} : Vertex{false, pos[r.target]};
      } else {
        src = fwd[r.state] ? Vertex{false, pos[r.state]} : Vertex{true, pos[r.state]};
        tgt = fwd[r.target] ? Vertex{true, pos[r.target]} : Vertex{false, pos[r.target]};
      }
      if (auto [it, fresh] = used_src.emplace(src, &r); !fresh)
        throw ValidationError("degree violation: " + row_show(*it->second) + " and " +
                              row_show(r) + " leave the same vertex");
      if (auto [it, fresh] = used_tgt.emplace(tgt, &r); !fresh)
        throw ValidationError("degree violation: " + row_show(*it->second) + " and " +
                              row_show(r) + " enter the same vertex");
      edges.push_back({src, tgt, r.output});
    }
    try {
      return make_diagram(mode, T.output_alphabet, dom, cod, std::move(edges));
    } catch (const ValidationError& e) {
      throw ValidationError("table for symbol '" + symbol + "': " + e.what());
    }
  };

  T.init = build(">", "+", S);
  T.final = build("<", S, "+");
  for (const auto& l : T.input.letters) T.step.emplace(l, build(l, S, S));
  return T;
}

// ---------------------------------------------------------------------------
// Extraction

namespace {

// replace the unique application spine headed by `s` (keeping the first
// `keep` arguments) by the fresh head variable `h`
struct SpineExtract {
  std::string s, h;
  int keep;
  bool found = false;
  std::vector<TermPtr> args;

  TermPtr go(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Const:
        return t;
      case Term::Kind::Var:
        if (t->name == s)
          throw ShapeError("iterator '" + s + "' is applied to too few arguments");
        return t;
      case Term::Kind::Lam:
        if (t->name == s) return t;  // shadowed below here
        return lam(t->name, go(t->a));
      case Term::Kind::App: {
        std::vector<TermPtr> as;
        TermPtr head = t;
        while (head->kind == Term::Kind::App) {
          as.push_back(head->b);
          head = head->a;
        }
        std::reverse(as.begin(), as.end());
        if (head->kind == Term::Kind::Var && head->name == s) {
          if (static_cast<int>(as.size()) < keep)
            throw ShapeError("iterator '" + s + "' is applied to too few arguments");
          if (found) throw ShapeError("iterator '" + s + "' occurs twice");
          found = true;
          args.assign(as.begin(), as.begin() + keep);
          TermPtr r = var(h);
          for (size_t i = keep; i < as.size(); ++i) r = app(r, go(as[i]));
          return r;
        }
        TermPtr r = go(head);
        for (const auto& a : as) r = app(r, go(a));
        return r;
      }
    }
    return t;
  }
};

}  // namespace

LambdaTransducer extract_lambda_transducer(const TermPtr& t, const Signature& input,
                                           const Signature& output, const TypePtr& kappa,
                                           Mode mode) {
  TypePtr ty = lin(str_type(input, kappa), str_type(output));
  typecheck(t, ty, output, mode);
  TermPtr e = eta_long(normalize(resolve_constants(t, output)), ty, output);

  // peel \s . \b_1 ... b_k . \e0 .
  int binders = 2 + static_cast<int>(output.letters.size());
  std::vector<std::string> names;
  TermPtr body = e;
  for (int i = 0; i < binders; ++i) {
    if (body->kind != Term::Kind::Lam)
      throw ShapeError("eta-long form has fewer than " + std::to_string(binders) +
                       " leading abstractions: " + show(e));
    names.push_back(body->name);
    body = body->a;
  }
  // output-letter binders and the empty-word binder become Gamma constants
  for (size_t j = 0; j < output.letters.size(); ++j)
    body = substitute(body, names[j + 1], cst(output.letters[j]));
  body = substitute(body, names.back(), cst(kEps));

  int n = static_cast<int>(input.letters.size());
  std::set<std::string> taken = free_vars(body);
  taken.insert(names.begin(), names.end());
  SpineExtract ex{names.front(), fresh_name("h", taken), n + 1};
  TermPtr octx = ex.go(body);
  if (!ex.found)
    throw ShapeError("iterator '" + names.front() + "' does not occur in the body");

  LambdaTransducer L;
  L.input = input;
  L.output = output;
  L.mode = mode;
  L.kappa = kappa;
  for (int i = 0; i < n; ++i) {
    const TermPtr& d = ex.args[i];
    if (!free_vars(d).empty())
      throw ShapeError("step term for '" + input.letters[i] +
                       "' captures an outer variable: " + show(d));
    L.step.emplace(input.letters[i], d);
  }
  L.d_eps = ex.args[n];
  if (!free_vars(L.d_eps).empty())
    throw ShapeError("initial term captures an outer variable: " + show(L.d_eps));
  L.readout = lam(ex.h, octx);
  if (!free_vars(L.readout).empty())
    throw ShapeError("readout term captures an outer variable: " + show(L.readout));
  validate_transducer(L);
  return L;
}

// ---------------------------------------------------------------------------
// .lam packaging

LambdaTransducer transducer_from_program(const Program& p, Mode mode) {
  LambdaTransducer L;
  L.input = p.signature("input");
  L.output = p.signature("output");
  L.mode = mode;
  L.kappa = p.type("kappa");
  auto load = [&](const std::string& name) {
    return resolve_constants(p.def(name), L.output);
  };
  for (const auto& l : L.input.letters) L.step.emplace(l, load("d_" + l));
  L.d_eps = load("d_eps");
  L.readout = load("o");
  validate_transducer(L);
  return L;
}

std::string transducer_to_lam(const LambdaTransducer& L) {
  std::ostringstream os;
  auto sig_line = [&](const std::string& name, const Signature& s) {
    os << "sig " << name << " {";
    for (size_t i = 0; i < s.letters.size(); ++i) os << (i ? ", " : "") << s.letters[i];
    os << "}\n";
  };
  sig_line("input", L.input);
  sig_line("output", L.output);
  os << "type kappa = " << show(L.kappa) << "\n";
  for (const auto& l : L.input.letters) os << "def d_" << l << " = " << show(L.step.at(l)) << "\n";
  os << "def d_eps = " << show(L.d_eps) << "\n";
  os << "def o = " << show(L.readout) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Randomized equivalence

EquivReport check_equiv(const LambdaTransducer& L, const TwoWayTransducer& T, int samples,
                        int max_len, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<size_t> letter_dist(
      0, L.input.letters.empty() ? 0 : L.input.letters.size() - 1);

  EquivReport rep;
  auto try_word = [&](const std::string& w) {
    std::optional<std::string> lhs, rhs;
    try {
      lhs = run_lambda(L, w);
    } catch (const ShapeError&) {
      lhs = std::nullopt;
    }
    rhs = run_word(T, w);
    ++rep.tested;
    if (lhs != rhs) {
      rep.ok = false;
      rep.counterexample = w;
      rep.lhs = lhs;
      rep.rhs = rhs;
      return false;
    }
    return true;
  };

  if (!try_word("")) return rep;
  for (int i = 0; i < samples; ++i) {
    std::string w;
    if (!L.input.letters.empty()) {
      int len = len_dist(rng);
      for (int j = 0; j < len; ++j) w += L.input.letters[letter_dist(rng)];
    }
    if (!try_word(w)) return rep;
  }
  return rep;
}

}  // namespace plt
