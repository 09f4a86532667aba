#include "plt/registers.hpp"

#include <algorithm>

#include "plt/error.hpp"

namespace plt {

RegItem reg_letter(char c) { return RegItem{false, c, 0}; }
RegItem reg_index(int i) { return RegItem{true, 0, i}; }

RegWord parse_reg_word(const std::string& s) {
  RegWord w;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\') {
      if (i + 1 == s.size()) throw ValidationError("dangling escape in update word '" + s + "'");
      w.push_back(reg_letter(s[++i]));
    } else if (s[i] >= '0' && s[i] <= '9') {
      w.push_back(reg_index(s[i] - '0'));
    } else {
      w.push_back(reg_letter(s[i]));
    }
  }
  return w;
}

std::string show_reg_word(const RegWord& w) {
  std::string s;
  for (const auto& it : w) {
    if (it.is_reg) {
      if (it.index > 9) throw ValidationError("register index above 9 has no digit notation");
      s += static_cast<char>('0' + it.index);
    } else {
      if ((it.letter >= '0' && it.letter <= '9') || it.letter == '\\') s += '\\';
      s += it.letter;
    }
  }
  return s;
}

std::string validate_update_report(const RegisterUpdate& u) {
  // copylessness: each source index occurs at most once across the tuple
  std::vector<int> word_of(u.src_count, -1), offset_of(u.src_count, -1);
  for (size_t wi = 0; wi < u.words.size(); ++wi) {
    for (size_t off = 0; off < u.words[wi].size(); ++off) {
      const RegItem& it = u.words[wi][off];
      if (!it.is_reg) continue;
      if (it.index < 0 || it.index >= u.src_count)
        return "index " + std::to_string(it.index) + " out of range for " +
               std::to_string(u.src_count) + " source registers";
      if (word_of[it.index] >= 0)
        return "copyless violation: index " + std::to_string(it.index) +
               " occurs twice (words " + std::to_string(word_of[it.index]) + " and " +
               std::to_string(wi) + ")";
      word_of[it.index] = static_cast<int>(wi);
      offset_of[it.index] = static_cast<int>(off);
    }
  }
  // monotonicity: i <= j must occur in non-decreasing tuple positions, and
  // within a word in index order
  for (int i = 0; i < u.src_count; ++i) {
    if (word_of[i] < 0) continue;
    for (int j = i + 1; j < u.src_count; ++j) {
      if (word_of[j] < 0) continue;
      if (word_of[i] > word_of[j] ||
          (word_of[i] == word_of[j] && offset_of[i] > offset_of[j]))
        return "monotone violation: index " + std::to_string(i) + " occurs after index " +
               std::to_string(j);
    }
  }
  return "";
}

void validate_update(const RegisterUpdate& u) {
  std::string r = validate_update_report(u);
  if (!r.empty()) throw ValidationError(r);
}

RegisterUpdate identity_update(int n) {
  RegisterUpdate u;
  u.src_count = n;
  for (int i = 0; i < n; ++i) u.words.push_back({reg_index(i)});
  return u;
}

RegisterUpdate compose_update(const RegisterUpdate& outer, const RegisterUpdate& inner) {
  if (outer.src_count != static_cast<int>(inner.words.size()))
    throw ValidationError("compose_update: arity mismatch (" + std::to_string(outer.src_count) +
                          " source registers vs " + std::to_string(inner.words.size()) +
                          " words)");
  validate_update(outer);
  validate_update(inner);
  RegisterUpdate r;
  r.src_count = inner.src_count;
  for (const auto& w : outer.words) {
    RegWord rw;
    for (const auto& it : w) {
      if (it.is_reg)
        rw.insert(rw.end(), inner.words[it.index].begin(), inner.words[it.index].end());
      else
        rw.push_back(it);
    }
    r.words.push_back(std::move(rw));
  }
  validate_update(r);  // preserved by construction
  return r;
}

void validate_machine(const RegisterMachine& m) {
  if (m.registers < 1) throw ValidationError("a register machine needs at least one register");
  for (const auto& l : m.input.letters) {
    auto it = m.updates.find(l);
    if (it == m.updates.end())
      throw ValidationError("missing update for input letter '" + l + "'");
    const RegisterUpdate& u = it->second;
    if (u.src_count != m.registers || static_cast<int>(u.words.size()) != m.registers)
      throw ValidationError("update for '" + l + "' is not in CMRupdate{" +
                            std::to_string(m.registers) + "}{" +
                            std::to_string(m.registers) + "}");
    validate_update(u);
    for (const auto& w : u.words)
      for (const auto& itm : w)
        if (!itm.is_reg && !m.output.has_letter(std::string(1, itm.letter)))
          throw ValidationError(std::string("output letter '") + itm.letter +
                                "' outside the output alphabet");
  }
}

std::string run_machine(const RegisterMachine& m, const std::string& word) {
  validate_machine(m);
  std::vector<std::string> regs(m.registers);
  for (char c : word) {
    auto it = m.updates.find(std::string(1, c));
    if (it == m.updates.end())
      throw Error("input letter '" + std::string(1, c) + "' has no update");
    std::vector<std::string> next;
    for (const auto& w : it->second.words) {
      std::string v;
      for (const auto& itm : w)
        if (itm.is_reg) v += regs[itm.index];
        else v += itm.letter;
      next.push_back(std::move(v));
    }
    regs = std::move(next);
  }
  return regs[0];
}

// ---------------------------------------------------------------------------
// Lambda encodings

TypePtr kappa_type(int m) {
  TypePtr t = base_type();
  for (int i = 0; i < m; ++i) t = lin(lin(base_type(), base_type()), t);
  return t;
}

namespace {

std::string fvar(int i) { return "f" + std::to_string(i + 1); }

// \z. s_1 (s_2 (... (s_m z))) for one update word
TermPtr word_term(const RegWord& w) {
  TermPtr t = var("z");
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    t = app(it->is_reg ? var(fvar(it->index)) : cst(std::string(1, it->letter)), t);
  return lam("z", t);
}

}  // namespace

TermPtr update_to_lambda(const RegisterUpdate& u) {
  validate_update(u);
  TermPtr t = var("F");
  for (const auto& w : u.words) t = app(t, word_term(w));
  for (int i = u.src_count - 1; i >= 0; --i) t = lam(fvar(i), t);
  return lam("F", t);
}

LambdaTransducer machine_to_lambda(const RegisterMachine& m) {
  validate_machine(m);
  int n = m.registers;
  LambdaTransducer L;
  L.input = m.input;
  L.output = m.output;
  L.kappa = lin(kappa_type(n), base_type());

  // d_a = \X z. X (sigma_a_ z)
  for (const auto& l : m.input.letters)
    L.step.emplace(l, lam("X", lam("z", app(var("X"), app(update_to_lambda(m.updates.at(l)),
                                                          var("z"))))));
  // d_eps = \Z. Z (\x. x) ... (\x. x)
  TermPtr z = var("Z");
  for (int i = 0; i < n; ++i) z = app(z, lam("x", var("x")));
  L.d_eps = lam("Z", z);
  // o = \K. K (\f_1 ... f_n. f_1 eps): read off register 0
  TermPtr arg = app(var(fvar(0)), cst(kEps));
  for (int i = n - 1; i >= 0; --i) arg = lam(fvar(i), arg);
  L.readout = lam("K", app(var("K"), arg));
  validate_transducer(L);
  return L;
}

TermPtr reverse_term(const Signature& sigma) {
  TermPtr t = var("s");
  for (const auto& a : sigma.letters)
    t = app(t, lam("x", lam("z", app(var("x"), app(var(a), var("z"))))));
  t = app(app(t, lam("x", var("x"))), var(kEps));
  t = lam(kEps, t);
  for (auto it = sigma.letters.rbegin(); it != sigma.letters.rend(); ++it) t = lam(*it, t);
  return lam("s", t);
}

TermPtr pipeline_compose(const TermPtr& f, const TermPtr& g) {
  std::set<std::string> taken = free_vars(f);
  taken.merge(free_vars(g));
  std::string s = fresh_name("s", taken);
  return lam(s, app(f, app(g, var(s))));
}

}  // namespace plt
