// plt: command-line front end for the planar-lambda / transducer toolkit.
// Exit codes: 0 success, 1 domain error (type/validation failures,
// counterexamples), 2 usage or I/O errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plt/error.hpp"
#include "plt/json_io.hpp"
#include "plt/normalize.hpp"
#include "plt/parser.hpp"

using namespace plt;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

Mode parse_mode(const std::string& s) {
  if (s == "planar") return Mode::Planar;
  if (s == "commutative") return Mode::Commutative;
  throw UsageError("--mode must be planar or commutative");
}

// the ambient signature for typechecking: --alphabet wins, then --sig,
// then the file's unique sig declaration
Signature ambient_signature(const Program& prog, const std::string& sig_name,
                            const std::string& alphabet) {
  if (!alphabet.empty()) return make_signature(alphabet);
  if (!sig_name.empty()) return prog.signature(sig_name);
  const Program::Decl* found = nullptr;
  for (const auto& d : prog.decls)
    if (d.kind == Program::Decl::Kind::Sig) {
      if (found) throw UsageError("several sig declarations; pick one with --sig");
      found = &d;
    }
  if (!found) throw UsageError("no sig declaration; supply --sig or --alphabet");
  return found->sig;
}

std::optional<std::string> run_any(const TwoWayTransducer& T, const std::string& word) {
  return run_word(T, word);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"planar affine lambda-calculus and two-way transducer toolkit"};
  cli.require_subcommand(1);
  bool as_json = false;
  cli.add_flag("--json", as_json, "machine-readable output");

  std::string file, term_name, type_text, sig_name, alphabet, word, out_path, to_conv,
      part = "init", format = "dot";
  std::string mode_text = "planar";
  int samples = 100, max_len = 12;
  unsigned seed = 42;

  auto* c_typecheck = cli.add_subcommand("typecheck", "check a definition against a type");
  c_typecheck->add_option("file", file)->required();
  c_typecheck->add_option("--term", term_name)->required();
  c_typecheck->add_option("--type", type_text)->required();
  c_typecheck->add_option("--mode", mode_text);
  c_typecheck->add_option("--sig", sig_name);
  c_typecheck->add_option("--alphabet", alphabet);

  auto* c_normalize = cli.add_subcommand("normalize", "print the beta-normal form");
  c_normalize->add_option("file", file)->required();
  c_normalize->add_option("--term", term_name)->required();

  auto* c_interp = cli.add_subcommand("interp", "interpret a typed term as a diagram");
  c_interp->add_option("file", file)->required();
  c_interp->add_option("--term", term_name)->required();
  c_interp->add_option("--type", type_text)->required();
  c_interp->add_option("--mode", mode_text);
  c_interp->add_option("--sig", sig_name);
  c_interp->add_option("--alphabet", alphabet);

  auto* c_compile = cli.add_subcommand("compile", "compile a .lam transducer to a 2PRFT");
  c_compile->add_option("file", file)->required();
  c_compile->add_option("-o,--output", out_path);
  c_compile->add_option("--mode", mode_text);

  auto* c_run = cli.add_subcommand("run", "run a 2PRFT json on a word");
  c_run->add_option("file", file)->required();
  c_run->add_option("--word", word);

  auto* c_run_lambda = cli.add_subcommand("run-lambda", "run a .lam transducer on a word");
  c_run_lambda->add_option("file", file)->required();
  c_run_lambda->add_option("--word", word);
  c_run_lambda->add_option("--mode", mode_text);

  auto* c_run_machine = cli.add_subcommand("run-machine", "run a register machine on a word");
  c_run_machine->add_option("file", file)->required();
  c_run_machine->add_option("--word", word);

  auto* c_from_table = cli.add_subcommand("from-table", "build a pp 2PRFT from a .tbl file");
  c_from_table->add_option("file", file)->required();
  c_from_table->add_option("-o,--output", out_path);

  auto* c_from_registers =
      cli.add_subcommand("from-registers", "compile a register machine to a .lam transducer");
  c_from_registers->add_option("file", file)->required();
  c_from_registers->add_option("-o,--output", out_path);

  auto* c_convert = cli.add_subcommand("convert", "switch a 2PRFT between conventions");
  c_convert->add_option("file", file)->required();
  c_convert->add_option("--to", to_conv)->required()->check(CLI::IsMember({"pp", "eps"}));
  c_convert->add_option("-o,--output", out_path);

  auto* c_check = cli.add_subcommand("check-equiv",
                                     "compare a .lam transducer against a 2PRFT on samples");
  c_check->add_option("lam", file)->required();
  std::string second;
  c_check->add_option("transducer", second)->required();
  c_check->add_option("--samples", samples);
  c_check->add_option("--max-len", max_len);
  c_check->add_option("--seed", seed);
  c_check->add_option("--mode", mode_text);

  auto* c_render = cli.add_subcommand("render", "render a diagram as dot or json");
  c_render->add_option("file", file)->required();
  c_render->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  c_render->add_option("--part", part,
                       "for transducer files: init, final, or step:<letter>");
  c_render->add_option("-o,--output", out_path);

  CLI11_PARSE(cli, argc, argv);

  try {
    Mode mode = parse_mode(mode_text);

    if (*c_typecheck) {
      Program prog = parse_program(slurp(file));
      Signature sig = ambient_signature(prog, sig_name, alphabet);
      TypePtr ty = parse_type(type_text, prog);
      typecheck(prog.def(term_name), ty, sig, mode);
      if (as_json)
        std::cout << json{{"ok", true}, {"term", term_name}, {"type", show(ty)}} << "\n";
      else
        std::cout << "ok: " << term_name << " : " << show(ty) << "\n";
    } else if (*c_normalize) {
      Program prog = parse_program(slurp(file));
      std::cout << show(normalize(prog.def(term_name))) << "\n";
    } else if (*c_interp) {
      Program prog = parse_program(slurp(file));
      Signature sig = ambient_signature(prog, sig_name, alphabet);
      TypePtr ty = parse_type(type_text, prog);
      Diagram d = interp_term(typecheck(prog.def(term_name), ty, sig, mode));
      emit(diagram_to_json(d).dump(2), out_path);
    } else if (*c_compile) {
      LambdaTransducer L = transducer_from_program(parse_program(slurp(file)), mode);
      emit(transducer_to_json(compile(L)).dump(2), out_path);
    } else if (*c_run) {
      TwoWayTransducer T = transducer_from_json(json::parse(slurp(file)));
      auto r = run_any(T, word);
      if (as_json)
        std::cout << json{{"word", word}, {"defined", r.has_value()},
                          {"output", r.value_or("")}} << "\n";
      else
        std::cout << (r ? *r : "bot") << "\n";
    } else if (*c_run_lambda) {
      LambdaTransducer L = transducer_from_program(parse_program(slurp(file)), mode);
      std::cout << run_lambda(L, word) << "\n";
    } else if (*c_run_machine) {
      RegisterMachine M = machine_from_json(json::parse(slurp(file)));
      std::cout << run_machine(M, word) << "\n";
    } else if (*c_from_table) {
      emit(transducer_to_json(from_table(parse_table(slurp(file)))).dump(2), out_path);
    } else if (*c_from_registers) {
      RegisterMachine M = machine_from_json(json::parse(slurp(file)));
      emit(transducer_to_lam(machine_to_lambda(M)), out_path);
    } else if (*c_convert) {
      TwoWayTransducer T = transducer_from_json(json::parse(slurp(file)));
      Convention to = to_conv == "pp" ? Convention::Pp : Convention::EpsPm;
      emit(transducer_to_json(convert_convention(T, to)).dump(2), out_path);
    } else if (*c_check) {
      LambdaTransducer L = transducer_from_program(parse_program(slurp(file)), mode);
      TwoWayTransducer T = transducer_from_json(json::parse(slurp(second)));
      EquivReport rep = check_equiv(L, T, samples, max_len, seed);
      if (as_json) {
        json j{{"ok", rep.ok}, {"tested", rep.tested}};
        if (!rep.ok) {
          j["counterexample"] = rep.counterexample;
          j["lambda"] = rep.lhs ? json(*rep.lhs) : json();
          j["transducer"] = rep.rhs ? json(*rep.rhs) : json();
        }
        std::cout << j << "\n";
      } else if (rep.ok) {
        std::cout << "ok: " << rep.tested << " words agree\n";
      } else {
        std::cout << "counterexample \"" << rep.counterexample << "\": lambda gives "
                  << (rep.lhs ? "\"" + *rep.lhs + "\"" : "bot") << ", transducer gives "
                  << (rep.rhs ? "\"" + *rep.rhs + "\"" : "bot") << "\n";
      }
      return rep.ok ? 0 : 1;
    } else if (*c_render) {
      json j = json::parse(slurp(file));
      Diagram d;
      if (j.contains("states")) {
        TwoWayTransducer T = transducer_from_json(j);
        if (part == "init") d = T.init;
        else if (part == "final") d = T.final;
        else if (part.rfind("step:", 0) == 0) d = T.step.at(part.substr(5));
        else throw UsageError("--part must be init, final or step:<letter>");
      } else {
        d = diagram_from_json(j);
      }
      emit(format == "dot" ? to_dot(d) : diagram_to_json(d).dump(2), out_path);
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const plt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const plt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
