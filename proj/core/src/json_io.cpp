#include "plt/json_io.hpp"

#include <set>

#include "plt/error.hpp"

namespace plt {

using nlohmann::json;

namespace {

json vertex_to_json(const Vertex& v) { return json::array({v.out ? "out" : "in", v.pos}); }

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    throw ValidationError("vertex must be [\"in\"|\"out\", pos]");
  std::string side = j[0].get<std::string>();
  if (side != "in" && side != "out")
    throw ValidationError("vertex side must be \"in\" or \"out\"");
  return Vertex{side == "out", j[1].get<int>()};
}

std::string mode_name(DiagMode m) { return m == DiagMode::Planar ? "planar" : "symmetric"; }

DiagMode mode_from_name(const std::string& s) {
  if (s == "planar") return DiagMode::Planar;
  if (s == "symmetric") return DiagMode::Symmetric;
  throw ValidationError("mode must be \"planar\" or \"symmetric\"");
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json edges = json::array();
  for (const auto& e : d.edges)
    edges.push_back({{"src", vertex_to_json(e.src)},
                     {"tgt", vertex_to_json(e.tgt)},
                     {"label", e.label}});
  return {{"mode", mode_name(d.mode)}, {"alphabet", d.alphabet}, {"dom", d.dom},
          {"cod", d.cod}, {"edges", edges}};
}

Diagram diagram_from_json(const json& j) {
  std::vector<DEdge> edges;
  for (const auto& e : j.value("edges", json::array()))
    edges.push_back({vertex_from_json(e.at("src")), vertex_from_json(e.at("tgt")),
                     e.value("label", "")});
  return make_diagram(mode_from_name(j.value("mode", "planar")), j.value("alphabet", ""),
                      j.at("dom").get<std::string>(), j.at("cod").get<std::string>(),
                      std::move(edges));
}

json transducer_to_json(const TwoWayTransducer& t) {
  json step = json::object();
  for (const auto& [l, d] : t.step) step[l] = diagram_to_json(d);
  return {{"convention", t.convention == Convention::Pp ? "pp" : "eps_pm"},
          {"input", t.input.alphabet()},
          {"output", t.output_alphabet},
          {"mode", mode_name(t.mode)},
          {"states", t.states},
          {"init", diagram_to_json(t.init)},
          {"step", step},
          {"final", diagram_to_json(t.final)}};
}

TwoWayTransducer transducer_from_json(const json& j) {
  TwoWayTransducer t;
  std::string conv = j.at("convention").get<std::string>();
  if (conv == "pp") t.convention = Convention::Pp;
  else if (conv == "eps_pm") t.convention = Convention::EpsPm;
  else throw ValidationError("convention must be \"pp\" or \"eps_pm\"");
  t.input = make_signature(j.at("input").get<std::string>());
  t.output_alphabet = j.at("output").get<std::string>();
  t.mode = mode_from_name(j.value("mode", "planar"));
  t.states = j.at("states").get<std::string>();
  t.init = diagram_from_json(j.at("init"));
  for (const auto& [l, d] : j.at("step").items()) t.step.emplace(l, diagram_from_json(d));
  t.final = diagram_from_json(j.at("final"));
  validate_transducer(t);
  return t;
}

json machine_to_json(const RegisterMachine& m) {
  json updates = json::object();
  for (const auto& [l, u] : m.updates) {
    json words = json::array();
    for (const auto& w : u.words) words.push_back(show_reg_word(w));
    updates[l] = words;
  }
  return {{"registers", m.registers}, {"alphabet", m.input.alphabet()},
          {"output", m.output.alphabet()}, {"updates", updates}};
}

RegisterMachine machine_from_json(const json& j) {
  RegisterMachine m;
  m.registers = j.at("registers").get<int>();
  m.input = make_signature(j.at("alphabet").get<std::string>());
  for (const auto& [l, words] : j.at("updates").items()) {
    RegisterUpdate u;
    u.src_count = m.registers;
    for (const auto& w : words) u.words.push_back(parse_reg_word(w.get<std::string>()));
    m.updates.emplace(l, std::move(u));
  }
  if (j.contains("output")) {
    m.output = make_signature(j.at("output").get<std::string>());
  } else {
    std::set<char> gamma;
    for (const auto& [l, u] : m.updates)
      for (const auto& w : u.words)
        for (const auto& it : w)
          if (!it.is_reg) gamma.insert(it.letter);
    m.output = make_signature(std::string(gamma.begin(), gamma.end()));
  }
  validate_machine(m);
  return m;
}

}  // namespace plt
