#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "plt/error.hpp"

using namespace plt;
using namespace plt::testing;
using nlohmann::json;

TEST_CASE("diagram json round-trips on random diagrams") {
  std::mt19937 rng(83);
  DiagCat cat{"ab", DiagMode::Planar};
  for (int i = 0; i < 100; ++i) {
    Diagram d = random_diagram(cat, rng);
    Diagram back = diagram_from_json(diagram_to_json(d));
    CHECK(diagram_equal(back, d));
    CHECK(back.mode == d.mode);
  }
}

TEST_CASE("diagram json validates on load") {
  json j = {{"mode", "planar"}, {"alphabet", "ab"}, {"dom", "+"}, {"cod", "+"},
            {"edges", json::array({{{"src", {"in", 1}}, {"tgt", {"out", 1}}, {"label", "zz"}}})}};
  CHECK_THROWS_AS(diagram_from_json(j), ValidationError);
  j["edges"][0]["label"] = "ab";
  CHECK_NOTHROW(diagram_from_json(j));
  j["edges"][0]["src"][0] = "sideways";
  CHECK_THROWS_AS(diagram_from_json(j), Error);
}

TEST_CASE("transducer json round-trips and preserves runs") {
  TwoWayTransducer pad = from_table(parse_table(kPadTable));
  TwoWayTransducer back = transducer_from_json(transducer_to_json(pad));
  CHECK(back.convention == Convention::Pp);
  CHECK(back.states == pad.states);
  for (const std::string& w : all_words("012", 4)) CHECK(run_word(back, w) == run_word(pad, w));

  TwoWayTransducer comp = compile(make_rev());
  TwoWayTransducer back2 = transducer_from_json(transducer_to_json(comp));
  CHECK(back2.convention == Convention::EpsPm);
  for (const std::string& w : all_words("ab", 5)) CHECK(run_word(back2, w) == run_word(comp, w));
}

TEST_CASE("machine json round-trips and validates") {
  for (const RegisterMachine& m : {make_machine_id(), make_machine_dbl()}) {
    RegisterMachine back = machine_from_json(machine_to_json(m));
    CHECK(back.registers == m.registers);
    for (const std::string& w : all_words("ab", 5)) CHECK(run_machine(back, w) == run_machine(m, w));
  }
  // a machine over a digit alphabet exercises the escape convention
  json j = {{"registers", 1}, {"alphabet", "01"}, {"output", "01"},
            {"updates", {{"0", {"0\\0"}}, {"1", {"0\\1"}}}}};
  RegisterMachine digits = machine_from_json(j);
  CHECK(run_machine(digits, "0110") == "0110");
  RegisterMachine back = machine_from_json(machine_to_json(digits));
  CHECK(run_machine(back, "0110") == "0110");
  // invalid update is rejected on load
  json bad = {{"registers", 1}, {"alphabet", "ab"}, {"updates", {{"a", {"00"}}, {"b", {"0"}}}}};
  CHECK_THROWS_AS(machine_from_json(bad), ValidationError);
}
