#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "plt/error.hpp"
#include "plt/church.hpp"
#include "plt/interp.hpp"
#include "plt/parser.hpp"

using namespace plt;
using namespace plt::testing;

namespace {
const Signature kSig = make_signature("ab");

Diagram interp(const char* term, const char* type, Mode mode = Mode::Planar) {
  return interp_term(typecheck(parse_term(term), parse_type(type, Program{}), kSig, mode));
}
}  // namespace

TEST_CASE("type interpretation") {
  TypePtr o = base_type();
  CHECK(interp_type(o) == "+-");
  CHECK(interp_type(lin(o, o)) == "+-+-");           // "+-" ++ dual("+-")
  CHECK(interp_type(lin(lin(o, o), o)) == "+-+-+-"); // cod ++ dual(dom)
  CHECK_THROWS_AS(interp_type(full(o, o)), TypeError);
}

TEST_CASE("constants denote their generator diagrams") {
  InterpEnv env{kSig, DiagMode::Planar};
  Diagram e = env.constant(kEps);
  CHECK(e.dom == "");
  CHECK(e.cod == "+-");
  CHECK(readoff(e) == "");
  Diagram a = env.constant("a");
  CHECK(a.dom == "");
  CHECK(a.cod == "+-+-");
  CHECK(a.edges.size() == 2);
}

TEST_CASE("open words denote single labelled edges") {
  Diagram d = interp("a (b (a eps))", "o");
  CHECK(readoff(d) == "aba");
  CHECK(d.edges.size() == 1);
}

TEST_CASE("readoff distinguishes empty word from undefined") {
  InterpEnv env{kSig, DiagMode::Planar};
  CHECK(readoff(env.constant(kEps)) == "");
  Diagram bot = env.cat().bottom("", "+-");
  CHECK(readoff(bot) == std::nullopt);
  CHECK_THROWS_AS(readoff(env.cat().bottom("", "+")), ValidationError);
}

TEST_CASE("identity denotes the identity-shaped diagram") {
  Diagram d = interp("\\x. x", "o -o o");
  // 1 -> [[o -o o]] = "+-+-": a wire from the contravariant copy back out
  CHECK(d.dom == "");
  CHECK(d.cod == "+-+-");
  CHECK(d.edges.size() == 2);
}

TEST_CASE("interpretation respects beta-eta equality on samples") {
  // eta: [[\x. a x]] = [[a]]
  CHECK(diagram_equal(interp("\\x. a x", "o -o o"), interp("a", "o -o o")));
  // beta at higher type
  CHECK(diagram_equal(interp("(\\f x. f x) a", "o -o o"), interp("a", "o -o o")));
  CHECK(diagram_equal(interp("(\\x. b x) (a eps)", "o"), interp("b (a eps)", "o")));
}

TEST_CASE("words are interpreted as their labelled wire, up to length 12") {
  for (const std::string& w : all_words("ab", 12)) {
    Diagram d = interp_term(
        typecheck(church_encode_open(w, kSig), base_type(), kSig, Mode::Planar));
    REQUIRE(d.cod == "+-");
    REQUIRE(d.dom == "");
    if (w.empty()) {
      CHECK(d.edges.size() == 1);
    } else {
      REQUIRE(d.edges.size() == 1);
      CHECK(d.edges[0].label == w);
    }
    CHECK(readoff(d) == w);
  }
}

TEST_CASE("eta invariance on random typed terms") {
  std::mt19937 rng(53);
  int done = 0;
  while (done < 150) {
    TypePtr t = lin(random_affine_type(rng, 1), random_affine_type(rng, 1));
    TermPtr m = random_closed_term(t, kSig, rng, 5);
    Judgement j = typecheck(m, t, kSig, Mode::Planar);
    // wrap in an eta-expansion
    TermPtr eta = lam("w", app(m, var("w")));
    Judgement je = typecheck(eta, t, kSig, Mode::Planar);
    CHECK(diagram_equal(interp_term(je), interp_term(j)));
    ++done;
  }
}

TEST_CASE("normal forms shrink the interpretation") {
  std::mt19937 rng(59);
  for (int i = 0; i < 200; ++i) {
    TypePtr t = random_affine_type(rng, 2);
    TermPtr m = random_closed_term(t, kSig, rng, 6);
    Judgement j = typecheck(m, t, kSig, Mode::Planar);
    Judgement jn = typecheck(normalize(j.term), t, kSig, Mode::Planar);
    CHECK(leq(interp_term(jn), interp_term(j)));
  }
}

TEST_CASE("commutative terms interpret into the symmetric category") {
  TypePtr t = parse_type("o -o (o -o o) -o o", Program{});
  Judgement j = typecheck(parse_term("\\x f. f x"), t, kSig, Mode::Commutative);
  Diagram d = interp_term(j);
  CHECK(d.mode == DiagMode::Symmetric);
  CHECK(d.cod == interp_type(t));
  // the planar mirror image denotes the same function shape with wires uncrossed
  Diagram p = interp("\\f x. f x", "(o -o o) -o o -o o");
  CHECK(p.mode == DiagMode::Planar);
  CHECK(p.edges.size() == d.edges.size());
}
