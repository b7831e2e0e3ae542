#include "pg/axioms.hpp"
#include "pg/ball.hpp"
#include "pg/examples.hpp"

#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

using namespace pg;

namespace {

const std::vector<Pregroup>& six_tables() {
  static const std::vector<Pregroup> tables = {
      make_free(1),
      make_free(2),
      make_group("s3", group_s3()),
      make_group("z4", group_cyclic(4)),
      make_amalgam_cyclic(2, 2, 1),
      make_amalgam_cyclic(4, 4, 2),
  };
  return tables;
}

}  // namespace

TEST_CASE("names round trip") {
  for (Axiom a : all_axioms()) CHECK(axiom_from(axiom_name(a)) == a);
  CHECK(axiom_from("p6'") == Axiom::P6p);
  CHECK(axiom_from("P6P") == Axiom::P6p);
  CHECK(axiom_from("p6prime") == Axiom::P6p);
  CHECK(axiom_from("h0") == Axiom::H0);
  CHECK_THROWS_WITH_AS(axiom_from("bogus"), "unknown axiom tag 'bogus'",
                       std::invalid_argument);
  CHECK(p_axioms().size() == 7);
  CHECK(p_axioms().back() == Axiom::P6p);
}

TEST_CASE("base axioms hold on the stock tables") {
  for (const Pregroup& p : six_tables()) {
    CAPTURE(p.name());
    for (Axiom a : p_axioms()) {
      AxiomVerdict v = check_axiom(p, a);
      CAPTURE(axiom_name(a));
      CHECK(v.holds);
      CHECK(v.witness.empty());
    }
  }
}

TEST_CASE("interleaving axiom verdicts carry replayable witnesses") {
  Pregroup p = make_hnn_slice_klein();
  AxiomVerdict v6 = check_axiom(p, Axiom::P6);
  REQUIRE_FALSE(v6.holds);
  CHECK(v6.witness == std::vector<std::string>{"T", "q", "pt"});
  CHECK(verify_witness(p, Axiom::P6, v6.witness));
  CHECK_FALSE(verify_witness(p, Axiom::P6, {"T", "p", "pt"}));

  AxiomVerdict v6p = check_axiom(p, Axiom::P6p);
  REQUIRE_FALSE(v6p.holds);
  CHECK(v6p.witness == std::vector<std::string>{"qt", "T", "pt"});
  CHECK(verify_witness(p, Axiom::P6p, v6p.witness));
}

TEST_CASE("power and torsion conditions fail on the glued table") {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  for (Axiom a : {Axiom::A1, Axiom::A3, Axiom::A4}) {
    AxiomVerdict v = check_axiom(p, a);
    CAPTURE(axiom_name(a));
    REQUIRE_FALSE(v.holds);
    CHECK_FALSE(v.witness.empty());
    CHECK(verify_witness(p, a, v.witness));
  }
  CHECK(check_axiom(p, Axiom::A5).holds);
}

TEST_CASE("group tables: all but the torsion condition hold vacuously") {
  Pregroup p = make_group("s3", group_s3());
  AxiomParams params;
  params.a2_max_len = 3;
  params.a2_max_exp = 4;
  for (Axiom a : {Axiom::A1, Axiom::A2, Axiom::A4, Axiom::A5}) {
    AxiomVerdict v = check_axiom(p, a, params);
    CAPTURE(axiom_name(a));
    CHECK(v.holds);
  }
  // every nontrivial element of a finite group is torsion in B_P = P
  AxiomVerdict v3 = check_axiom(p, Axiom::A3);
  REQUIRE_FALSE(v3.holds);
  CHECK(verify_witness(p, Axiom::A3, v3.witness));
}

TEST_CASE("bounded power-sequence scan") {
  Pregroup am = make_amalgam_cyclic(4, 4, 2);
  CHECK_THROWS_AS(check_axiom(am, Axiom::A2), std::invalid_argument);

  AxiomParams params;
  params.a2_max_len = 3;
  params.a2_max_exp = 4;
  AxiomVerdict bad = check_axiom(am, Axiom::A2, params);
  REQUIRE_FALSE(bad.holds);
  CHECK(verify_witness(am, Axiom::A2, bad.witness));
  CHECK(bad.note.find("bounded heuristic") != std::string::npos);

  AxiomVerdict good = check_axiom(make_free(2), Axiom::A2, params);
  CHECK(good.holds);
  CHECK(good.note.find("bounded heuristic") != std::string::npos);
}

TEST_CASE("unit-ball finiteness report") {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  AxiomVerdict v = check_axiom(p, Axiom::H0);
  CHECK(v.holds);
  CHECK(v.note.find("|B_P| = 2") != std::string::npos);
  CHECK(v.note.find("C0") == std::string::npos);

  Universe u(p);
  GenSet s = GenSet::of_elements(u, {*p.element("a"), *p.element("b")});
  Ball b = Ball::build(u, s, 3);
  AxiomParams params;
  params.ball = &b;
  AxiomVerdict vb = check_axiom(p, Axiom::H0, params);
  CHECK(vb.holds);
  CHECK(vb.note.find("C0 = 2") != std::string::npos);
}
