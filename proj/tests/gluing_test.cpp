#include <doctest.h>

#include "conifold/gluing.hpp"
#include "support/generators.hpp"

using namespace conifold;

TEST_CASE("trivial connection") {
  LogConnection c = trivial_log_connection(1);
  REQUIRE(c.residues.size() == 1);
  CHECK(c.residues[0](1, 0) == Scalar::z_inv());
  CHECK(c.residues[0](0, 0).is_zero());
  CHECK(c.residues[0](0, 1).is_zero());

  LogConnection two = trivial_log_connection(2);
  REQUIRE(two.residues.size() == 2);
  CHECK((two.residues[0] * two.residues[1]).is_zero());
  CHECK(two.residues[1](3, 1) == Scalar::z_inv());
}

TEST_CASE("induced connections") {
  LogConnection b = induce_via_embedding(2, IntMatrix::from_rows({{1}, {1}}));
  LogConnection a = induce_via_embedding(2, IntMatrix::from_rows({{1}, {-1}}));
  for (const LogConnection* c : {&a, &b}) {
    REQUIRE(c->residues.size() == 2);
    for (const auto& r : c->residues) {
      CHECK(r(1, 0) == Scalar::z_inv());
      CHECK(r(0, 0).is_zero());
      CHECK((r * r).is_zero());
    }
  }
  LogConnection id = induce_via_embedding(3, IntMatrix::identity(3));
  LogConnection triv = trivial_log_connection(3);
  CHECK(id.residues == triv.residues);
  CHECK(id.forms == triv.forms);
  CHECK_THROWS_AS(induce_via_embedding(2, IntMatrix::from_rows({{1, 2}, {1, 2}})), RankDeficient);
}

TEST_CASE("glue verdicts on the named presentations") {
  for (const auto& p : conifold::testing::named_presentations()) {
    GlueReport r = glue_check(p);
    CHECK(r.dubrovin.passed);
    CHECK(r.gauss_manin.passed);
    CHECK(r.orthogonal);
    CHECK(r.invertible);
    CHECK(r.ok());
  }
  GlueReport flop = glue_check(conifold::testing::two_node_flop());
  CHECK(abs(flop.determinant) == 2);
  CHECK(flop.b_side.target == "v");
  CHECK(flop.a_side.target == "w");
  CHECK(flop.a_side.z_is_two_pi_i);
}

TEST_CASE("tampered B is caught and located") {
  TransitionPresentation p = conifold::testing::two_node_flop();
  p.B = IntMatrix::from_rows({{1}, {2}});
  GlueReport r = glue_check(p);
  CHECK_FALSE(r.dubrovin.passed);
  REQUIRE_FALSE(r.dubrovin.mismatches.empty());
  CHECK_FALSE(r.orthogonal);
  REQUIRE(r.orthogonality_violations.size() == 1);
  CHECK(r.orthogonality_violations[0].find("(1,1)") != std::string::npos);
  CHECK_FALSE(r.ok());
}

TEST_CASE("shape errors propagate") {
  TransitionPresentation p = conifold::testing::two_node_flop();
  p.B = IntMatrix::from_rows({{1}});
  CHECK_THROWS_AS(glue_check(p), DimensionMismatch);
}
