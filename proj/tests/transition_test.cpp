#include <doctest.h>

#include "conifold/transition.hpp"
#include "support/generators.hpp"

using namespace conifold;
using conifold::testing::Generator;

TEST_CASE("two-node flop presentation validates") {
  ValidationReport r = validate(conifold::testing::two_node_flop());
  CHECK(r.ok());
  CHECK(r.exact_sequence_ok());
  CHECK(r.find(check_names::kOrthogonality).passed);
  CHECK(r.find(check_names::kCountIdentity).passed);
}

TEST_CASE("sixteen nodes with a single relation") {
  TransitionPresentation p = conifold::testing::sixteen_node();
  CHECK(p.mu() == 15);
  CHECK(p.rho() == 1);
  CHECK(rank(p.A) == 15);
  CHECK((p.A.transpose() * p.B).is_zero());
  CHECK(validate(p).ok());
}

TEST_CASE("zero row in A fails only the no-zero-row check") {
  TransitionPresentation p;
  p.k = 2;
  p.A = IntMatrix::from_rows({{1}, {0}});
  p.B = IntMatrix::from_rows({{0}, {1}});
  ValidationReport r = validate(p);
  CHECK(r.find(check_names::kOrthogonality).passed);
  CHECK(r.exact_sequence_ok());
  CHECK_FALSE(r.find(check_names::kFriedman).passed);
  CHECK_FALSE(r.ok());
}

TEST_CASE("orthogonality failure is located") {
  TransitionPresentation p;
  p.k = 2;
  p.A = IntMatrix::from_rows({{1}, {-1}});
  p.B = IntMatrix::from_rows({{1}, {2}});
  ValidationReport r = validate(p);
  const Check& c = r.find(check_names::kOrthogonality);
  CHECK_FALSE(c.passed);
  CHECK(c.detail.find("(1,1)") != std::string::npos);
}

TEST_CASE("mismatched row counts throw") {
  TransitionPresentation p;
  p.k = 3;
  p.A = IntMatrix::from_rows({{1}, {-1}});
  p.B = IntMatrix::from_rows({{1}, {1}});
  CHECK_THROWS_AS(validate(p), DimensionMismatch);
}

TEST_CASE("completion from A") {
  TransitionPresentation p = complete_from_A(2, IntMatrix::from_rows({{1}, {-1}}));
  CHECK(same_column_lattice(p.B, IntMatrix::from_rows({{1}, {1}})));
  TransitionPresentation q = complete_from_A(3, IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(same_column_lattice(q.B, IntMatrix::from_rows({{1}, {1}, {1}})));
  TransitionPresentation e = complete_from_A(1, IntMatrix(1, 0));
  CHECK(e.B == IntMatrix::identity(1));
  CHECK_THROWS_AS(complete_from_A(2, IntMatrix::from_rows({{1, 2}, {1, 2}})), RankDeficient);
}

TEST_CASE("completion from B") {
  TransitionPresentation p = complete_from_B(2, IntMatrix::from_rows({{1}, {1}}));
  CHECK(same_column_lattice(p.A, IntMatrix::from_rows({{1}, {-1}})));
  CHECK(complete_from_B(4, IntMatrix::identity(4)).A.cols() == 0);
}

TEST_CASE("completion round trip on random saturated relations") {
  Generator g(5);
  for (int t = 0; t < 40; ++t) {
    TransitionPresentation p = g.presentation(9, false);
    CHECK(p.mu() + p.rho() == p.k);
    CHECK((p.A.transpose() * p.B).is_zero());
    CHECK(validate(p).exact_sequence_ok());
    TransitionPresentation back = complete_from_B(p.k, p.B);
    CHECK(same_column_lattice(back.A, p.A));
  }
}

TEST_CASE("euler check") {
  TransitionPresentation p = conifold::testing::two_node_flop();
  p.hodge = HodgeData{4, 2, 1, 2};
  EulerReport e = euler_check(p);
  CHECK(e.mu_from_hodge == 1);
  CHECK(e.rho_from_hodge == 1);
  CHECK(e.ok());

  p.hodge = HodgeData{6, 2, 1, 2};
  CHECK_FALSE(euler_check(p).ok());

  p.hodge.reset();
  CHECK_THROWS_AS(euler_check(p), MissingData);

  TransitionPresentation none;
  none.hodge = HodgeData{3, 3, 5, 5};
  CHECK(euler_check(none).ok());
}

TEST_CASE("triple tensor symmetry") {
  TripleTensor t(2);
  t.set_symmetric(0, 0, 1, Rational(3));
  CHECK(t.is_symmetric());
  CHECK(t(1, 0, 0) == 3);
  t(0, 1, 1) = 1;
  CHECK_FALSE(t.is_symmetric());
}
