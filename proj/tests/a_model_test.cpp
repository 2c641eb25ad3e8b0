#include <doctest.h>

#include "conifold/a_model.hpp"
#include "support/generators.hpp"

using namespace conifold;
using conifold::testing::Generator;

namespace {

TransitionPresentation with_b(std::size_t k, const IntMatrix& b) {
  TransitionPresentation p;
  p.k = k;
  p.A = IntMatrix(k, 0);
  p.B = b;
  return p;
}

}  // namespace

TEST_CASE("geometric series") {
  TruncatedSeries f = f_series(3);
  CHECK(f.size() == 3);
  for (int d = 1; d <= 3; ++d) CHECK(f.coefficient({d}) == Scalar(1));
  CHECK(f_series(1).size() == 1);
}

TEST_CASE("multiple cover series") {
  TruncatedSeries s = multiple_cover_series(3);
  CHECK(s.coefficient({1}) == Scalar(1));
  CHECK(s.coefficient({2}) == Scalar(Rational(1, 8)));
  CHECK(s.coefficient({3}) == Scalar(Rational(1, 27)));
  CHECK(multiple_cover_series(1).size() == 1);
  // Three Q d/dQ derivatives give back the geometric series.
  TruncatedSeries t = s.euler_derivative(0).euler_derivative(0).euler_derivative(0);
  for (int d = 1; d <= 3; ++d) CHECK(t.coefficient({d}) == f_series(3).coefficient({d}));
}

TEST_CASE("structural coefficient of the two-node flop") {
  ExtremalModel m(conifold::testing::two_node_flop(), 2);
  TruncatedSeries c = structural_coefficient(m, 0, 0, 0);
  // f(q1 e^u) + f(q2 e^u) through degree 2 in q and in u.
  CHECK(c.coefficient({1, 0, 0}) == Scalar(1));
  CHECK(c.coefficient({0, 1, 1}) == Scalar(1));
  CHECK(c.coefficient({1, 0, 2}) == Scalar(Rational(1, 2)));
  CHECK(c.coefficient({2, 0, 0}) == Scalar(1));
  CHECK(c.coefficient({0, 2, 1}) == Scalar(2));
  CHECK(c.coefficient({2, 0, 2}) == Scalar(2));
  CHECK(c.coefficient({1, 1, 0}).is_zero());
  CHECK(c.constant_term().is_zero());
  CHECK(c.size() == 12);
}

TEST_CASE("classical term only") {
  TransitionPresentation p = with_b(1, IntMatrix::from_rows({{0}}));
  TripleTensor t(1);
  t(0, 0, 0) = 6;
  p.triple = t;
  TruncatedSeries c = structural_coefficient(ExtremalModel(p, 3), 0, 0, 0);
  CHECK(c.size() == 1);
  CHECK(c.constant_term() == Scalar(6));
}

TEST_CASE("validated model rejects a broken presentation") {
  TransitionPresentation p = conifold::testing::two_node_flop();
  p.B = IntMatrix::from_rows({{1}, {2}});
  CHECK_NOTHROW(ExtremalModel(p, 1));
  CHECK_THROWS(ExtremalModel::validated(p, 1));
  p.B = IntMatrix::from_rows({{1}});
  CHECK_THROWS_AS(ExtremalModel(p, 1), DimensionMismatch);
}

TEST_CASE("dubrovin residues") {
  ExtremalModel flop(conifold::testing::two_node_flop(), 1);
  CHECK(dubrovin_residue(flop, 0)(0, 0) == Scalar::z_inv());

  ExtremalModel m(with_b(2, IntMatrix::from_rows({{2, -1}, {0, 0}})), 1);
  ScalarMatrix r = dubrovin_residue(m, 0);
  CHECK(r == scale(IntMatrix::from_rows({{4, -2}, {-2, 1}}), Scalar::z_inv()));
  CHECK(dubrovin_residue(m, 1).is_zero());
}

TEST_CASE("monodromy blocks") {
  ExtremalModel flop(conifold::testing::two_node_flop(), 1);
  CHECK(monodromy_block(flop, 0)(0, 0) == Scalar(2) * Scalar::z_inv());
  CHECK(residue_oracle(flop, 0) == monodromy_block(flop, 0));

  ExtremalModel m(with_b(3, IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}})), 1);
  CHECK(monodromy_block(m, 0) == scale(IntMatrix::from_rows({{2, 1}, {1, 1}}), Scalar::z_inv()));

  ExtremalModel z(with_b(2, IntMatrix::from_rows({{1, 0}, {1, 0}})), 1);
  CHECK(monodromy_block(z, 1).is_zero());
  CHECK(residue_oracle(z, 1).is_zero());
}

TEST_CASE("series residue agrees with the block on random B") {
  Generator g(11);
  for (int t = 0; t < 15; ++t) {
    auto k = static_cast<std::size_t>(g.uniform(1, 4));
    auto rho = static_cast<std::size_t>(g.uniform(1, 3));
    ExtremalModel m(with_b(k, g.matrix(k, rho, -2, 2)), 1);
    for (std::size_t l = 0; l < rho; ++l) CHECK(residue_oracle(m, l) == monodromy_block(m, l));
  }
}

TEST_CASE("laurent residue of the geometric series") {
  CHECK(laurent_residue_of_f(Rational(1)) == -1);
  CHECK(laurent_residue_of_f(Rational(2)) == Rational(-1, 2));
  CHECK(laurent_residue_of_f(Rational(-3)) == Rational(1, 3));
}

TEST_CASE("dubrovin connection is flat") {
  for (const auto& p : {conifold::testing::two_node_flop(), conifold::testing::three_node()}) {
    ExtremalModel m(p, 3);
    DubrovinConnection c = dubrovin_connection(m);
    CHECK(c.u_directions.size() == p.rho());
    for (const auto& f : curvature(c)) CHECK(f.is_zero());
  }
  ExtremalModel two(with_b(3, IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}})), 2);
  MixedConstants mixed(1, 2);
  mixed.set(0, 0, 1, Rational(3));
  mixed.set(0, 1, 1, Rational(-1));
  DubrovinConnection c = dubrovin_connection(two, mixed);
  CHECK(c.x_directions.size() == 1);
  for (const auto& f : curvature(c)) CHECK(f.is_zero());

  ExtremalModel empty(with_b(1, IntMatrix(1, 0)), 1);
  CHECK(dubrovin_connection(empty).u_directions.empty());
}

TEST_CASE("monodromy nilpotents") {
  ExtremalModel m(with_b(3, IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}})), 1);
  const std::size_t rho = m.rho();
  std::vector<ScalarMatrix> ops;
  for (std::size_t l = 0; l < rho; ++l) ops.push_back(as_operator(monodromy_block(m, l)));
  for (const auto& a : ops)
    for (const auto& b : ops) CHECK((a * b).is_zero());
  // Invariant subspace of all N_l is exactly the dual block when B has no zero row.
  ScalarMatrix stacked(ops.size() * 2 * rho, 2 * rho);
  for (std::size_t l = 0; l < ops.size(); ++l)
    for (std::size_t i = 0; i < 2 * rho; ++i)
      for (std::size_t j = 0; j < 2 * rho; ++j) stacked(l * 2 * rho + i, j) = ops[l](i, j);
  for (std::size_t j = 0; j < rho; ++j) {
    bool killed = true;
    for (std::size_t i = 0; i < stacked.rows(); ++i) killed = killed && stacked(i, j).is_zero();
    CHECK_FALSE(killed);
  }
  for (std::size_t j = rho; j < 2 * rho; ++j)
    for (std::size_t i = 0; i < stacked.rows(); ++i) CHECK(stacked(i, j).is_zero());
}

TEST_CASE("residues are symmetric under relabelling the nodes") {
  IntMatrix b = IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
  IntMatrix perm = IntMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  ExtremalModel m(with_b(3, b), 1);
  ExtremalModel n(with_b(3, perm * b), 1);
  for (std::size_t l = 0; l < 2; ++l) CHECK(monodromy_block(m, l) == monodromy_block(n, l));
  CHECK(dubrovin_residue(m, 0) == dubrovin_residue(n, 1));
}

TEST_CASE("novikov reduction") {
  NovikovLattice flop(IntMatrix::from_rows({{1}, {-1}}), 0);
  CHECK(flop.canonical_length() == 1);
  IntVector a = novikov_reduce(flop, IntVector{2, 3});
  CHECK(abs(a[0]) == 5);
  CHECK(flop.equivalent(IntVector{1, 0}, IntVector{0, 1}));
  CHECK(novikov_reduce(flop, IntVector{4, -4}) == IntVector{0});

  NovikovLattice none(IntMatrix(2, 0), 1);
  CHECK(none.reduce(IntVector{2, 3, 1}) == (IntVector{2, 3, 1}));
  CHECK_THROWS_AS(none.reduce(IntVector{1}), DimensionMismatch);
}

TEST_CASE("pure extremal transform") {
  ExtremalModel m(conifold::testing::two_node_flop(), 2);
  TransformResult r = transform_prepotential(m, {}, TransformOptions{});
  REQUIRE(r.classes.size() == 2);
  std::vector<Rational> values;
  for (const auto& [cls, n] : r.classes) values.push_back(n);
  std::sort(values.begin(), values.end());
  CHECK(values[0] == Rational(1, 4));
  CHECK(values[1] == 2);
}

TEST_CASE("an X class away from the extremal ray passes through") {
  ExtremalModel m(conifold::testing::two_node_flop(), 2);
  TransformOptions opt;
  opt.base_count = 1;
  std::vector<GwEntry> fx = {{IntVector{3}, Rational(5)}};
  TransformResult r = transform_prepotential(m, fx, opt);
  CHECK(r.classes.size() == 3);
  int fives = 0;
  for (const auto& [cls, n] : r.classes) fives += n == 5 ? 1 : 0;
  CHECK(fives == 1);
  CHECK(restrict_prepotential(m, [&] {
          std::vector<GwEntry> fy;
          for (const auto& [cls, n] : r.classes) fy.push_back({cls, n});
          return fy;
        }(), opt) == fx);
}
