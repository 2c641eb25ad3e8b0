#include <doctest.h>

#include "conifold/bryant_griffiths.hpp"
#include "support/generators.hpp"

using namespace conifold;
using conifold::testing::Generator;

namespace {

LaurentPolynomial mono(const Rational& c, std::initializer_list<int> e) { return LaurentPolynomial::monomial(c, e); }

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPolynomial x0 = LaurentPolynomial::variable(0, 2), x1 = LaurentPolynomial::variable(1, 2);
  LaurentPolynomial u = x1 * x1 * x1 * mono(1, {-1, 0});
  CHECK(u.homogeneous_degree() == 2);
  CHECK(u.derivative(0) == mono(-1, {-2, 3}));
  CHECK((x0 + x1 - x0) == x1);
  std::vector<Rational> point{Rational(2), Rational(3)};
  CHECK(u.evaluate(point) == Rational(27, 2));
  CHECK(to_string(u) == "1/1*x0^-1*x1^3");
  CHECK_FALSE((x0 + x1 * x1).homogeneous_degree().has_value());
}

TEST_CASE("cubic over x0") {
  Prepotential u(mono(1, {-1, 3}), 1);
  CHECK(u.euler_identity_holds());
  BryantGriffithsConnection c = bryant_griffiths_connection(u);
  CHECK(c.directions[0](c.tau_upper(1), c.tau_lower(1)) == mono(6, {-1, 0}));
  CHECK(c.directions[0](c.tau_lower(1), c.tau_lower(0)) == LaurentPolynomial(1));
  CHECK(c.directions[0](c.tau_upper(0), c.tau_upper(1)) == LaurentPolynomial(1));
  CHECK(c.flat);
  CHECK(c.euler_relation);
  CHECK(c.frame_consistent);
}

TEST_CASE("zero potential") {
  BryantGriffithsConnection c = bryant_griffiths_connection(Prepotential(LaurentPolynomial(), 2));
  CHECK(c.flat);
  CHECK(c.euler_relation);
  for (const auto& g : c.directions)
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = i; j < g.cols(); ++j) CHECK(g(i, j).is_zero());
}

TEST_CASE("non-homogeneous potential is rejected") {
  CHECK_THROWS_AS(Prepotential(mono(1, {0, 3}), 1), InvalidInput);
  CHECK_THROWS_AS(Prepotential(mono(1, {0, 1, 1}), 1), DimensionMismatch);
}

TEST_CASE("random weight-two potentials give flat connections") {
  Generator g(6);
  for (int t = 0; t < 15; ++t) {
    auto h = static_cast<std::size_t>(g.uniform(1, 3));
    Prepotential u(g.weight_two_potential(h), h);
    CHECK(u.euler_identity_holds());
    BryantGriffithsConnection c = bryant_griffiths_connection(u);
    CHECK(c.flat);
    CHECK(c.euler_relation);
    CHECK(c.frame_consistent);
  }
}

TEST_CASE("prepotential from periods") {
  std::vector<Rational> x{Rational(1), Rational(0)}, u{Rational(2), Rational(0)};
  CHECK(prepotential_from_periods(x, u) == 1);
  std::vector<Rational> zeros(3);
  CHECK(prepotential_from_periods(zeros, zeros) == 0);
  CHECK_THROWS_AS(prepotential_from_periods(x, zeros), DimensionMismatch);
  // Euler: for u weight two, 1/2 sum x_p u_p = u.
  LaurentPolynomial pot = mono(Rational(3), {-1, 3}) + mono(Rational(-1, 2), {0, 2});
  std::vector<Rational> pt{Rational(2), Rational(5)};
  std::vector<Rational> grad{pot.derivative(0).evaluate(pt), pot.derivative(1).evaluate(pt)};
  CHECK(prepotential_from_periods(pt, grad) == pot.evaluate(pt));
}
