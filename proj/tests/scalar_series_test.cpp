#include <doctest.h>

#include "conifold/log_connection.hpp"
#include "conifold/log_series.hpp"
#include "conifold/series.hpp"

using namespace conifold;

TEST_CASE("scalar formatting") {
  CHECK(format_scalar(Scalar()) == "0/1");
  CHECK(format_scalar(Scalar(2) * Scalar::z_inv()) == "2/1 · z^-1");
  CHECK(format_scalar(Scalar::monomial(Rational(-3, 4), 2, 1)) == "-3/4 · lambda^2 · z^-1");
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
}

TEST_CASE("scalar parse is the inverse of format") {
  Scalar s = Scalar(Rational(1, 2)) + Scalar::monomial(Rational(5), 1, 0) + Scalar::monomial(Rational(-2, 7), 1, 3);
  CHECK(parse_scalar(format_scalar(s)) == s);
  CHECK(parse_scalar("0/1").is_zero());
}

TEST_CASE("z is set to two pi i") {
  Scalar s = Scalar(3) * Scalar::z_inv() + Scalar::lambda();
  CHECK(s.substitute_z_by_two_pi_i() == Scalar(4) * Scalar::lambda());
  CHECK_FALSE(s.is_rational());
  CHECK_THROWS_AS(s.to_rational(), InvalidInput);
}

TEST_CASE("truncated series respect each group bound") {
  RingPtr ring = make_ring({"q", "u"}, {0, 1}, {1, 2});
  TruncatedSeries q = TruncatedSeries::variable(ring, 0), u = TruncatedSeries::variable(ring, 1);
  TruncatedSeries e = u.exp();
  CHECK(e.coefficient({0, 2}) == Scalar(Rational(1, 2)));
  CHECK(e.coefficient({0, 3}).is_zero());
  CHECK((q * q).is_zero());
  CHECK((q * e).coefficient({1, 2}) == Scalar(Rational(1, 2)));
  CHECK(e.derivative(1).coefficient({0, 1}) == Scalar(1));
  CHECK((q * u).restrict_to_zero({0}).is_zero());
}

TEST_CASE("log series") {
  LogSeries::Forms forms = LogSeries::make_forms(IntMatrix::from_rows({{1}, {-1}}));
  LogSeries wlog = LogSeries::w_term(forms, 0, 1, true);
  CHECK(wlog.boundary_value().is_zero());
  LogSeries d = wlog.derivative(0);
  // d/dr (w log w) = log w + 1
  CHECK(d.holomorphic_part() == LogSeries::constant(forms, Scalar(1)));
  CHECK_THROWS_AS(d.boundary_value(), InvalidInput);
  LogSeries pole = LogSeries::w_term(forms, 1, -1, false);
  std::vector<Rational> pt{Rational(2)};
  CHECK(pole.evaluate(pt) == Scalar(Rational(-1, 2)));
  CHECK_THROWS(wlog.evaluate(pt));
  CHECK_THROWS_AS(wlog * pole, InvalidInput);
  CHECK_THROWS_AS(wlog * wlog, InvalidInput);
  CHECK(LogSeries::w_term(forms, 0, 0, false) == LogSeries::constant(forms, Scalar(1)));
}

TEST_CASE("merging proportional hyperplanes") {
  LogConnection c;
  c.base_dim = 1;
  c.half_rank = 1;
  c.forms = {IntVector{1}, IntVector{-2}};
  ScalarMatrix r(2, 2);
  r(1, 0) = Scalar::z_inv();
  c.residues = {r, r};
  LogConnection m = c.merged();
  REQUIRE(m.forms.size() == 1);
  CHECK(m.forms[0] == IntVector{1});
  CHECK(m.residues[0](1, 0) == Scalar(2) * Scalar::z_inv());
}
