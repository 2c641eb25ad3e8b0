#pragma once

// Special geometry in the chart x_0 != 0: a weight-2 homogeneous
// prepotential u(x_0..x_h) determines the flat connection on the frame
//   tau_0 = Omega, tau_j = d_j Omega, tau^j, tau^0.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conifold/exact_linalg.hpp"

namespace conifold {

/// Laurent polynomial over Q.  Exponent vectors are padded with zeros, so a
/// constant built from a long combines with polynomials in any number of
/// variables.
class LaurentPolynomial {
 public:
  using Exponent = std::vector<int>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);              // NOLINT(google-explicit-constructor)
  LaurentPolynomial(const Rational& c);   // NOLINT(google-explicit-constructor)

  static LaurentPolynomial variable(std::size_t index, std::size_t nvars);
  static LaurentPolynomial monomial(const Rational& c, Exponent e);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t variable_count() const { return nvars_; }

  LaurentPolynomial derivative(std::size_t var) const;
  /// Common total degree, or nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  Rational evaluate(std::span<const Rational> point) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void add_term(Exponent e, const Rational& c);
  void pad_to(std::size_t n);

  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

std::string to_string(const LaurentPolynomial& p);

using LaurentMatrix = Matrix<LaurentPolynomial>;

/// Weight-2 homogeneous potential in x_0..x_h.
class Prepotential {
 public:
  /// Throws InvalidInput unless u is zero or homogeneous of degree 2.
  Prepotential(LaurentPolynomial u, std::size_t h);

  const LaurentPolynomial& u() const { return u_; }
  std::size_t h() const { return h_; }
  /// 2u = sum_p x_p d_p u.
  bool euler_identity_holds() const;

 private:
  LaurentPolynomial u_;
  std::size_t h_;
};

/// Frame order: tau_0, tau_1..tau_h, tau^1..tau^h, tau^0.  Entry (i, j) of
/// directions[p-1] is the coefficient of frame element i in
/// nabla_{d/dx_p}(frame element j), p = 1..h.
struct BryantGriffithsConnection {
  std::size_t h = 0;
  std::vector<LaurentMatrix> directions;
  std::vector<LaurentMatrix> curvature;  // F_pq for 1 <= p < q <= h
  bool flat = false;
  bool euler_relation = false;           // x_0 u_pj0 + sum_m x_m u_pjm = 0
  bool frame_consistent = false;         // the tables differentiate the explicit frame

  std::size_t tau_lower(std::size_t j) const { return j; }          // tau_0..tau_h
  std::size_t tau_upper(std::size_t j) const { return j == 0 ? 2 * h + 1 : h + j; }
};

BryantGriffithsConnection bryant_griffiths_connection(const Prepotential& u);

/// Explicit frame in cocycle coordinates (alpha^*_0..alpha^*_h,
/// beta^*_0..beta^*_h), same order as the connection tables.
std::vector<std::vector<LaurentPolynomial>> bryant_griffiths_frame(const Prepotential& u);

/// 1/2 sum_p x_p u_p.
Rational prepotential_from_periods(std::span<const Rational> x, std::span<const Rational> u_p);

}  // namespace conifold
