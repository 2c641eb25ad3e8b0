#pragma once

// Coefficient ring Q[lambda, z^-1].
//
// lambda stands for 1/(2 pi sqrt(-1)) and z^-1 for the inverse of the
// Dubrovin parameter.  Both are formal: equality is coefficient-wise and
// nothing is ever evaluated numerically.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "conifold/exact_linalg.hpp"

namespace conifold {

class Scalar {
 public:
  /// (power of lambda, power of z^-1)
  using Monomial = std::pair<int, int>;

  Scalar() = default;
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);               // NOLINT(google-explicit-constructor)
  Scalar(const Integer& v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  template <class T, class U>
  Scalar(const __gmp_expr<T, U>& e) : Scalar(Rational(e)) {}  // NOLINT(google-explicit-constructor)

  static Scalar lambda();
  static Scalar z_inv();
  static Scalar monomial(const Rational& c, int lambda_power, int z_inv_power);

  bool is_zero() const { return terms_.empty(); }
  /// True when the value lies in Q (no lambda, no z^-1).
  bool is_rational() const;
  /// The Q-part; throws InvalidInput unless is_rational().
  Rational to_rational() const;
  Rational coefficient(int lambda_power, int z_inv_power) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Replace z^-1 by lambda, i.e. set z = 2 pi sqrt(-1).
  Scalar substitute_z_by_two_pi_i() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

/// "p/q" for rationals; a Scalar is "p/q", "p/q · lambda", "p/q · z^-1",
/// "p/q · lambda^2 · z^-1", ... joined by " + ".  Zero is "0/1".
std::string format_rational(const Rational& r);
std::string format_scalar(const Scalar& s);

/// Inverse of format_rational; accepts "p/q" and bare integers "p".
Rational parse_rational(std::string_view text);
/// Inverse of format_scalar.
Scalar parse_scalar(std::string_view text);

using ScalarMatrix = Matrix<Scalar>;

ScalarMatrix scale(const IntMatrix& m, const Scalar& s);

}  // namespace conifold
