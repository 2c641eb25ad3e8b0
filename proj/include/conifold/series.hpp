#pragma once

// Truncated multivariate power series over Q[lambda, z^-1].
//
// Variables are split into groups (Novikov symbols, deformation
// coordinates, ...).  Each group carries its own bound on total degree and a
// term survives only if it respects every bound.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

struct SeriesRing {
  std::vector<std::string> names;
  std::vector<std::size_t> group;  // group index of each variable
  std::vector<int> bounds;         // total-degree bound of each group

  std::size_t size() const { return names.size(); }
  std::size_t index_of(const std::string& name) const;
  bool admits(const std::vector<int>& exponent) const;

  friend bool operator==(const SeriesRing&, const SeriesRing&) = default;
};

using RingPtr = std::shared_ptr<const SeriesRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<std::size_t> group, std::vector<int> bounds);
/// One group holding all variables.
RingPtr make_ring(std::vector<std::string> names, int bound);

class TruncatedSeries {
 public:
  using Exponent = std::vector<int>;

  /// The zero series, compatible with every ring.
  TruncatedSeries() = default;
  explicit TruncatedSeries(RingPtr ring) : ring_(std::move(ring)) {}

  static TruncatedSeries constant(RingPtr ring, const Scalar& c);
  static TruncatedSeries variable(RingPtr ring, std::size_t index);
  static TruncatedSeries monomial(RingPtr ring, Exponent exponent, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Exponent& e) const;
  Scalar constant_term() const;

  TruncatedSeries derivative(std::size_t var) const;
  /// x d/dx: multiplies each term by its exponent in var.
  TruncatedSeries euler_derivative(std::size_t var) const;
  /// exp of a series with zero constant term.
  TruncatedSeries exp() const;
  /// Set the listed variables to zero.
  TruncatedSeries restrict_to_zero(const std::vector<std::size_t>& vars) const;
  TruncatedSeries map_coefficients(Scalar (*f)(const Scalar&)) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Scalar& c);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }
  friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries a) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.terms_ == b.terms_; }

  // Matrix<T> compares entries against T(0).
  explicit TruncatedSeries(long zero);

 private:
  void add_term(const Exponent& e, const Scalar& c);
  void adopt_ring(const RingPtr& other);

  RingPtr ring_;
  std::map<Exponent, Scalar> terms_;
};

using SeriesMatrix = Matrix<TruncatedSeries>;

std::string to_string(const TruncatedSeries& s);

}  // namespace conifold
