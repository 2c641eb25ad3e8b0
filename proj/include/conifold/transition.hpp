#pragma once

// Combinatorial skeleton of a conifold transition X -> Y with k nodes:
// the relation matrix A (k x mu) of the exceptional curves and B (k x rho)
// of the vanishing spheres, plus optional intersection and Hodge data.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conifold/exact_linalg.hpp"

namespace conifold {

/// Symmetric 3-tensor on indices 0..n-1.
class TripleTensor {
 public:
  TripleTensor() = default;
  explicit TripleTensor(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Rational& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * n_ + b) * n_ + c]; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  /// Writes the value at every permutation of (a, b, c).
  void set_symmetric(std::size_t a, std::size_t b, std::size_t c, const Rational& v);
  bool is_symmetric() const;

  friend bool operator==(const TripleTensor&, const TripleTensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

struct HodgeData {
  long h3_x = 0;
  long h3_y = 0;
  long h2_x = 0;
  long h2_y = 0;
};

struct TransitionPresentation {
  std::size_t k = 0;
  IntMatrix A;  // k x mu
  IntMatrix B;  // k x rho
  std::optional<TripleTensor> triple;
  std::optional<HodgeData> hodge;

  std::size_t mu() const { return A.cols(); }
  std::size_t rho() const { return B.cols(); }
  /// Classical intersection numbers, zero when absent.
  TripleTensor triple_or_zero() const;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // locates the violation when !passed
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const;
  /// Orthogonality, mu + rho = k, ranks and the two saturated-kernel identities.
  bool exact_sequence_ok() const;
  const Check& find(const std::string& name) const;
};

namespace check_names {
inline constexpr const char* kOrthogonality = "orthogonality";
inline constexpr const char* kCountIdentity = "mu_plus_rho_equals_k";
inline constexpr const char* kRankA = "rank_A";
inline constexpr const char* kRankB = "rank_B";
inline constexpr const char* kBIsKernelOfAt = "B_spans_saturated_ker_At";
inline constexpr const char* kAIsKernelOfBt = "A_spans_saturated_ker_Bt";
inline constexpr const char* kTripleSymmetric = "triple_symmetric";
inline constexpr const char* kFriedman = "friedman_no_zero_row_in_A";
inline constexpr const char* kSty = "sty_no_zero_row_in_B";
}  // namespace check_names

/// Throws DimensionMismatch when A or B does not have k rows.
ValidationReport validate(const TransitionPresentation& p);

/// B := saturated kernel of A^t in Hermite form.  Throws RankDeficient if
/// the columns of A are dependent.
TransitionPresentation complete_from_A(std::size_t k, const IntMatrix& A);
TransitionPresentation complete_from_B(std::size_t k, const IntMatrix& B);

struct EulerReport {
  long mu_from_hodge = 0;
  long rho_from_hodge = 0;
  bool mu_consistent = false;
  bool rho_consistent = false;
  bool k_consistent = false;

  bool ok() const { return mu_consistent && rho_consistent && k_consistent; }
};

/// mu = (h3X - h3Y)/2 and rho = h2Y - h2X against the matrix shapes.
/// Throws MissingData when the Hodge data are unset.
EulerReport euler_check(const TransitionPresentation& p);

}  // namespace conifold
