#pragma once

// Extremal genus-0 A-model on H^2(Y)/H^2(X).
//
// The extremal potential is E(u) = (classical cubic) + sum_i sum_d q_i^d
// e^{d v_i} / d^3 with v_i = sum_p b_ip u^p.  Series live in a ring with two
// variable groups: Novikov symbols q_1..q_k and deformation coordinates
// u_1..u_rho, each truncated at the model order.  All indices are 0-based.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "conifold/scalar.hpp"
#include "conifold/series.hpp"
#include "conifold/transition.hpp"

namespace conifold {

/// f(q) = q + q^2 + ... + q^order in the single variable "q".
TruncatedSeries f_series(int order);

/// sum_{d=1..order} Q^d / d^3 in the single variable "Q", where Q stands for
/// q^[C] e^{(C.t)}.  Q d/dQ is then the derivative along the curve direction.
TruncatedSeries multiple_cover_series(int order);

class ExtremalModel {
 public:
  /// Checks only shapes (k rows, triple dimension).  The a-model formulas
  /// depend on B and the classical tensor alone.
  ExtremalModel(TransitionPresentation presentation, int order);

  /// As above, and additionally requires validate(presentation).ok().
  static ExtremalModel validated(TransitionPresentation presentation, int order);

  const TransitionPresentation& presentation() const { return p_; }
  const IntMatrix& B() const { return p_.B; }
  std::size_t k() const { return p_.k; }
  std::size_t rho() const { return p_.rho(); }
  int order() const { return order_; }
  const RingPtr& ring() const { return ring_; }

  std::size_t q_var(std::size_t node) const { return node; }
  std::size_t u_var(std::size_t l) const { return p_.k + l; }

  /// v_i = sum_p b_ip u^p as a series.
  TruncatedSeries v(std::size_t node) const;
  /// f(q_i exp v_i) truncated in both variable groups.
  const TruncatedSeries& node_series(std::size_t node) const { return node_series_.at(node); }

 private:
  TransitionPresentation p_;
  TripleTensor triple_;
  int order_;
  RingPtr ring_;
  std::vector<TruncatedSeries> node_series_;

  friend TruncatedSeries structural_coefficient(const ExtremalModel&, std::size_t, std::size_t, std::size_t);
};

/// C_lmn(u) = (T_l.T_m.T_n) + sum_i b_il b_im b_in f(q_i exp v_i).
TruncatedSeries structural_coefficient(const ExtremalModel& model, std::size_t l, std::size_t m, std::size_t n);

/// Caller-supplied constants C_{eps m n} (symmetric in m, n) coupling the
/// extremal block to H^2(X).  Defaults to no X directions.
class MixedConstants {
 public:
  MixedConstants() = default;
  MixedConstants(std::size_t x_dim, std::size_t rho) : x_dim_(x_dim), rho_(rho), data_(x_dim * rho * rho) {}

  std::size_t x_dim() const { return x_dim_; }
  std::size_t rho() const { return rho_; }
  const Rational& operator()(std::size_t eps, std::size_t m, std::size_t n) const {
    return data_[(eps * rho_ + m) * rho_ + n];
  }
  void set(std::size_t eps, std::size_t m, std::size_t n, const Rational& v);

 private:
  std::size_t x_dim_ = 0;
  std::size_t rho_ = 0;
  std::vector<Rational> data_;
};

/// Connection matrices on the frame
///   T_1..T_rho, T^1..T^rho, T^0, Tbar^1..Tbar^e.
/// Entry (i, j) of a direction's matrix is the coefficient of frame
/// element i in nabla(frame element j).
struct DubrovinConnection {
  std::size_t rho = 0;
  std::size_t x_dim = 0;
  RingPtr ring;
  std::vector<SeriesMatrix> u_directions;  // d/du^l
  std::vector<SeriesMatrix> x_directions;  // d/ds^eps

  std::size_t frame_size() const { return 2 * rho + 1 + x_dim; }
  std::size_t primal(std::size_t m) const { return m; }
  std::size_t dual(std::size_t n) const { return rho + n; }
  std::size_t point() const { return 2 * rho; }
  std::size_t x_dual(std::size_t eps) const { return 2 * rho + 1 + eps; }
};

DubrovinConnection dubrovin_connection(const ExtremalModel& model, const MixedConstants& mixed = {});

/// Curvature components F_ab = d_a G_b - d_b G_a + [G_a, G_b] for every
/// ordered pair a < b of directions (u-directions first, then X directions).
std::vector<SeriesMatrix> curvature(const DubrovinConnection& connection);

/// rho x rho residue block along v_i = 0: (1/z) b_im b_in.
ScalarMatrix dubrovin_residue(const ExtremalModel& model, std::size_t node);

/// (1/z) B_l^t B_l, with B_l the rows of B having b_il != 0.
ScalarMatrix monodromy_block(const ExtremalModel& model, std::size_t l);

/// Residue along u^l -> 0 read off the structural-coefficient series and
/// the Laurent expansion of f(e^t) at t = 0.  Cross-check for
/// monodromy_block.
ScalarMatrix residue_oracle(const ExtremalModel& model, std::size_t l);

/// Coefficient of t^-1 in f(e^{c t}) = e^{ct} / (1 - e^{ct}), c != 0.
Rational laurent_residue_of_f(const Rational& c);

/// Nilpotent operator on T_1..T_rho, T^1..T^rho sending T_m to
/// sum_n block(m, n) T^n.
ScalarMatrix as_operator(const ScalarMatrix& block);

/// Curve classes: generator exponents over [C_1]..[C_k] followed by
/// base-class exponents over a lifted basis of H_2(X).  Two vectors
/// represent the same class iff they differ by an element of sat(im A).
class NovikovLattice {
 public:
  NovikovLattice(const IntMatrix& A, std::size_t base_count);

  std::size_t generator_count() const { return A_.rows(); }
  std::size_t base_count() const { return base_; }
  std::size_t relation_rank() const { return rank_; }
  std::size_t canonical_length() const { return A_.rows() - rank_ + base_; }

  /// Canonical representative; throws DimensionMismatch on a bad length.
  IntVector reduce(std::span<const Integer> exponent) const;
  bool equivalent(std::span<const Integer> a, std::span<const Integer> b) const;

 private:
  IntMatrix A_;
  IntMatrix U_;  // from the Smith form of A
  std::size_t rank_ = 0;
  std::size_t base_ = 0;
};

IntVector novikov_reduce(const NovikovLattice& lattice, std::span<const Integer> exponent);

struct GwEntry {
  IntVector cls;
  Rational n;

  friend bool operator==(const GwEntry&, const GwEntry&) = default;
};

using ClassMap = std::map<IntVector, Rational>;

struct TransformResult {
  ClassMap classes;              // canonical Y class -> coefficient
  TruncatedSeries cross_terms;   // ((s+u)^3 - s^3 - u^3)/3! in s_1.., u_1..
};

struct TransformOptions {
  std::size_t base_count = 0;
  /// (k + base_count) x base_count; default embeds H_2(X) as the base block.
  std::optional<IntMatrix> lift;
  /// Intersection numbers on H^2(Y) = H^2(X) + <T_l>, indices s first.
  std::optional<TripleTensor> y_triple;
};

/// X-side coefficient list -> Y-side list: lifted X classes plus the
/// extremal multiple-cover contributions 1/d^3 for d <= order, merged per
/// canonical class.
TransformResult transform_prepotential(const ExtremalModel& model, const std::vector<GwEntry>& fx,
                                       const TransformOptions& options);

/// Inverse direction: removes the extremal contributions and pushes the
/// remaining classes forward to H_2(X).  Accepts canonical or generator
/// coordinates.  Entries come back sorted by class.
std::vector<GwEntry> restrict_prepotential(const ExtremalModel& model, const std::vector<GwEntry>& fy,
                                           const TransformOptions& options);

}  // namespace conifold
