#pragma once

// B-model side of a conifold transition: a symplectic basis of H_3 adapted
// to the vanishing cycles, Picard-Lefschetz monodromy, the nilpotent-orbit
// form of the holomorphic 3-form near the conifold point, Yukawa principal
// parts and the topological Gauss-Manin residues.
//
// Cocycles are coordinate vectors of length 2h+2:
//   (sigma(alpha_0), ..., sigma(alpha_h), sigma(beta_0), ..., sigma(beta_h)).
// The vanishing cycles Gamma_1..Gamma_mu are alpha_1..alpha_mu.  All
// indices in the API are 0-based; Gamma_{j+1} has index j.

#include <cstddef>
#include <optional>
#include <vector>

#include "conifold/log_connection.hpp"
#include "conifold/log_series.hpp"
#include "conifold/transition.hpp"

namespace conifold {

/// [[0, I], [-I, 0]] of size 2*half.
IntMatrix standard_symplectic_form(std::size_t half);

struct SymplecticLattice {
  IntMatrix pairing;  // (x.y) = x^t J y in ambient coordinates
  std::size_t h = 0;
  std::size_t mu = 0;
  std::vector<IntVector> alpha;  // alpha_0..alpha_h
  std::vector<IntVector> beta;   // beta_0..beta_h

  std::size_t rank() const { return 2 * h + 2; }
  Integer pair(const IntVector& x, const IntVector& y) const;
  /// Gram matrix of alpha_0..alpha_h, beta_0..beta_h.
  IntMatrix gram() const;
  /// (c, d) with cycle = sum c_p alpha_p + d_p beta_p.
  IntVector coordinates(const IntVector& cycle) const;
};

/// Extends the isotropic, primitive family v_basis to a symplectic basis
/// with alpha_j = v_basis[j-1] for 1 <= j <= min(mu, h).  When mu = h + 1
/// the last vanishing cycle becomes alpha_0.
SymplecticLattice build_symplectic_basis(const IntMatrix& pairing, const std::vector<IntVector>& v_basis);

/// Standard pairing on Z^{2h+2} with V spanned by the coordinates 1..mu.
SymplecticLattice standard_vanishing_lattice(std::size_t mu, std::size_t h);

/// Sphere classes S_i = -sum_j a_ij Gamma_j in ambient coordinates.
struct SphereSystem {
  std::vector<IntVector> classes;
};

SphereSystem sphere_system(const SymplecticLattice& lattice, const IntMatrix& A);

/// Poincare dual of a cycle as a cocycle: PD(c)(x) = (c.x).
IntVector poincare_dual(const SymplecticLattice& lattice, const IntVector& cycle);
Integer evaluate_cocycle(const SymplecticLattice& lattice, std::span<const Integer> sigma, const IntVector& cycle);
/// Cup-product pairing, normalized so (PD a . PD b) = (a.b).
Integer cocycle_pairing(std::span<const Integer> sigma, std::span<const Integer> tau);

/// T sigma = sigma + sum_i sigma(S_i) PD(S_i).
IntVector picard_lefschetz(const SymplecticLattice& lattice, const SphereSystem& spheres, std::span<const Integer> sigma);
/// N = T - I.
IntVector pl_nilpotent(const SymplecticLattice& lattice, const SphereSystem& spheres, std::span<const Integer> sigma);
/// Matrix of sigma -> sum_{i in nodes} sigma(S_i) PD(S_i) on cocycle coordinates.
IntMatrix pl_nilpotent_matrix(const SymplecticLattice& lattice, const SphereSystem& spheres,
                              const std::vector<std::size_t>& nodes);
IntMatrix pl_nilpotent_matrix(const SymplecticLattice& lattice, const SphereSystem& spheres);

/// Nodes i with a_il != 0.
std::vector<std::size_t> nodes_meeting(const IntMatrix& A, std::size_t l);

/// (A_l^t A_l), A_l keeping the rows with a_il != 0.
IntMatrix monodromy_pairing(const TransitionPresentation& p, std::size_t l);

/// mu x (h+1) matrix of  integral over beta_p of N(l) Gamma_j^*, computed
/// with Picard-Lefschetz on the lattice.
IntMatrix monodromy_pairing_on_lattice(const SymplecticLattice& lattice, const IntMatrix& A, std::size_t l);

/// Jets of the holomorphic part of the 3-form.  a0 has length 2h+2 and must
/// vanish at alpha_1..alpha_mu; `higher` (empty or length 2h+2) holds
/// polynomial corrections of degree >= 2 in r, zero on alpha_1..alpha_mu.
struct OmegaJets {
  std::vector<Rational> a0;
  std::vector<LogSeries> higher;
};

/// Jets for h = mu with a0 = alpha_0^*.
OmegaJets minimal_jets(std::size_t mu);

/// Omega = a0 + sum_j Gamma_j^* r_j + hot - lambda sum_i w_i log w_i PD(S_i)
/// as cocycle coordinates.
std::vector<LogSeries> omega_expansion(const TransitionPresentation& p, const OmegaJets& jets);

/// sum_i lambda a_ip a_im a_in / w_i.
LogSeries yukawa_principal(const TransitionPresentation& p, std::size_t pi, std::size_t m, std::size_t n);

/// Singular part of d_m d_n of the beta_p period, i.e. of the third
/// derivative of the prepotential.
LogSeries yukawa_from_periods(const TransitionPresentation& p, const OmegaJets& jets, std::size_t pi, std::size_t m,
                              std::size_t n);

/// 1/2 sum_p x_p u_p with x, u the alpha and beta periods of Omega.
LogSeries prepotential_series(const TransitionPresentation& p, const OmegaJets& jets);

/// P^i = (row i of A)^t (row i of A).
std::vector<IntMatrix> gm_residue_tensors(const TransitionPresentation& p);

/// Logarithmic connection on V^* + V over the r-coordinates, frame
/// v_1..v_mu, v^1..v^mu, with residue lambda P^i (v_m -> sum_n P^i_mn v^n)
/// along w_i = 0.
LogConnection gm_topological_connection(const TransitionPresentation& p);

/// v_j = Gamma_j^* + lambda sum_i log(w_i) a_ij sum_n a_in PD(Gamma_n), as
/// coordinates on (Gamma_1^*..Gamma_mu^*, PD(Gamma_1)..PD(Gamma_mu)).
std::vector<std::vector<LogSeries>> frame_tau(const TransitionPresentation& p);

}  // namespace conifold
