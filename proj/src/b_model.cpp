#include "conifold/b_model.hpp"

#include <algorithm>

#include "conifold/a_model.hpp"

namespace conifold {

IntMatrix standard_symplectic_form(std::size_t half) {
  IntMatrix j(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    j(i, half + i) = 1;
    j(half + i, i) = -1;
  }
  return j;
}

Integer SymplecticLattice::pair(const IntVector& x, const IntVector& y) const {
  IntVector jy = pairing.apply(y);
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * jy[i];
  return s;
}

IntMatrix SymplecticLattice::gram() const {
  std::vector<const IntVector*> basis;
  for (const auto& a : alpha) basis.push_back(&a);
  for (const auto& b : beta) basis.push_back(&b);
  IntMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = pair(*basis[i], *basis[j]);
  return g;
}

IntVector SymplecticLattice::coordinates(const IntVector& cycle) const {
  IntVector c(rank());
  for (std::size_t p = 0; p <= h; ++p) {
    c[p] = pair(cycle, beta[p]);
    c[h + 1 + p] = -pair(cycle, alpha[p]);
  }
  return c;
}

namespace {

IntMatrix as_columns(const std::vector<IntVector>& vs, std::size_t n) {
  IntMatrix m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != n) throw DimensionMismatch("lattice vector has the wrong length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  }
  return m;
}

// Basis of (Q-span of the columns) intersected with Z^n.
IntMatrix saturation(const IntMatrix& m) {
  IntMatrix annihilator = kernel_basis(m.transpose());
  if (annihilator.cols() == 0) return IntMatrix::identity(m.rows());
  return kernel_basis(annihilator.transpose());
}

// Extends the primitive family w to a basis of the saturated lattice
// spanned by w and x, keeping w as the leading vectors.
std::vector<IntVector> extend_primitive(const std::vector<IntVector>& w, const IntVector& x) {
  const std::size_t n = x.size();
  std::vector<IntVector> all = w;
  all.push_back(x);
  IntMatrix sat = saturation(as_columns(all, n));
  if (w.empty()) return {sat.col(0)};
  // Coordinates of w in the saturated basis, then complete via Smith form.
  IntMatrix coords(sat.cols(), w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto c = solve_integer(sat, w[j]);
    if (!c) throw InvalidInput("isotropic family is not primitive");
    for (std::size_t i = 0; i < c->size(); ++i) coords(i, j) = (*c)[i];
  }
  SmithDecomposition s = smith_normal_form(coords);
  for (const auto& d : s.diagonal())
    if (d != 1) throw InvalidInput("isotropic family is not primitive");
  IntMatrix u_inv = unimodular_inverse(s.U);
  std::vector<IntVector> out = w;
  for (std::size_t c = w.size(); c < sat.cols(); ++c) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < sat.cols(); ++t) v[i] += sat(i, t) * u_inv(t, c);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<IntVector>& w, const IntVector& x) {
  if (w.empty()) return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
  std::vector<IntVector> all = w;
  all.push_back(x);
  return rank(as_columns(all, x.size())) == w.size();
}

}  // namespace

SymplecticLattice build_symplectic_basis(const IntMatrix& pairing, const std::vector<IntVector>& v_basis) {
  const std::size_t n = pairing.rows();
  if (pairing.cols() != n || n == 0 || n % 2 != 0) throw DimensionMismatch("pairing must be square of even size");
  if (!(pairing.transpose() == IntMatrix(n, n) - pairing)) throw InvalidInput("pairing is not skew-symmetric");
  Integer det = determinant(pairing);
  if (det == 0) throw RankDeficient("pairing is degenerate");
  if (abs(det) != 1) throw InvalidInput("pairing is not unimodular");

  SymplecticLattice L;
  L.pairing = pairing;
  L.h = n / 2 - 1;
  L.mu = v_basis.size();
  if (L.mu > L.h + 1) throw InvalidInput("isotropic family is too large");

  IntMatrix v = as_columns(v_basis, n);
  if (!(v.transpose() * pairing * v).is_zero()) throw InvalidInput("V is not isotropic");
  if (rank(v) != L.mu) throw RankDeficient("V is not independent");
  if (L.mu > 0 && !same_column_lattice(v, saturation(v))) throw InvalidInput("V is not primitive");

  // Greedy maximal isotropic extension: lowest-index vector of the
  // orthogonal lattice that is not already in the span.
  std::vector<IntVector> w = v_basis;
  while (w.size() < L.h + 1) {
    IntMatrix wt_j = w.empty() ? IntMatrix(0, n) : as_columns(w, n).transpose() * pairing;
    IntMatrix orth = w.empty() ? IntMatrix::identity(n) : kernel_basis(wt_j);
    bool grown = false;
    for (std::size_t c = 0; c < orth.cols() && !grown; ++c) {
      IntVector x = orth.col(c);
      if (in_span(w, x)) continue;
      w = extend_primitive(w, x);
      grown = true;
    }
    if (!grown) throw InvalidInput("no isotropic extension found");
  }

  // delta_l with (alpha_p . delta_l) = delta_pl, then the inductive correction.
  IntMatrix wt_j = as_columns(w, n).transpose() * pairing;
  std::vector<IntVector> beta;
  for (std::size_t l = 0; l < w.size(); ++l) {
    IntVector e(w.size());
    e[l] = 1;
    auto delta = solve_integer(wt_j, e);
    if (!delta) throw InvalidInput("isotropic family does not admit a dual family");
    IntVector b = *delta;
    for (std::size_t p = 0; p < l; ++p) {
      Integer c = L.pair(b, beta[p]);
      for (std::size_t i = 0; i < n; ++i) b[i] -= c * w[p][i];
    }
    beta.push_back(std::move(b));
  }

  // Built as alpha_1..alpha_{h+1}; the last one becomes alpha_0.
  L.alpha.assign(L.h + 1, {});
  L.beta.assign(L.h + 1, {});
  for (std::size_t t = 0; t <= L.h; ++t) {
    std::size_t idx = t == L.h ? 0 : t + 1;
    L.alpha[idx] = w[t];
    L.beta[idx] = beta[t];
  }
  if (!(L.gram() == standard_symplectic_form(L.h + 1))) throw Error("symplectic basis construction failed");
  return L;
}

SymplecticLattice standard_vanishing_lattice(std::size_t mu, std::size_t h) {
  if (mu > h) throw InvalidInput("need mu <= h");
  const std::size_t n = 2 * h + 2;
  std::vector<IntVector> v;
  for (std::size_t j = 1; j <= mu; ++j) {
    IntVector e(n);
    e[j] = 1;
    v.push_back(e);
  }
  return build_symplectic_basis(standard_symplectic_form(h + 1), v);
}

SphereSystem sphere_system(const SymplecticLattice& L, const IntMatrix& A) {
  if (A.cols() != L.mu) throw DimensionMismatch("A must have mu columns");
  if (L.mu > L.h) throw InvalidInput("sphere systems need mu <= h");
  SphereSystem s;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    IntVector c(L.rank());
    for (std::size_t j = 0; j < L.mu; ++j)
      for (std::size_t t = 0; t < c.size(); ++t) c[t] -= A(i, j) * L.alpha[j + 1][t];
    s.classes.push_back(std::move(c));
  }
  return s;
}

IntVector poincare_dual(const SymplecticLattice& L, const IntVector& cycle) {
  IntVector sigma(L.rank());
  for (std::size_t p = 0; p <= L.h; ++p) {
    sigma[p] = L.pair(cycle, L.alpha[p]);
    sigma[L.h + 1 + p] = L.pair(cycle, L.beta[p]);
  }
  return sigma;
}

Integer evaluate_cocycle(const SymplecticLattice& L, std::span<const Integer> sigma, const IntVector& cycle) {
  if (sigma.size() != L.rank()) throw DimensionMismatch("cocycle length");
  IntVector c = L.coordinates(cycle);
  Integer v = 0;
  for (std::size_t t = 0; t < c.size(); ++t) v += c[t] * sigma[t];
  return v;
}

Integer cocycle_pairing(std::span<const Integer> sigma, std::span<const Integer> tau) {
  if (sigma.size() != tau.size() || sigma.size() % 2 != 0) throw DimensionMismatch("cocycle length");
  const std::size_t half = sigma.size() / 2;
  Integer v = 0;
  for (std::size_t p = 0; p < half; ++p) v += sigma[p] * tau[half + p] - sigma[half + p] * tau[p];
  return v;
}

IntMatrix pl_nilpotent_matrix(const SymplecticLattice& L, const SphereSystem& S, const std::vector<std::size_t>& nodes) {
  IntMatrix n(L.rank(), L.rank());
  for (std::size_t i : nodes) {
    const IntVector& cls = S.classes.at(i);
    IntVector pd = poincare_dual(L, cls);
    IntVector ev = L.coordinates(cls);  // sigma(S_i) = ev . sigma
    for (std::size_t r = 0; r < n.rows(); ++r)
      for (std::size_t c = 0; c < n.cols(); ++c) n(r, c) += pd[r] * ev[c];
  }
  return n;
}

IntMatrix pl_nilpotent_matrix(const SymplecticLattice& L, const SphereSystem& S) {
  std::vector<std::size_t> all(S.classes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return pl_nilpotent_matrix(L, S, all);
}

IntVector pl_nilpotent(const SymplecticLattice& L, const SphereSystem& S, std::span<const Integer> sigma) {
  if (sigma.size() != L.rank()) throw DimensionMismatch("cocycle length");
  IntVector out(L.rank());
  for (const auto& cls : S.classes) {
    Integer v = evaluate_cocycle(L, sigma, cls);
    if (v == 0) continue;
    IntVector pd = poincare_dual(L, cls);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += v * pd[t];
  }
  return out;
}

IntVector picard_lefschetz(const SymplecticLattice& L, const SphereSystem& S, std::span<const Integer> sigma) {
  IntVector out = pl_nilpotent(L, S, sigma);
  for (std::size_t t = 0; t < out.size(); ++t) out[t] += sigma[t];
  return out;
}

std::vector<std::size_t> nodes_meeting(const IntMatrix& A, std::size_t l) {
  if (l >= A.cols()) throw IndexOutOfRange("column index out of range");
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (A(i, l) != 0) nodes.push_back(i);
  return nodes;
}

IntMatrix monodromy_pairing(const TransitionPresentation& p, std::size_t l) {
  const std::size_t mu = p.mu();
  IntMatrix m(mu, mu);
  for (std::size_t i : nodes_meeting(p.A, l))
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t q = 0; q < mu; ++q) m(j, q) += p.A(i, j) * p.A(i, q);
  return m;
}

IntMatrix monodromy_pairing_on_lattice(const SymplecticLattice& L, const IntMatrix& A, std::size_t l) {
  SphereSystem S = sphere_system(L, A);
  IntMatrix n = pl_nilpotent_matrix(L, S, nodes_meeting(A, l));
  IntMatrix out(L.mu, L.h + 1);
  for (std::size_t j = 0; j < L.mu; ++j) {
    // N(l) applied to Gamma_j^* = alpha_{j+1}^*, read off on beta_p.
    for (std::size_t p = 0; p <= L.h; ++p) out(j, p) = n(L.h + 1 + p, j + 1);
  }
  return out;
}

OmegaJets minimal_jets(std::size_t mu) {
  OmegaJets jets;
  jets.a0.assign(2 * mu + 2, Rational(0));
  jets.a0[0] = 1;
  return jets;
}

std::vector<LogSeries> omega_expansion(const TransitionPresentation& p, const OmegaJets& jets) {
  const std::size_t mu = p.mu();
  if (jets.a0.size() % 2 != 0 || jets.a0.size() < 2 * mu + 2)
    throw DimensionMismatch("a0 must have length 2h+2 with h >= mu");
  const std::size_t h = jets.a0.size() / 2 - 1;
  if (!jets.higher.empty() && jets.higher.size() != jets.a0.size())
    throw DimensionMismatch("higher jets must have length 2h+2");
  for (std::size_t j = 1; j <= mu; ++j)
    if (jets.a0[j] != 0) throw InvalidInput("a0 must vanish on the vanishing cycles");

  auto forms = LogSeries::make_forms(p.A);
  std::vector<LogSeries> omega;
  for (const auto& c : jets.a0) omega.push_back(LogSeries::constant(forms, Scalar(c)));
  for (std::size_t j = 0; j < mu; ++j) omega[j + 1] += LogSeries::r_var(forms, j);

  for (std::size_t t = 0; t < jets.higher.size(); ++t) {
    const LogSeries& hot = jets.higher[t];
    if (hot.is_zero()) continue;
    if (t >= 1 && t <= mu) throw InvalidInput("higher jets must vanish on the vanishing cycles");
    for (const auto& [m, c] : hot.terms()) {
      int degree = 0;
      for (int e : m.r) degree += e;
      if (m.hyperplane >= 0 || degree < 2) throw InvalidInput("higher jets must be polynomials of degree >= 2");
    }
    omega[t] += hot;
  }

  // -lambda w_i log w_i PD(S_i) with PD(S_i) = -sum_j a_ij beta_j^*.
  const Scalar lam = Scalar::lambda();
  for (std::size_t i = 0; i < p.k; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      if (p.A(i, j) == 0) continue;
      omega[h + 1 + j + 1] += LogSeries::w_term(forms, i, 1, true, lam * Scalar(p.A(i, j)));
    }
  return omega;
}

LogSeries yukawa_principal(const TransitionPresentation& p, std::size_t pi, std::size_t m, std::size_t n) {
  const std::size_t mu = p.mu();
  if (pi >= mu || m >= mu || n >= mu) throw IndexOutOfRange("Yukawa index out of range");
  auto forms = LogSeries::make_forms(p.A);
  LogSeries y(forms);
  for (std::size_t i = 0; i < p.k; ++i) {
    Integer c = p.A(i, pi) * p.A(i, m) * p.A(i, n);
    if (c != 0) y += LogSeries::w_term(forms, i, -1, false, Scalar::lambda() * Scalar(c));
  }
  return y;
}

LogSeries yukawa_from_periods(const TransitionPresentation& p, const OmegaJets& jets, std::size_t pi, std::size_t m,
                              std::size_t n) {
  const std::size_t mu = p.mu();
  if (pi >= mu || m >= mu || n >= mu) throw IndexOutOfRange("Yukawa index out of range");
  auto omega = omega_expansion(p, jets);
  const std::size_t h = omega.size() / 2 - 1;
  return omega[h + 1 + pi + 1].derivative(m).derivative(n).singular_part();
}

LogSeries prepotential_series(const TransitionPresentation& p, const OmegaJets& jets) {
  auto omega = omega_expansion(p, jets);
  const std::size_t half = omega.size() / 2;
  LogSeries u(LogSeries::make_forms(p.A));
  for (std::size_t q = 0; q < half; ++q) u += omega[q] * omega[half + q];
  return u * Scalar(Rational(1, 2));
}

std::vector<IntMatrix> gm_residue_tensors(const TransitionPresentation& p) {
  const std::size_t mu = p.mu();
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < p.k; ++i) {
    IntMatrix pi(mu, mu);
    for (std::size_t m = 0; m < mu; ++m)
      for (std::size_t n = 0; n < mu; ++n) pi(m, n) = p.A(i, m) * p.A(i, n);
    out.push_back(std::move(pi));
  }
  return out;
}

LogConnection gm_topological_connection(const TransitionPresentation& p) {
  LogConnection c;
  c.base_dim = p.mu();
  c.half_rank = p.mu();
  for (std::size_t i = 0; i < p.k; ++i) c.forms.push_back(p.A.row(i));
  for (const auto& pi : gm_residue_tensors(p)) c.residues.push_back(as_operator(scale(pi, Scalar::lambda())));
  return c;
}

std::vector<std::vector<LogSeries>> frame_tau(const TransitionPresentation& p) {
  const std::size_t mu = p.mu();
  auto forms = LogSeries::make_forms(p.A);
  std::vector<std::vector<LogSeries>> frames;
  for (std::size_t j = 0; j < mu; ++j) {
    std::vector<LogSeries> v(2 * mu, LogSeries(forms));
    v[j] = LogSeries::constant(forms, Scalar(1));
    for (std::size_t i = 0; i < p.k; ++i)
      for (std::size_t n = 0; n < mu; ++n) {
        Integer c = p.A(i, j) * p.A(i, n);
        if (c != 0) v[mu + n] += LogSeries::w_term(forms, i, 0, true, Scalar::lambda() * Scalar(c));
      }
    frames.push_back(std::move(v));
  }
  return frames;
}

}  // namespace conifold
