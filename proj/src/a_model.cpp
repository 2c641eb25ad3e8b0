#include "conifold/a_model.hpp"

#include <algorithm>
#include <string>

namespace conifold {

TruncatedSeries f_series(int order) {
  if (order < 1) throw InvalidInput("f_series needs order >= 1");
  RingPtr ring = make_ring({"q"}, order);
  TruncatedSeries f(ring);
  for (int d = 1; d <= order; ++d) f += TruncatedSeries::monomial(ring, {d}, Scalar(1));
  return f;
}

TruncatedSeries multiple_cover_series(int order) {
  if (order < 1) throw InvalidInput("multiple_cover_series needs order >= 1");
  RingPtr ring = make_ring({"Q"}, order);
  TruncatedSeries e(ring);
  for (int d = 1; d <= order; ++d)
    e += TruncatedSeries::monomial(ring, {d}, Scalar(Rational(1, static_cast<long>(d) * d * d)));
  return e;
}

ExtremalModel::ExtremalModel(TransitionPresentation presentation, int order)
    : p_(std::move(presentation)), order_(order) {
  if (order_ < 0) throw InvalidInput("series order must be >= 0");
  if (p_.B.rows() != p_.k) throw DimensionMismatch("B must have k rows");
  triple_ = p_.triple_or_zero();
  if (triple_.dim() != p_.rho()) throw DimensionMismatch("triple tensor dimension differs from rho");

  std::vector<std::string> names;
  std::vector<std::size_t> group;
  for (std::size_t i = 0; i < p_.k; ++i) {
    names.push_back("q" + std::to_string(i + 1));
    group.push_back(0);
  }
  for (std::size_t l = 0; l < p_.rho(); ++l) {
    names.push_back("u" + std::to_string(l + 1));
    group.push_back(1);
  }
  ring_ = make_ring(std::move(names), std::move(group), {order_, order_});

  node_series_.reserve(p_.k);
  for (std::size_t i = 0; i < p_.k; ++i) {
    TruncatedSeries vi = v(i);
    TruncatedSeries sum(ring_);
    for (int d = 1; d <= order_; ++d) {
      TruncatedSeries::Exponent e(ring_->size(), 0);
      e[q_var(i)] = d;
      TruncatedSeries qd = TruncatedSeries::monomial(ring_, e, Scalar(1));
      sum += qd * (vi * Scalar(static_cast<long>(d))).exp();
    }
    node_series_.push_back(std::move(sum));
  }
}

ExtremalModel ExtremalModel::validated(TransitionPresentation presentation, int order) {
  if (!validate(presentation).ok()) throw InvalidInput("presentation fails validation");
  return ExtremalModel(std::move(presentation), order);
}

TruncatedSeries ExtremalModel::v(std::size_t node) const {
  TruncatedSeries s(ring_);
  for (std::size_t p = 0; p < rho(); ++p)
    if (p_.B(node, p) != 0) s += TruncatedSeries::variable(ring_, u_var(p)) * Scalar(p_.B(node, p));
  return s;
}

TruncatedSeries structural_coefficient(const ExtremalModel& model, std::size_t l, std::size_t m, std::size_t n) {
  const std::size_t rho = model.rho();
  if (l >= rho || m >= rho || n >= rho) throw IndexOutOfRange("structural_coefficient index");
  TruncatedSeries c = TruncatedSeries::constant(model.ring(), Scalar(model.triple_(l, m, n)));
  const IntMatrix& B = model.B();
  for (std::size_t i = 0; i < model.k(); ++i) {
    Integer w = B(i, l) * B(i, m) * B(i, n);
    if (w != 0) c += model.node_series(i) * Scalar(w);
  }
  return c;
}

void MixedConstants::set(std::size_t eps, std::size_t m, std::size_t n, const Rational& v) {
  if (eps >= x_dim_ || m >= rho_ || n >= rho_) throw IndexOutOfRange("mixed constant index");
  data_[(eps * rho_ + m) * rho_ + n] = v;
  data_[(eps * rho_ + n) * rho_ + m] = v;
}

DubrovinConnection dubrovin_connection(const ExtremalModel& model, const MixedConstants& mixed) {
  DubrovinConnection conn;
  conn.rho = model.rho();
  conn.x_dim = mixed.x_dim();
  conn.ring = model.ring();
  if (conn.x_dim > 0 && mixed.rho() != conn.rho) throw DimensionMismatch("mixed constants have the wrong rho");
  const std::size_t n_frame = conn.frame_size();
  const Scalar minus_z_inv = -Scalar::z_inv();
  auto constant = [&](const Scalar& s) { return TruncatedSeries::constant(conn.ring, s); };

  std::vector<std::vector<std::vector<TruncatedSeries>>> c(conn.rho);
  for (std::size_t l = 0; l < conn.rho; ++l) {
    c[l].resize(conn.rho);
    for (std::size_t m = 0; m < conn.rho; ++m) c[l][m].resize(conn.rho);
  }
  for (std::size_t l = 0; l < conn.rho; ++l)
    for (std::size_t m = l; m < conn.rho; ++m)
      for (std::size_t n = m; n < conn.rho; ++n) {
        TruncatedSeries s = structural_coefficient(model, l, m, n);
        std::size_t idx[3] = {l, m, n};
        do {
          c[idx[0]][idx[1]][idx[2]] = s;
        } while (std::next_permutation(idx, idx + 3));
      }

  for (std::size_t l = 0; l < conn.rho; ++l) {
    SeriesMatrix g(n_frame, n_frame);
    // z nabla_l T^m = -delta_lm T^0
    g(conn.point(), conn.dual(l)) = constant(minus_z_inv);
    for (std::size_t m = 0; m < conn.rho; ++m) {
      // z nabla_l T_m = -sum_n C_lmn T^n - sum_eps C_lm,eps Tbar^eps
      for (std::size_t n = 0; n < conn.rho; ++n) g(conn.dual(n), conn.primal(m)) = c[l][m][n] * minus_z_inv;
      for (std::size_t eps = 0; eps < conn.x_dim; ++eps)
        g(conn.x_dual(eps), conn.primal(m)) = constant(Scalar(mixed(eps, l, m)) * minus_z_inv);
    }
    conn.u_directions.push_back(std::move(g));
  }
  for (std::size_t eps = 0; eps < conn.x_dim; ++eps) {
    SeriesMatrix g(n_frame, n_frame);
    // z nabla_eps T_m = -sum_n C_eps,mn T^n
    for (std::size_t m = 0; m < conn.rho; ++m)
      for (std::size_t n = 0; n < conn.rho; ++n)
        g(conn.dual(n), conn.primal(m)) = constant(Scalar(mixed(eps, m, n)) * minus_z_inv);
    // Tbar_eps * Tbar^eps' = delta T^0 on the H^2(X) side.
    g(conn.point(), conn.x_dual(eps)) = constant(minus_z_inv);
    conn.x_directions.push_back(std::move(g));
  }
  return conn;
}

std::vector<SeriesMatrix> curvature(const DubrovinConnection& conn) {
  std::vector<const SeriesMatrix*> dirs;
  for (const auto& g : conn.u_directions) dirs.push_back(&g);
  for (const auto& g : conn.x_directions) dirs.push_back(&g);
  const std::size_t n = conn.frame_size();
  auto derivative = [&](std::size_t dir, const SeriesMatrix& g) {
    SeriesMatrix out(n, n);
    if (dir >= conn.rho) return out;  // constants in the X directions
    std::size_t var = conn.ring->size() - conn.rho + dir;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = g(i, j).derivative(var);
    return out;
  };
  std::vector<SeriesMatrix> out;
  for (std::size_t a = 0; a < dirs.size(); ++a)
    for (std::size_t b = a + 1; b < dirs.size(); ++b) {
      const SeriesMatrix& ga = *dirs[a];
      const SeriesMatrix& gb = *dirs[b];
      out.push_back(derivative(a, gb) - derivative(b, ga) + ga * gb - gb * ga);
    }
  return out;
}

ScalarMatrix dubrovin_residue(const ExtremalModel& model, std::size_t node) {
  if (node >= model.k()) throw IndexOutOfRange("node index");
  const std::size_t rho = model.rho();
  const IntMatrix& B = model.B();
  ScalarMatrix r(rho, rho);
  for (std::size_t m = 0; m < rho; ++m)
    for (std::size_t n = 0; n < rho; ++n) r(m, n) = Scalar(B(node, m) * B(node, n)) * Scalar::z_inv();
  return r;
}

ScalarMatrix monodromy_block(const ExtremalModel& model, std::size_t l) {
  if (l >= model.rho()) throw IndexOutOfRange("direction index");
  IntMatrix bl = model.B();
  for (std::size_t i = 0; i < bl.rows(); ++i)
    if (bl(i, l) == 0)
      for (std::size_t j = 0; j < bl.cols(); ++j) bl(i, j) = 0;
  return scale(bl.transpose() * bl, Scalar::z_inv());
}

Rational laurent_residue_of_f(const Rational& c) {
  if (c == 0) throw InvalidInput("f(e^{ct}) has no pole when c = 0");
  // e^{ct} - 1 = t g(t), g(t) = sum_j c^{j+1} t^j / (j+1)!.  Invert g as a
  // power series; then f(e^{ct}) = -1 - t^{-1} g(t)^{-1}.
  constexpr int kTerms = 4;
  std::vector<Rational> g(kTerms);
  Rational power = c, fact = 1;
  for (int j = 0; j < kTerms; ++j) {
    fact *= j + 1;
    g[j] = power / fact;
    power *= c;
  }
  std::vector<Rational> inv(kTerms);
  inv[0] = 1 / g[0];
  for (int j = 1; j < kTerms; ++j) {
    Rational s = 0;
    for (int i = 1; i <= j; ++i) s += g[i] * inv[j - i];
    inv[j] = -s / g[0];
  }
  // Laurent coefficients of f(e^{ct}): t^{-1}: -inv[0]; t^0: -1 - inv[1]; ...
  return -inv[0];
}

ScalarMatrix residue_oracle(const ExtremalModel& model, std::size_t l) {
  const std::size_t rho = model.rho();
  if (l >= rho) throw IndexOutOfRange("direction index");
  // Order one suffices to read b_il b_im b_in (coefficient of q_i) and
  // b_il^4 (coefficient of q_i u^l in C_lll).
  ExtremalModel m1(model.presentation(), 1);
  const std::size_t k = model.k();
  auto q_exp = [&](std::size_t i) {
    TruncatedSeries::Exponent e(m1.ring()->size(), 0);
    e[m1.q_var(i)] = 1;
    return e;
  };

  TruncatedSeries c_lll = structural_coefficient(m1, l, l, l);
  std::vector<Rational> scale_of(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    auto e = q_exp(i);
    Rational cube = c_lll.coefficient(e).to_rational();
    if (cube == 0) continue;
    e[m1.u_var(l)] = 1;
    scale_of[i] = c_lll.coefficient(e).to_rational() / cube;
  }

  ScalarMatrix out(rho, rho);
  for (std::size_t m = 0; m < rho; ++m)
    for (std::size_t n = m; n < rho; ++n) {
      TruncatedSeries c = structural_coefficient(m1, l, m, n);
      Rational total = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (scale_of[i] == 0) continue;
        Rational weight = c.coefficient(q_exp(i)).to_rational();
        total += weight * laurent_residue_of_f(scale_of[i]);
      }
      // connection form: -(1/z) C_lmn du^l
      Scalar entry = Scalar(-total) * Scalar::z_inv();
      out(m, n) = entry;
      out(n, m) = entry;
    }
  return out;
}

ScalarMatrix as_operator(const ScalarMatrix& block) {
  const std::size_t rho = block.rows();
  ScalarMatrix op(2 * rho, 2 * rho);
  for (std::size_t m = 0; m < rho; ++m)
    for (std::size_t n = 0; n < rho; ++n) op(rho + n, m) = block(m, n);
  return op;
}

NovikovLattice::NovikovLattice(const IntMatrix& A, std::size_t base_count) : A_(A), base_(base_count) {
  SmithDecomposition snf = smith_normal_form(A_);
  U_ = std::move(snf.U);
  rank_ = snf.rank();
}

IntVector NovikovLattice::reduce(std::span<const Integer> exponent) const {
  const std::size_t k = generator_count();
  if (exponent.size() != k + base_) throw DimensionMismatch("Novikov exponent length");
  IntVector ux = U_.apply(exponent.subspan(0, k));
  IntVector out;
  out.reserve(canonical_length());
  for (std::size_t i = rank_; i < k; ++i) out.push_back(ux[i]);
  for (std::size_t i = 0; i < base_; ++i) out.push_back(exponent[k + i]);
  return out;
}

bool NovikovLattice::equivalent(std::span<const Integer> a, std::span<const Integer> b) const {
  return reduce(a) == reduce(b);
}

IntVector novikov_reduce(const NovikovLattice& lattice, std::span<const Integer> exponent) {
  return lattice.reduce(exponent);
}

namespace {

IntMatrix lift_matrix(const ExtremalModel& model, const TransformOptions& options) {
  const std::size_t k = model.k(), nb = options.base_count;
  if (options.lift) {
    const IntMatrix& l = *options.lift;
    if (l.rows() != k + nb || l.cols() != nb) throw DimensionMismatch("lift must be (k + base_count) x base_count");
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (l(k + i, j) != (i == j ? 1 : 0))
          throw DimensionMismatch("lift must push forward to the identity on H_2(X)");
    return l;
  }
  IntMatrix l(k + nb, nb);
  for (std::size_t i = 0; i < nb; ++i) l(k + i, i) = 1;
  return l;
}

ClassMap extremal_contributions(const ExtremalModel& model, const NovikovLattice& lattice) {
  ClassMap out;
  const std::size_t k = model.k();
  for (std::size_t i = 0; i < k; ++i)
    for (int d = 1; d <= model.order(); ++d) {
      IntVector e(k + lattice.base_count());
      e[i] = d;
      Rational& slot = out[lattice.reduce(e)];
      slot += Rational(1, static_cast<long>(d) * d * d);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TruncatedSeries cubic_cross_terms(std::size_t nb, std::size_t rho, const std::optional<TripleTensor>& t) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nb; ++i) names.push_back("s" + std::to_string(i + 1));
  for (std::size_t l = 0; l < rho; ++l) names.push_back("u" + std::to_string(l + 1));
  RingPtr ring = make_ring(names, 3);
  TruncatedSeries out(ring);
  if (!t) return out;
  const std::size_t n = nb + rho;
  if (t->dim() != n) throw DimensionMismatch("Y triple tensor must have dimension base_count + rho");
  // (t.t.t)/3! summed over ordered index triples; keep mixed monomials only.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t s_count = (a < nb) + (b < nb) + (c < nb);
        if (s_count == 0 || s_count == 3) continue;
        const Rational& v = (*t)(a, b, c);
        if (v == 0) continue;
        TruncatedSeries::Exponent e(n, 0);
        ++e[a];
        ++e[b];
        ++e[c];
        out += TruncatedSeries::monomial(ring, e, Scalar(v / 6));
      }
  return out;
}

}  // namespace

TransformResult transform_prepotential(const ExtremalModel& model, const std::vector<GwEntry>& fx,
                                       const TransformOptions& options) {
  const std::size_t nb = options.base_count;
  IntMatrix lift = lift_matrix(model, options);
  NovikovLattice lattice(model.presentation().A, nb);
  if (model.presentation().A.rows() != model.k()) throw DimensionMismatch("A must have k rows");

  TransformResult result;
  for (const auto& entry : fx) {
    if (entry.cls.size() != nb) throw DimensionMismatch("X class length differs from base_count");
    Rational& slot = result.classes[lattice.reduce(lift.apply(entry.cls))];
    slot += entry.n;
  }
  for (const auto& [cls, n] : extremal_contributions(model, lattice)) result.classes[cls] += n;
  std::erase_if(result.classes, [](const auto& kv) { return kv.second == 0; });
  result.cross_terms = cubic_cross_terms(nb, model.rho(), options.y_triple);
  return result;
}

std::vector<GwEntry> restrict_prepotential(const ExtremalModel& model, const std::vector<GwEntry>& fy,
                                           const TransformOptions& options) {
  const std::size_t nb = options.base_count;
  NovikovLattice lattice(model.presentation().A, nb);
  const std::size_t k = model.k();

  ClassMap extremal = extremal_contributions(model, lattice);
  std::map<IntVector, Rational> x_side;
  for (const auto& entry : fy) {
    IntVector cls;
    if (entry.cls.size() == lattice.canonical_length())
      cls = entry.cls;
    else if (entry.cls.size() == k + nb)
      cls = lattice.reduce(entry.cls);
    else
      throw DimensionMismatch("Y class has neither canonical nor generator length");
    IntVector base(cls.end() - static_cast<std::ptrdiff_t>(nb), cls.end());
    bool trivial = std::all_of(base.begin(), base.end(), [](const Integer& x) { return x == 0; });
    if (trivial)
      extremal[cls] -= entry.n;
    else
      x_side[base] += entry.n;
  }
  for (const auto& [cls, leftover] : extremal)
    if (leftover != 0)
      throw InvalidInput("Y-side coefficients on extremal classes do not match the multiple cover formula");

  std::vector<GwEntry> out;
  for (auto& [cls, n] : x_side)
    if (n != 0) out.push_back({cls, n});
  return out;
}

}  // namespace conifold
