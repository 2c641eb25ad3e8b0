#include "conifold/gluing.hpp"

#include <sstream>

#include "conifold/a_model.hpp"
#include "conifold/b_model.hpp"

namespace conifold {

LogConnection trivial_log_connection(std::size_t k) {
  LogConnection c;
  c.base_dim = k;
  c.half_rank = k;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector f(k);
    f[i] = 1;
    c.forms.push_back(std::move(f));
    ScalarMatrix r(2 * k, 2 * k);
    r(k + i, i) = Scalar::z_inv();
    c.residues.push_back(std::move(r));
  }
  return c;
}

namespace {

// proj * r * incl, iterating only over the nonzero entries of r.
ScalarMatrix sandwich(const RatMatrix& proj, const ScalarMatrix& r, const RatMatrix& incl) {
  ScalarMatrix out(proj.rows(), incl.cols());
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b) {
      const Scalar& v = r(a, b);
      if (v.is_zero()) continue;
      for (std::size_t i = 0; i < proj.rows(); ++i) {
        if (proj(i, a) == 0) continue;
        for (std::size_t j = 0; j < incl.cols(); ++j) {
          if (incl(b, j) == 0) continue;
          out(i, j) += v * Scalar(proj(i, a) * incl(b, j));
        }
      }
    }
  return out;
}

std::string located(const char* what, std::size_t a, std::size_t b, const Integer& v) {
  std::ostringstream os;
  os << what << " nonzero at (" << a + 1 << ',' << b + 1 << ")=" << v;
  return os.str();
}

std::string residue_mismatch(const char* side, std::size_t node, std::size_t r, std::size_t c, const Scalar& got,
                             const Scalar& want) {
  std::ostringstream os;
  os << side << " residue at node " << node + 1 << " entry (" << r + 1 << ',' << c + 1 << "): induced "
     << format_scalar(got) << ", expected " << format_scalar(want);
  return os.str();
}

void compare_residues(GlueVerdict& verdict, const char* side, std::size_t node, const ScalarMatrix& got,
                      const ScalarMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    verdict.passed = false;
    verdict.mismatches.push_back(std::string(side) + " residue shapes differ at node " + std::to_string(node + 1));
    return;
  }
  for (std::size_t r = 0; r < got.rows(); ++r)
    for (std::size_t c = 0; c < got.cols(); ++c)
      if (!(got(r, c) == want(r, c))) {
        verdict.passed = false;
        verdict.mismatches.push_back(residue_mismatch(side, node, r, c, got(r, c), want(r, c)));
      }
}

}  // namespace

LogConnection induce_via_embedding(std::size_t k, const IntMatrix& M) {
  if (M.rows() != k) throw DimensionMismatch("embedding must have k rows");
  const std::size_t m = M.cols();
  RatMatrix mr = to_rational(M);
  RatMatrix gram = mr.transpose() * mr;
  RatMatrix gram_inv = RatMatrix::identity(m);
  if (m > 0) {
    auto inv = inverse(gram);
    if (!inv) throw RankDeficient("embedding does not have full column rank");
    gram_inv = *inv;
  }
  RatMatrix left_inv = gram_inv * mr.transpose();  // m x k
  RatMatrix dual_lift = mr * gram_inv;             // k x m

  // incl: C^m + dual -> C^k + dual;  proj: the other way, proj * incl = 1.
  RatMatrix incl(2 * k, 2 * m), proj(2 * m, 2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      incl(i, l) = mr(i, l);
      incl(k + i, m + l) = dual_lift(i, l);
      proj(l, i) = left_inv(l, i);
      proj(m + l, k + i) = mr(i, l);
    }

  LogConnection trivial = trivial_log_connection(k);
  LogConnection c;
  c.base_dim = m;
  c.half_rank = m;
  for (std::size_t i = 0; i < k; ++i) {
    c.forms.push_back(M.row(i));
    c.residues.push_back(sandwich(proj, trivial.residues[i], incl));
  }
  return c;
}

GlueReport glue_check(const TransitionPresentation& p) {
  if (p.A.rows() != p.k || p.B.rows() != p.k) throw DimensionMismatch("A and B must have k rows");
  GlueReport report;
  const std::size_t mu = p.mu(), rho = p.rho();

  IntMatrix atb = p.A.transpose() * p.B;
  for (std::size_t j = 0; j < mu; ++j)
    for (std::size_t l = 0; l < rho; ++l)
      if (atb(j, l) != 0) report.orthogonality_violations.push_back(located("A^t B", j, l, atb(j, l)));
  report.orthogonal = report.orthogonality_violations.empty();

  if (mu + rho == p.k) {
    report.determinant = determinant(hstack(p.A, p.B));
    report.invertible = report.determinant != 0;
  }

  for (std::size_t i = 0; i < p.k; ++i) {
    report.b_side.forms.push_back(p.B.row(i));
    report.a_side.forms.push_back(p.A.row(i));
  }
  report.b_side.target = "v";
  report.a_side.target = "w";
  report.a_side.z_is_two_pi_i = true;

  // (1) B-side: the induced residues against the extremal Dubrovin residues,
  // with the image of B inside ker A^t.
  {
    GlueVerdict& v = report.dubrovin;
    for (const auto& s : report.orthogonality_violations) {
      v.passed = false;
      v.mismatches.push_back("B not in ker A^t: " + s);
    }
    try {
      LogConnection induced = induce_via_embedding(p.k, p.B);
      ExtremalModel model(p, 0);
      for (std::size_t i = 0; i < p.k; ++i)
        compare_residues(v, "Dubrovin", i, induced.residues[i], as_operator(dubrovin_residue(model, i)));
    } catch (const RankDeficient& e) {
      v.passed = false;
      v.mismatches.push_back(e.what());
    }
  }

  // (2) A-side: induced residues with z = 2 pi sqrt(-1) against the
  // topological Gauss-Manin residues, with the image of A inside ker B^t.
  {
    GlueVerdict& v = report.gauss_manin;
    IntMatrix bta = atb.transpose();
    for (std::size_t l = 0; l < rho; ++l)
      for (std::size_t j = 0; j < mu; ++j)
        if (bta(l, j) != 0) {
          v.passed = false;
          v.mismatches.push_back("A not in ker B^t: " + located("B^t A", l, j, bta(l, j)));
        }
    try {
      LogConnection induced = induce_via_embedding(p.k, p.A);
      LogConnection gm = gm_topological_connection(p);
      for (std::size_t i = 0; i < p.k; ++i) {
        ScalarMatrix substituted = induced.residues[i];
        for (std::size_t r = 0; r < substituted.rows(); ++r)
          for (std::size_t c = 0; c < substituted.cols(); ++c)
            substituted(r, c) = substituted(r, c).substitute_z_by_two_pi_i();
        compare_residues(v, "Gauss-Manin", i, substituted, gm.residues[i]);
      }
    } catch (const RankDeficient& e) {
      v.passed = false;
      v.mismatches.push_back(e.what());
    }
  }
  return report;
}

}  // namespace conifold
