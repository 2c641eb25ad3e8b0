#include "conifold/transition.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

void TripleTensor::set_symmetric(std::size_t a, std::size_t b, std::size_t c, const Rational& v) {
  std::size_t idx[3] = {a, b, c};
  std::sort(idx, idx + 3);
  do {
    (*this)(idx[0], idx[1], idx[2]) = v;
  } while (std::next_permutation(idx, idx + 3));
}

bool TripleTensor::is_symmetric() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c) {
        const Rational& v = (*this)(a, b, c);
        if (v != (*this)(a, c, b) || v != (*this)(b, a, c) || v != (*this)(c, b, a)) return false;
      }
  return true;
}

TripleTensor TransitionPresentation::triple_or_zero() const {
  return triple ? *triple : TripleTensor(rho());
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool ValidationReport::exact_sequence_ok() const {
  using namespace check_names;
  for (const char* n : {kOrthogonality, kCountIdentity, kRankA, kRankB, kBIsKernelOfAt, kAIsKernelOfBt})
    if (!find(n).passed) return false;
  return true;
}

const Check& ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw IndexOutOfRange("no check named " + name);
}

namespace {

std::string list_rows(const std::vector<std::size_t>& rows) {
  std::ostringstream os;
  os << "zero rows (1-based):";
  for (auto r : rows) os << ' ' << r + 1;
  return os.str();
}

}  // namespace

ValidationReport validate(const TransitionPresentation& p) {
  using namespace check_names;
  if (p.A.rows() != p.k || p.B.rows() != p.k) {
    std::ostringstream os;
    os << "expected " << p.k << " rows, A has " << p.A.rows() << " and B has " << p.B.rows();
    throw DimensionMismatch(os.str());
  }
  ValidationReport report;
  const std::size_t mu = p.mu(), rho = p.rho();

  {
    Check c{kOrthogonality};
    IntMatrix prod = p.A.transpose() * p.B;
    std::ostringstream os;
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t l = 0; l < rho; ++l)
        if (prod(j, l) != 0) {
          if (c.passed) os << "(A^t B) nonzero at (j,l) =";
          c.passed = false;
          os << " (" << j + 1 << ',' << l + 1 << ")=" << prod(j, l);
        }
    c.detail = os.str();
    report.checks.push_back(c);
  }
  {
    Check c{kCountIdentity};
    c.passed = mu + rho == p.k;
    if (!c.passed)
      c.detail = "mu=" + std::to_string(mu) + " rho=" + std::to_string(rho) + " k=" + std::to_string(p.k);
    report.checks.push_back(c);
  }
  const std::size_t rank_a = rank(p.A);
  const std::size_t rank_b = rank(p.B);
  report.checks.push_back({kRankA, rank_a == mu, rank_a == mu ? "" : "rank " + std::to_string(rank_a) + " < " + std::to_string(mu)});
  report.checks.push_back({kRankB, rank_b == rho, rank_b == rho ? "" : "rank " + std::to_string(rank_b) + " < " + std::to_string(rho)});
  {
    bool same = same_column_lattice(p.B, kernel_basis(p.A.transpose()));
    report.checks.push_back({kBIsKernelOfAt, same, same ? "" : "column lattice of B differs from ker A^t"});
  }
  {
    bool same = same_column_lattice(p.A, kernel_basis(p.B.transpose()));
    report.checks.push_back({kAIsKernelOfBt, same, same ? "" : "column lattice of A differs from ker B^t"});
  }
  if (p.triple) {
    Check c{kTripleSymmetric};
    if (p.triple->dim() != rho) {
      c.passed = false;
      c.detail = "triple tensor dimension " + std::to_string(p.triple->dim()) + " != rho";
    } else if (!p.triple->is_symmetric()) {
      c.passed = false;
      c.detail = "triple tensor is not symmetric";
    }
    report.checks.push_back(c);
  }
  {
    auto zr = zero_rows(p.A);
    report.checks.push_back({kFriedman, zr.empty(), zr.empty() ? "" : list_rows(zr)});
  }
  {
    auto zr = zero_rows(p.B);
    report.checks.push_back({kSty, zr.empty(), zr.empty() ? "" : list_rows(zr)});
  }
  return report;
}

TransitionPresentation complete_from_A(std::size_t k, const IntMatrix& A) {
  if (A.rows() != k) throw DimensionMismatch("A must have k rows");
  if (rank(A) != A.cols()) throw RankDeficient("columns of A are dependent");
  TransitionPresentation p;
  p.k = k;
  p.A = A;
  p.B = kernel_basis(A.transpose());
  return p;
}

TransitionPresentation complete_from_B(std::size_t k, const IntMatrix& B) {
  if (B.rows() != k) throw DimensionMismatch("B must have k rows");
  if (rank(B) != B.cols()) throw RankDeficient("columns of B are dependent");
  TransitionPresentation p;
  p.k = k;
  p.B = B;
  p.A = kernel_basis(B.transpose());
  return p;
}

EulerReport euler_check(const TransitionPresentation& p) {
  if (!p.hodge) throw MissingData("euler_check needs Hodge data");
  const HodgeData& h = *p.hodge;
  EulerReport r;
  long dh3 = h.h3_x - h.h3_y;
  r.mu_from_hodge = dh3 / 2;
  r.rho_from_hodge = h.h2_y - h.h2_x;
  r.mu_consistent = dh3 % 2 == 0 && r.mu_from_hodge == static_cast<long>(p.mu());
  r.rho_consistent = r.rho_from_hodge == static_cast<long>(p.rho());
  r.k_consistent = r.mu_from_hodge + r.rho_from_hodge == static_cast<long>(p.k);
  return r;
}

}  // namespace conifold
