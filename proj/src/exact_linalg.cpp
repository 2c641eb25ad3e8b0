#include "conifold/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace conifold {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t n = std::min(D.rows(), D.cols());
  std::size_t r = 0;
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::size_t n = std::min(D.rows(), D.cols());
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix D = m;
  IntMatrix U = IntMatrix::identity(r);
  IntMatrix V = IntMatrix::identity(c);

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero |entry| of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == r || abs(D(i, j)) < abs(D(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == r) {
        exhausted = true;
        break;
      }
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      add_row(D, t, bad, Integer(1));
      add_row(U, t, bad, Integer(1));
    }
    if (exhausted) break;
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

IntMatrix column_hermite_form(const IntMatrix& m) {
  IntMatrix h = m.transpose();  // one generator per row
  const std::size_t nr = h.rows();
  const std::size_t nc = h.cols();
  std::size_t prow = 0;
  for (std::size_t col = 0; col < nc && prow < nr; ++col) {
    while (true) {
      std::size_t best = nr;
      for (std::size_t i = prow; i < nr; ++i)
        if (h(i, col) != 0 && (best == nr || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == nr) break;
      swap_rows(h, prow, best);
      bool done = true;
      for (std::size_t i = prow + 1; i < nr; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(prow, col);
        add_row(h, i, prow, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(prow, col) == 0) continue;
    if (h(prow, col) < 0) negate_row(h, prow);
    for (std::size_t i = 0; i < prow; ++i) {
      Integer q = floor_div(h(i, col), h(prow, col));
      if (q != 0) add_row(h, i, prow, -q);
    }
    ++prow;
  }
  IntMatrix out(m.rows(), prow);
  for (std::size_t i = 0; i < prow; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(j, i) = h(i, j);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  std::size_t r = snf.rank();
  std::size_t c = m.cols();
  IntMatrix k(c, c - r);
  for (std::size_t j = r; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) k(i, j - r) = snf.V(i, j);
  return column_hermite_form(k);
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }

QuotientStructure quotient_structure(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  QuotientStructure q;
  std::size_t r = snf.rank();
  q.free_rank = m.rows() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.D(i, i) > 1) q.torsion.push_back(snf.D(i, i));
  return q;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  SmithDecomposition snf = smith_normal_form(m);
  IntVector ub = snf.U.apply(b);
  std::size_t r = snf.rank();
  IntVector y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (ub[i] % snf.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / snf.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V.apply(y);
}

bool same_column_lattice(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows()) return false;
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (!solve_integer(y, x.col(j))) return false;
  for (std::size_t j = 0; j < y.cols(); ++j)
    if (!solve_integer(x, y.col(j))) return false;
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    std::size_t p = prow;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != prow)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(prow, j));
    Rational inv = 1 / m(prow, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(prow, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == prow || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }
  return {std::move(m), std::move(pivots)};
}

RatMatrix rational_null_space(const RatMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  RatMatrix ns(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    ns(free[f], f) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) ns(pivots[pi], f) = -r(pi, free[f]);
  }
  return ns;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(to_rational(m));
  if (!inv) throw RankDeficient("matrix is singular");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = (*inv)(i, j);
      if (x.get_den() != 1) throw RankDeficient("matrix is not unimodular");
      out(i, j) = x.get_num();
    }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix hstack(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows()) throw DimensionMismatch("hstack of matrices with different row counts");
  IntMatrix out(x.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) out(i, x.cols() + j) = y(i, j);
  }
  return out;
}

IntMatrix columns_of(const IntMatrix& m, std::span<const std::size_t> indices) {
  IntMatrix out(m.rows(), indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    if (indices[c] >= m.cols()) throw IndexOutOfRange("column index out of range");
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, c) = m(i, indices[c]);
  }
  return out;
}

std::vector<std::size_t> zero_rows(const IntMatrix& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < m.cols() && zero; ++j) zero = m(i, j) == 0;
    if (zero) out.push_back(i);
  }
  return out;
}

bool has_zero_row(const IntMatrix& m) { return !zero_rows(m).empty(); }

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace conifold
