#pragma once

// Seeded random inputs for property tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "conifold/a_model.hpp"
#include "conifold/bryant_griffiths.hpp"
#include "conifold/transition.hpp"

namespace conifold::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  /// Full column rank, no zero row, k x mu with 1 <= mu < k, and a
  /// saturated column lattice (Z^k / im A torsion-free), as for the
  /// relation matrix of actual vanishing cycles.
  IntMatrix a_matrix(std::size_t k) {
    for (;;) {
      std::size_t mu = static_cast<std::size_t>(uniform(1, static_cast<long>(k) - 1));
      IntMatrix a = matrix(k, mu, -2, 2);
      if (has_zero_row(a) || rank(a) != mu) continue;
      if (quotient_structure(a).torsion.empty()) return a;
    }
  }

  /// complete_from_A of a random A; with `strict`, B must have no zero row
  /// either, so the full validation passes.
  TransitionPresentation presentation(std::size_t max_k, bool strict) {
    for (;;) {
      std::size_t k = static_cast<std::size_t>(uniform(2, static_cast<long>(max_k)));
      TransitionPresentation p = complete_from_A(k, a_matrix(k));
      if (!strict || !has_zero_row(p.B)) return p;
    }
  }

  Rational rational(long span = 9) {
    long num = 0;
    while (num == 0) num = uniform(-span, span);
    Rational r(num, uniform(1, span));
    r.canonicalize();
    return r;
  }

  /// Distinct nonzero base classes with nonzero coefficients.
  std::vector<GwEntry> gw_list(std::size_t base_rank, std::size_t count) {
    std::set<IntVector> seen;
    std::vector<GwEntry> out;
    while (out.size() < count) {
      IntVector c(base_rank);
      bool nonzero = false;
      for (auto& x : c) {
        x = uniform(0, 9);
        nonzero = nonzero || x != 0;
      }
      if (!nonzero || !seen.insert(c).second) continue;
      out.push_back({c, rational()});
    }
    std::sort(out.begin(), out.end(), [](const GwEntry& a, const GwEntry& b) { return a.cls < b.cls; });
    return out;
  }

  /// N / x0^(d-2) with N a random homogeneous polynomial of degree d in
  /// x_0..x_h, 2 <= d <= 5.
  LaurentPolynomial weight_two_potential(std::size_t h) {
    const std::size_t n = h + 1;
    int d = static_cast<int>(uniform(2, 5));
    LaurentPolynomial u;
    int terms = static_cast<int>(uniform(1, 6));
    for (int t = 0; t < terms; ++t) {
      LaurentPolynomial::Exponent e(n, 0);
      for (int s = 0; s < d; ++s) e[static_cast<std::size_t>(uniform(0, static_cast<long>(h)))] += 1;
      e[0] -= d - 2;
      u += LaurentPolynomial::monomial(rational(), e);
    }
    return u;
  }

 private:
  std::mt19937_64 rng_;
};

/// The worked examples used throughout the tests.
inline TransitionPresentation two_node_flop() {
  TransitionPresentation p;
  p.k = 2;
  p.A = IntMatrix::from_rows({{1}, {-1}});
  p.B = IntMatrix::from_rows({{1}, {1}});
  return p;
}

inline TransitionPresentation three_node() {
  TransitionPresentation p;
  p.k = 3;
  p.A = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}});
  p.B = IntMatrix::from_rows({{1}, {1}, {1}});
  return p;
}

/// 16 vanishing spheres with a single relation: rho = 1, mu = 15.
inline TransitionPresentation sixteen_node() {
  IntMatrix b(16, 1);
  for (std::size_t i = 0; i < 16; ++i) b(i, 0) = 1;
  return complete_from_B(16, b);
}

inline std::vector<TransitionPresentation> named_presentations() {
  return {two_node_flop(), three_node(), sixteen_node()};
}

}  // namespace conifold::testing
