#include "conifold/bryant_griffiths.hpp"

#include <sstream>

#include "conifold/scalar.hpp"

namespace conifold {

LaurentPolynomial::LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) throw IndexOutOfRange("variable index");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(1, std::move(e));
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, Exponent e) {
  LaurentPolynomial p;
  p.nvars_ = e.size();
  p.add_term(std::move(e), c);
  return p;
}

void LaurentPolynomial::pad_to(std::size_t n) {
  if (n <= nvars_) return;
  std::map<Exponent, Rational> padded;
  for (auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(n, 0);
    padded.emplace(std::move(f), c);
  }
  terms_ = std::move(padded);
  nvars_ = n;
}

void LaurentPolynomial::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  e.resize(nvars_, 0);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t var) const {
  LaurentPolynomial d;
  d.nvars_ = nvars_;
  if (var >= nvars_) return d;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    d.add_term(std::move(f), c * e[var]);
  }
  return d;
}

std::optional<int> LaurentPolynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars_) throw DimensionMismatch("evaluation point too short");
  Rational v = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 && point[i] == 0) throw InvalidInput("evaluation at a pole");
      for (int k = 0; k < std::abs(e[i]); ++k) {
        if (e[i] > 0)
          t *= point[i];
        else
          t /= point[i];
      }
    }
    v += t;
  }
  return v;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  pad_to(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  pad_to(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial n = *this;
  for (auto& [e, c] : n.terms_) c = -c;
  return n;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  p.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPolynomial::Exponent e(p.nvars_, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      p.add_term(std::move(e), ca * cb);
    }
  return p;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  LaurentPolynomial x = a, y = b;
  std::size_t n = std::max(a.nvars_, b.nvars_);
  x.pad_to(n);
  y.pad_to(n);
  return x.terms_ == y.terms_;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

Prepotential::Prepotential(LaurentPolynomial u, std::size_t h) : u_(std::move(u)), h_(h) {
  if (u_.variable_count() > h + 1) throw DimensionMismatch("potential has more than h+1 variables");
  if (!u_.is_zero() && u_.homogeneous_degree() != 2)
    throw InvalidInput("potential is not homogeneous of weight 2");
}

bool Prepotential::euler_identity_holds() const {
  LaurentPolynomial s;
  for (std::size_t p = 0; p <= h_; ++p) s += LaurentPolynomial::variable(p, h_ + 1) * u_.derivative(p);
  return s == u_ * LaurentPolynomial(2);
}

namespace {

using Frame = std::vector<std::vector<LaurentPolynomial>>;

LaurentMatrix zero_matrix(std::size_t n) {
  LaurentMatrix m(n, n);
  return m;
}

}  // namespace

std::vector<std::vector<LaurentPolynomial>> bryant_griffiths_frame(const Prepotential& pot) {
  const std::size_t h = pot.h(), n = h + 1;
  const LaurentPolynomial& u = pot.u();
  auto x = [&](std::size_t p) { return LaurentPolynomial::variable(p, n); };
  const LaurentPolynomial inv_x0 = LaurentPolynomial::monomial(1, [&] {
    LaurentPolynomial::Exponent e(n, 0);
    e[0] = -1;
    return e;
  }());

  Frame frame(2 * h + 2, std::vector<LaurentPolynomial>(2 * n));
  // tau_0 = Omega = sum x_p alpha_p^* + u_p beta_p^*
  for (std::size_t p = 0; p < n; ++p) {
    frame[0][p] = x(p);
    frame[0][n + p] = u.derivative(p);
  }
  // tau_j = d_j Omega
  for (std::size_t j = 1; j <= h; ++j)
    for (std::size_t t = 0; t < 2 * n; ++t) frame[j][t] = frame[0][t].derivative(j);
  // tau^j = beta_j^* - (x_j/x_0) beta_0^*
  for (std::size_t j = 1; j <= h; ++j) {
    frame[h + j][n + j] = 1;
    frame[h + j][n] = -(x(j) * inv_x0);
  }
  // tau^0 = -beta_0^*/x_0, the normalization for which d_p tau^j = delta_pj tau^0
  frame[2 * h + 1][n] = -inv_x0;
  return frame;
}

BryantGriffithsConnection bryant_griffiths_connection(const Prepotential& pot) {
  const std::size_t h = pot.h(), n = h + 1, size = 2 * h + 2;
  const LaurentPolynomial& u = pot.u();
  BryantGriffithsConnection c;
  c.h = h;

  auto third = [&](std::size_t a, std::size_t b, std::size_t d) { return u.derivative(a).derivative(b).derivative(d); };

  for (std::size_t p = 1; p <= h; ++p) {
    LaurentMatrix g = zero_matrix(size);
    g(c.tau_lower(p), c.tau_lower(0)) = 1;
    for (std::size_t j = 1; j <= h; ++j) {
      for (std::size_t m = 1; m <= h; ++m) g(c.tau_upper(m), c.tau_lower(j)) = third(p, j, m);
    }
    g(c.tau_upper(0), c.tau_upper(p)) = 1;
    c.directions.push_back(std::move(g));
  }

  // Curvature with x_0 held fixed.
  c.flat = true;
  for (std::size_t p = 1; p <= h; ++p)
    for (std::size_t q = p + 1; q <= h; ++q) {
      const LaurentMatrix& gp = c.directions[p - 1];
      const LaurentMatrix& gq = c.directions[q - 1];
      LaurentMatrix f = gp * gq - gq * gp;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) f(i, j) += gq(i, j).derivative(p) - gp(i, j).derivative(q);
      c.flat = c.flat && f.is_zero();
      c.curvature.push_back(std::move(f));
    }

  c.euler_relation = true;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPolynomial s;
      for (std::size_t m = 0; m < n; ++m) s += LaurentPolynomial::variable(m, n) * third(p, j, m);
      c.euler_relation = c.euler_relation && s.is_zero();
    }

  // The tables must differentiate the explicit frame, and tau^j must be
  // orthogonal to Omega.
  Frame frame = bryant_griffiths_frame(pot);
  c.frame_consistent = true;
  for (std::size_t p = 1; p <= h; ++p)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t t = 0; t < 2 * n; ++t) {
        LaurentPolynomial rhs;
        for (std::size_t i = 0; i < size; ++i)
          if (!c.directions[p - 1](i, j).is_zero()) rhs += c.directions[p - 1](i, j) * frame[i][t];
        if (!(frame[j][t].derivative(p) == rhs)) c.frame_consistent = false;
      }
  for (std::size_t j = 1; j <= h; ++j) {
    LaurentPolynomial pairing;
    for (std::size_t q = 0; q < n; ++q)
      pairing += frame[h + j][q] * frame[0][n + q] - frame[h + j][n + q] * frame[0][q];
    if (!pairing.is_zero()) c.frame_consistent = false;
  }
  return c;
}

Rational prepotential_from_periods(std::span<const Rational> x, std::span<const Rational> u_p) {
  if (x.size() != u_p.size()) throw DimensionMismatch("period vectors differ in length");
  Rational s = 0;
  for (std::size_t p = 0; p < x.size(); ++p) s += x[p] * u_p[p];
  return s / 2;
}

}  // namespace conifold
