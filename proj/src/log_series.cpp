#include "conifold/log_series.hpp"

#include <sstream>

namespace conifold {

namespace {

void normalize(LogMonomial& m) {
  if (m.w_power == 0 && !m.log) m.hyperplane = -1;
  if (m.hyperplane < 0) {
    m.w_power = 0;
    m.log = false;
  }
}

}  // namespace

LogSeries::LogSeries(long zero) {
  if (zero != 0) throw InvalidInput("a form-less log series can only be zero");
}

LogSeries::Forms LogSeries::make_forms(const IntMatrix& rows) { return std::make_shared<const IntMatrix>(rows); }

LogSeries LogSeries::constant(Forms forms, const Scalar& c) {
  std::size_t n = forms->cols();
  return monomial(std::move(forms), LogMonomial{std::vector<int>(n, 0)}, c);
}

LogSeries LogSeries::r_var(Forms forms, std::size_t j) {
  if (j >= forms->cols()) throw IndexOutOfRange("r variable index");
  LogMonomial m{std::vector<int>(forms->cols(), 0)};
  m.r[j] = 1;
  return monomial(std::move(forms), std::move(m), Scalar(1));
}

LogSeries LogSeries::w_term(Forms forms, std::size_t i, int power, bool with_log, const Scalar& c) {
  if (i >= forms->rows()) throw IndexOutOfRange("hyperplane index");
  LogMonomial m{std::vector<int>(forms->cols(), 0), static_cast<int>(i), power, with_log};
  return monomial(std::move(forms), std::move(m), c);
}

LogSeries LogSeries::monomial(Forms forms, LogMonomial m, const Scalar& c) {
  if (m.r.size() != forms->cols()) throw DimensionMismatch("log monomial exponent length");
  LogSeries s(std::move(forms));
  s.add_term(std::move(m), c);
  return s;
}

void LogSeries::add_term(LogMonomial m, const Scalar& c) {
  if (c.is_zero()) return;
  normalize(m);
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LogSeries::adopt(const Forms& other) {
  if (!other) return;
  if (!forms_) {
    forms_ = other;
    return;
  }
  if (forms_ != other && !(*forms_ == *other)) throw DimensionMismatch("log series over different hyperplanes");
}

LogSeries LogSeries::derivative(std::size_t p) const {
  LogSeries out(forms_);
  for (const auto& [m, c] : terms_) {
    if (m.r[p] != 0) {
      LogMonomial d = m;
      d.r[p] -= 1;
      out.add_term(d, c * Scalar(static_cast<long>(m.r[p])));
    }
    if (m.hyperplane < 0) continue;
    const Integer& a = (*forms_)(static_cast<std::size_t>(m.hyperplane), p);
    if (a == 0) continue;
    // d(w^e) = e a w^{e-1};  d(w^e log w) = e a w^{e-1} log w + a w^{e-1}
    if (m.w_power != 0) {
      LogMonomial d = m;
      d.w_power -= 1;
      out.add_term(d, c * Scalar(a * m.w_power));
    }
    if (m.log) {
      LogMonomial d = m;
      d.w_power -= 1;
      d.log = false;
      out.add_term(d, c * Scalar(a));
    }
  }
  return out;
}

LogSeries LogSeries::singular_part() const {
  LogSeries out(forms_);
  for (const auto& [m, c] : terms_)
    if (m.log || m.w_power < 0) out.terms_.emplace(m, c);
  return out;
}

LogSeries LogSeries::holomorphic_part() const {
  LogSeries out(forms_);
  for (const auto& [m, c] : terms_)
    if (!m.log && m.w_power >= 0) out.terms_.emplace(m, c);
  return out;
}

Scalar LogSeries::boundary_value() const {
  Scalar v;
  for (const auto& [m, c] : terms_) {
    bool r_vanishes = false;
    for (int e : m.r) r_vanishes = r_vanishes || e > 0;
    if (m.hyperplane >= 0) {
      if (m.w_power < 0 || (m.w_power == 0 && m.log))
        throw InvalidInput("log series diverges at r = 0");
      continue;  // w^e, w^e log w with e >= 1 vanish
    }
    if (!r_vanishes) v += c;
  }
  return v;
}

Scalar LogSeries::evaluate(std::span<const Rational> point) const {
  if (point.size() != variable_count()) throw DimensionMismatch("evaluation point length");
  Scalar v;
  for (const auto& [m, c] : terms_) {
    if (m.log) throw InvalidInput("cannot evaluate log terms exactly");
    Rational x = 1;
    for (std::size_t j = 0; j < m.r.size(); ++j)
      for (int e = 0; e < m.r[j]; ++e) x *= point[j];
    if (m.hyperplane >= 0) {
      Rational w = 0;
      for (std::size_t j = 0; j < point.size(); ++j) w += Rational((*forms_)(static_cast<std::size_t>(m.hyperplane), j)) * point[j];
      if (w == 0 && m.w_power < 0) throw InvalidInput("evaluation point lies on a polar hyperplane");
      Rational f = 1;
      for (int e = 0; e < std::abs(m.w_power); ++e) f *= w;
      if (m.w_power < 0)
        x /= f;
      else
        x *= f;
    }
    v += c * Scalar(x);
  }
  return v;
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
  adopt(o.forms_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
  adopt(o.forms_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LogSeries& LogSeries::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  LogSeries out(a.forms_);
  out.adopt(b.forms_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      LogMonomial m{ma.r};
      for (std::size_t j = 0; j < m.r.size(); ++j) m.r[j] += mb.r[j];
      if (ma.hyperplane >= 0 && mb.hyperplane >= 0) {
        if (ma.hyperplane != mb.hyperplane) throw InvalidInput("product touches two hyperplanes");
        if (ma.log && mb.log) throw InvalidInput("product has a squared logarithm");
      }
      const LogMonomial& h = ma.hyperplane >= 0 ? ma : mb;
      m.hyperplane = h.hyperplane;
      m.w_power = ma.w_power + mb.w_power;
      m.log = ma.log || mb.log;
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

std::string to_string(const LogSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << format_scalar(c) << ')';
    for (std::size_t j = 0; j < m.r.size(); ++j) {
      if (m.r[j] == 0) continue;
      os << "*r" << j + 1;
      if (m.r[j] != 1) os << '^' << m.r[j];
    }
    if (m.hyperplane >= 0) {
      if (m.w_power != 0) {
        os << "*w" << m.hyperplane + 1;
        if (m.w_power != 1) os << '^' << m.w_power;
      }
      if (m.log) os << "*log(w" << m.hyperplane + 1 << ')';
    }
  }
  return os.str();
}

}  // namespace conifold
