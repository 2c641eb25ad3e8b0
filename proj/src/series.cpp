#include "conifold/series.hpp"

#include <numeric>
#include <sstream>

namespace conifold {

std::size_t SeriesRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw IndexOutOfRange("no series variable named " + name);
}

bool SeriesRing::admits(const std::vector<int>& exponent) const {
  std::vector<int> deg(bounds.size(), 0);
  for (std::size_t i = 0; i < exponent.size(); ++i) deg[group[i]] += exponent[i];
  for (std::size_t g = 0; g < bounds.size(); ++g)
    if (deg[g] > bounds[g]) return false;
  return true;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<std::size_t> group, std::vector<int> bounds) {
  if (names.size() != group.size()) throw DimensionMismatch("series ring: one group index per variable");
  for (auto g : group)
    if (g >= bounds.size()) throw IndexOutOfRange("series ring: group index without a bound");
  return std::make_shared<const SeriesRing>(SeriesRing{std::move(names), std::move(group), std::move(bounds)});
}

RingPtr make_ring(std::vector<std::string> names, int bound) {
  std::vector<std::size_t> group(names.size(), 0);
  return make_ring(std::move(names), std::move(group), {bound});
}

TruncatedSeries::TruncatedSeries(long zero) {
  if (zero != 0) throw InvalidInput("a ring-less series can only be zero");
}

TruncatedSeries TruncatedSeries::constant(RingPtr ring, const Scalar& c) {
  TruncatedSeries s(ring);
  s.add_term(Exponent(ring->size(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw IndexOutOfRange("series variable index");
  Exponent e(ring->size(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), Scalar(1));
}

TruncatedSeries TruncatedSeries::monomial(RingPtr ring, Exponent exponent, const Scalar& c) {
  if (exponent.size() != ring->size()) throw DimensionMismatch("series exponent length");
  TruncatedSeries s(ring);
  s.add_term(exponent, c);
  return s;
}

Scalar TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar TruncatedSeries::constant_term() const {
  if (!ring_) return {};
  return coefficient(Exponent(ring_->size(), 0));
}

void TruncatedSeries::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero() || !ring_->admits(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TruncatedSeries::adopt_ring(const RingPtr& other) {
  if (!other) return;
  if (!ring_) {
    ring_ = other;
    return;
  }
  if (ring_ != other && !(*ring_ == *other)) throw DimensionMismatch("series from different rings");
}

TruncatedSeries TruncatedSeries::derivative(std::size_t var) const {
  TruncatedSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * Scalar(static_cast<long>(e[var])));
  }
  return out;
}

TruncatedSeries TruncatedSeries::euler_derivative(std::size_t var) const {
  TruncatedSeries out(ring_);
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) out.add_term(e, c * Scalar(static_cast<long>(e[var])));
  return out;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!ring_) throw InvalidInput("exp of a ring-less series");
  if (!constant_term().is_zero()) throw InvalidInput("exp needs a series without constant term");
  TruncatedSeries result = constant(ring_, Scalar(1));
  TruncatedSeries power = result;
  int max_degree = std::accumulate(ring_->bounds.begin(), ring_->bounds.end(), 0);
  Rational factorial = 1;
  for (int n = 1; n <= max_degree; ++n) {
    power = power * *this;
    if (power.is_zero()) break;
    factorial *= n;
    result += power * Scalar(Rational(1) / factorial);
  }
  return result;
}

TruncatedSeries TruncatedSeries::restrict_to_zero(const std::vector<std::size_t>& vars) const {
  TruncatedSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (auto v : vars) keep = keep && e[v] == 0;
    if (keep) out.terms_.emplace(e, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::map_coefficients(Scalar (*f)(const Scalar&)) const {
  TruncatedSeries out(ring_);
  for (const auto& [e, c] : terms_) out.add_term(e, f(c));
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  adopt_ring(o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  adopt_ring(o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(a.ring_);
  out.adopt_ring(b.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  TruncatedSeries::Exponent e(out.ring_->size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << format_scalar(c) << ')';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << '*' << s.ring()->names[i];
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace conifold
