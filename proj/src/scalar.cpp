#include "conifold/scalar.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace conifold {

namespace {

constexpr std::string_view kDot = " · ";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

int parse_power(std::string_view factor, std::string_view base) {
  if (factor == base) return 1;
  if (factor.size() > base.size() + 1 && factor.substr(0, base.size()) == base && factor[base.size()] == '^') {
    std::string digits(factor.substr(base.size() + 1));
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad exponent in scalar factor");
    return std::stoi(digits);
  }
  return 0;
}

}  // namespace

Scalar::Scalar(const Rational& v) {
  if (v != 0) terms_[{0, 0}] = v;
}

Scalar Scalar::lambda() { return monomial(1, 1, 0); }
Scalar Scalar::z_inv() { return monomial(1, 0, 1); }

Scalar Scalar::monomial(const Rational& c, int lambda_power, int z_inv_power) {
  Scalar s;
  s.add_term({lambda_power, z_inv_power}, c);
  return s;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw InvalidInput("scalar has lambda or z^-1 terms");
  return coefficient(0, 0);
}

Rational Scalar::coefficient(int lambda_power, int z_inv_power) const {
  auto it = terms_.find({lambda_power, z_inv_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

Scalar Scalar::substitute_z_by_two_pi_i() const {
  Scalar out;
  for (const auto& [m, c] : terms_) out.add_term({m.first + m.second, 0}, c);
  return out;
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  *this = std::move(out);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  std::ostringstream os;
  os << c.get_num() << '/' << c.get_den();
  return os.str();
}

std::string format_scalar(const Scalar& s) {
  if (s.is_zero()) return "0/1";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) out += " + ";
    first = false;
    out += format_rational(c);
    auto factor = [&](const char* name, int power) {
      if (power == 0) return;
      out += kDot;
      out += name;
      if (power != 1) out += "^" + std::to_string(power);
    };
    factor("lambda", m.first);
    if (m.second != 0) {
      out += kDot;
      out += "z^-" + std::to_string(m.second);
    }
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string t(trim(text));
  if (t.empty()) throw InvalidInput("empty rational literal");
  auto slash = t.find('/');
  auto check_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InvalidInput("malformed rational literal");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidInput("malformed rational literal: " + s);
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num);
  check_int(den);
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

Scalar parse_scalar(std::string_view text) {
  Scalar out;
  for (std::string_view term : split(trim(text), " + ")) {
    auto factors = split(trim(term), kDot);
    Rational c = parse_rational(factors.front());
    int lp = 0, zp = 0;
    for (std::size_t i = 1; i < factors.size(); ++i) {
      std::string_view f = trim(factors[i]);
      if (int p = parse_power(f, "lambda")) {
        lp += p;
      } else if (f.substr(0, 3) == "z^-") {
        std::string digits(f.substr(3));
        if (digits.empty()) throw InvalidInput("bad z^- exponent");
        for (char ch : digits)
          if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidInput("bad z^- exponent");
        zp += std::stoi(digits);
      } else {
        throw InvalidInput("unknown scalar factor: " + std::string(f));
      }
    }
    out += Scalar::monomial(c, lp, zp);
  }
  return out;
}

ScalarMatrix scale(const IntMatrix& m, const Scalar& s) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out(i, j) = Scalar(m(i, j)) * s;
  return out;
}

}  // namespace conifold
