#pragma once

// Finite expressions in the alpha-period coordinates r_1..r_mu with
// logarithmic and polar behaviour along the hyperplanes
//   w_i = a_i1 r_1 + ... + a_imu r_mu.
//
// A term is  c * r^alpha * w_i^e * (log w_i)^{0 or 1}  with c in Q[lambda].
// Each term touches at most one hyperplane, which is enough because the
// single-sphere nilpotent operators multiply to zero.

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

struct LogMonomial {
  std::vector<int> r;   // exponents of r_1..r_mu
  int hyperplane = -1;  // -1: no w factor
  int w_power = 0;
  bool log = false;

  auto operator<=>(const LogMonomial&) const = default;
  bool operator==(const LogMonomial&) const = default;
};

class LogSeries {
 public:
  using Forms = std::shared_ptr<const IntMatrix>;  // row i holds the coefficients of w_i

  LogSeries() = default;  // zero
  explicit LogSeries(Forms forms) : forms_(std::move(forms)) {}
  explicit LogSeries(long zero);

  static Forms make_forms(const IntMatrix& rows);

  static LogSeries constant(Forms forms, const Scalar& c);
  static LogSeries r_var(Forms forms, std::size_t j);
  /// c * w_i^power * (log w_i if with_log)
  static LogSeries w_term(Forms forms, std::size_t i, int power, bool with_log, const Scalar& c = Scalar(1));
  static LogSeries monomial(Forms forms, LogMonomial m, const Scalar& c);

  const Forms& forms() const { return forms_; }
  std::size_t variable_count() const { return forms_ ? forms_->cols() : 0; }
  const std::map<LogMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LogSeries derivative(std::size_t p) const;
  /// Terms with a log factor or a negative power of some w_i.
  LogSeries singular_part() const;
  LogSeries holomorphic_part() const;
  /// Value at r = 0 using w log w -> 0; throws InvalidInput on a divergent term.
  Scalar boundary_value() const;
  /// Exact value at a rational point; throws on log terms or a vanishing pole.
  Scalar evaluate(std::span<const Rational> point) const;

  LogSeries& operator+=(const LogSeries& o);
  LogSeries& operator-=(const LogSeries& o);
  LogSeries& operator*=(const Scalar& c);
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(LogSeries a, const Scalar& c) { return a *= c; }
  friend LogSeries operator*(const Scalar& c, LogSeries a) { return a *= c; }
  /// Product; throws InvalidInput if it would need two hyperplanes or log^2.
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(LogMonomial m, const Scalar& c);
  void adopt(const Forms& other);

  Forms forms_;
  std::map<LogMonomial, Scalar> terms_;
};

std::string to_string(const LogSeries& s);

}  // namespace conifold
