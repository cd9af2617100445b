#pragma once

// Exact polynomial containers: MultiPoly in (x_1..x_m, y_1..y_n), QPoly in q
// with exponents alpha*bbar + c, and QMultiPoly = QPoly with MultiPoly
// coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsbcn/types.hpp"

namespace hsbcn {

/// Multivariate polynomial with big-integer coefficients. Variables are
/// ordered x_1..x_nx, y_1..y_ny. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;

  MultiPoly() = default;
  MultiPoly(int nx, int ny) : nx_(nx), ny_(ny) {}
  static MultiPoly constant(int nx, int ny, const BigInt& c);
  static MultiPoly monomial(int nx, int ny, Exponents e, const BigInt& c = 1);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nvars() const { return nx_ + ny_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  bool operator==(const MultiPoly& o) const = default;

  /// Value at x = 1^nx, y = 1^ny, i.e. the coefficient sum.
  BigInt at_ones() const;

  /// One monomial per line, sorted: "coef (e_1,...,e_nx|f_1,...,f_ny)".
  std::string str() const;

 private:
  void check_shape(const MultiPoly& o) const;

  int nx_ = 0;
  int ny_ = 0;
  std::map<Exponents, BigInt> terms_;
};

/// Energy exponent alpha*bbar + c.
struct QExponent {
  std::int64_t alpha = 0;
  std::int64_t c = 0;
  auto operator<=>(const QExponent&) const = default;
  QExponent operator+(const QExponent& o) const { return {alpha + o.alpha, c + o.c}; }
  double value(double bbar) const { return static_cast<double>(alpha) * bbar + static_cast<double>(c); }
  std::string str() const;  // "3bbar+5", "0", "bbar+2"
};

/// Polynomial in q with QExponent exponents and (signed) big-integer coefficients.
class QPoly {
 public:
  QPoly() = default;
  static QPoly constant(const BigInt& c);
  static QPoly monomial(QExponent e, const BigInt& c = 1);

  const std::map<QExponent, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(QExponent e) const;

  void add_term(QExponent e, const BigInt& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const BigInt& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
  bool operator==(const QPoly&) const = default;

  /// Multiplies by q^e.
  QPoly shifted(QExponent e) const;

  /// Z(q = 1): sum of coefficients.
  BigInt at_one() const;

  /// Numeric value sum_e coef * q^{e.alpha*bbar + e.c}.
  double evaluate(double bbar, double q) const;

  /// "2 + 4q^{bbar+2} + ..." in ascending exponent order.
  std::string str() const;

 private:
  std::map<QExponent, BigInt> terms_;
};

/// Polynomial in q whose coefficients are MultiPoly in (x, y).
class QMultiPoly {
 public:
  QMultiPoly() = default;
  QMultiPoly(int nx, int ny) : nx_(nx), ny_(ny) {}

  const std::map<QExponent, MultiPoly>& terms() const { return terms_; }
  void add_term(QExponent e, const MultiPoly& c);
  QMultiPoly& operator+=(const QMultiPoly& o);
  bool operator==(const QMultiPoly& o) const = default;

  /// Specialization x = 1^m, y = 1^n.
  QPoly at_ones() const;

  /// Total number of (q, x, y) monomials.
  std::size_t monomial_count() const;

 private:
  int nx_ = 0;
  int ny_ = 0;
  std::map<QExponent, MultiPoly> terms_;
};

}  // namespace hsbcn
