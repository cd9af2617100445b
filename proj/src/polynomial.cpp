#include "hsbcn/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hsbcn {

MultiPoly MultiPoly::constant(int nx, int ny, const BigInt& c) {
  MultiPoly p(nx, ny);
  p.add_term(Exponents(static_cast<std::size_t>(nx + ny), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int nx, int ny, Exponents e, const BigInt& c) {
  if (e.size() != static_cast<std::size_t>(nx + ny)) throw std::invalid_argument("exponent vector size mismatch");
  MultiPoly p(nx, ny);
  p.add_term(e, c);
  return p;
}

void MultiPoly::check_shape(const MultiPoly& o) const {
  if (o.nx_ != nx_ || o.ny_ != ny_) throw std::invalid_argument("MultiPoly variable sets differ");
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_shape(b);
  MultiPoly out(a.nx_, a.ny_);
  MultiPoly::Exponents e(static_cast<std::size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

BigInt MultiPoly::at_ones() const {
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

std::string MultiPoly::str() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) {
    os << c << " (";
    for (int i = 0; i < nx_; ++i) os << (i ? "," : "") << e[static_cast<std::size_t>(i)];
    os << '|';
    for (int j = 0; j < ny_; ++j) os << (j ? "," : "") << e[static_cast<std::size_t>(nx_ + j)];
    os << ")\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::string QExponent::str() const {
  std::ostringstream os;
  if (alpha == 0) {
    os << c;
    return os.str();
  }
  if (alpha != 1) os << alpha;
  os << "bbar";
  if (c > 0) os << '+' << c;
  if (c < 0) os << c;
  return os.str();
}

QPoly QPoly::constant(const BigInt& c) { return monomial({0, 0}, c); }

QPoly QPoly::monomial(QExponent e, const BigInt& c) {
  QPoly p;
  p.add_term(e, c);
  return p;
}

BigInt QPoly::coefficient(QExponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QPoly::add_term(QExponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

QPoly QPoly::shifted(QExponent e) const {
  QPoly out;
  for (const auto& [ea, c] : terms_) out.terms_.emplace(ea + e, c);
  return out;
}

BigInt QPoly::at_one() const {
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

double QPoly::evaluate(double bbar, double q) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += static_cast<double>(c) * std::pow(q, e.value(bbar));
  return acc;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    const bool unit = e.alpha == 0 && e.c == 0;
    if (unit) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "q^{" << e.str() << '}';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void QMultiPoly::add_term(QExponent e, const MultiPoly& c) {
  if (c.is_zero()) return;
  if (c.nx() != nx_ || c.ny() != ny_) throw std::invalid_argument("QMultiPoly coefficient shape mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QMultiPoly& QMultiPoly::operator+=(const QMultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly QMultiPoly::at_ones() const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, c.at_ones());
  return out;
}

std::size_t QMultiPoly::monomial_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n += c.term_count();
  return n;
}

}  // namespace hsbcn
