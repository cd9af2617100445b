#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace hsbcn {

/// Arbitrary-precision integer used for every degeneracy and coefficient.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for the boundary parameters (beta, beta', bbar).
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", an integer, or a finite decimal ("0.5", "-1.25e0" is not
/// accepted) into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(std::string_view text);

/// Binomial coefficient C(r, s) with C(r, s) = 0 for s > r or s < 0, and
/// C(-1, 0) = 1.
BigInt binomial(int r, int s);

/// base^exp for small nonnegative operands.
BigInt ipow(int base, int exp);

}  // namespace hsbcn
