#include "hsbcn/types.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace hsbcn {

namespace {

std::int64_t parse_int64(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("empty number in '" + std::string(whole) + "'");
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw std::invalid_argument("bad number '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("bad number '" + std::string(whole) + "'");
    int d = s[pos] - '0';
    if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10)
      throw std::invalid_argument("number out of range '" + std::string(whole) + "'");
    v = v * 10 + d;
  }
  return neg ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && ws(text.front())) text.remove_prefix(1);
  while (!text.empty() && ws(text.back())) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = parse_int64(text.substr(0, slash), text);
    std::int64_t q = parse_int64(text.substr(slash + 1), text);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
    if (fp.size() > 15) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    if ((!fp.empty() && (fp[0] == '+' || fp[0] == '-')) || (ip.empty() && fp.empty()))
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    std::int64_t whole = ip.empty() ? 0 : parse_int64(ip, text);
    std::int64_t frac = fp.empty() ? 0 : parse_int64(fp, text);
    if (whole > std::numeric_limits<std::int64_t>::max() / scale)
      throw std::invalid_argument("decimal out of range '" + std::string(text) + "'");
    Rational r(whole * scale + frac, scale);
    return neg ? -r : r;
  }
  return Rational(parse_int64(text, text));
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (pos == text.size()) throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  return BigInt(std::string(text));
}

BigInt binomial(int r, int s) {
  if (s < 0) return 0;
  if (r == -1 && s == 0) return 1;
  if (r < 0 || s > r) return 0;
  if (s > r - s) s = r - s;
  BigInt acc = 1;
  for (int i = 1; i <= s; ++i) {
    acc *= (r - s + i);
    acc /= i;
  }
  return acc;
}

BigInt ipow(int base, int exp) {
  BigInt acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace hsbcn
