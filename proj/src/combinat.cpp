#include "hsbcn/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hsbcn {

int parity(int k) { return k % 2 == 0 ? 0 : 1; }

int restricted_count(int count, int sign) { return (count + sign * parity(count)) / 2; }

namespace {

void check_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

}  // namespace

SpinAlphabet::SpinAlphabet(int m, int n, int eps, int epsp)
    : m_(m), n_(n), eps_(eps), epsp_(epsp) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
  check_sign(eps, "eps");
  check_sign(epsp, "eps'");
  m_eps_ = restricted_count(m, eps);
  n_epsp_ = restricted_count(n, epsp);

  Label next = 1;
  for (int b = 0; b < n_epsp_; ++b) fermions_.push_back(next++);
  for (int a = 0; a < m_eps_; ++a) bosons_.push_back(next++);
  for (int b = n_epsp_; b < n; ++b) fermions_.push_back(next++);
  for (int a = m_eps_; a < m; ++a) bosons_.push_back(next++);
  finish();
}

SpinAlphabet::SpinAlphabet(int m, int n, int eps, int epsp, std::vector<Label> bosons,
                           std::vector<Label> fermions)
    : m_(m), n_(n), eps_(eps), epsp_(epsp), bosons_(std::move(bosons)), fermions_(std::move(fermions)) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
  check_sign(eps, "eps");
  check_sign(epsp, "eps'");
  if (static_cast<int>(bosons_.size()) != m || static_cast<int>(fermions_.size()) != n)
    throw std::invalid_argument("|B| must equal m and |F| must equal n");
  m_eps_ = restricted_count(m, eps);
  n_epsp_ = restricted_count(n, epsp);
  if (!std::is_sorted(bosons_.begin(), bosons_.end()) || !std::is_sorted(fermions_.begin(), fermions_.end()))
    throw std::invalid_argument("B and F must be listed in increasing order");
  std::vector<Label> all = bosons_;
  all.insert(all.end(), fermions_.begin(), fermions_.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < m + n; ++i)
    if (all[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("B and F must partition 1..m+n");

  // Restricted labels b_1..b_{m_eps}, f_1..f_{n_eps'} must be exactly 1..star,
  // with b_{m_eps} = star.
  std::vector<Label> restricted(bosons_.begin(), bosons_.begin() + m_eps_);
  restricted.insert(restricted.end(), fermions_.begin(), fermions_.begin() + n_epsp_);
  std::sort(restricted.begin(), restricted.end());
  for (int i = 0; i < static_cast<int>(restricted.size()); ++i)
    if (restricted[static_cast<std::size_t>(i)] != i + 1)
      throw std::invalid_argument("restricted labels must occupy 1..m_eps+n_eps'");
  if (m_eps_ > 0 && bosons_[static_cast<std::size_t>(m_eps_ - 1)] != star())
    throw std::invalid_argument("b_{m_eps} must equal m_eps+n_eps'");
  finish();
}

void SpinAlphabet::finish() {
  kind_.assign(static_cast<std::size_t>(size() + 1), '?');
  index_.assign(static_cast<std::size_t>(size() + 1), 0);
  for (std::size_t a = 0; a < bosons_.size(); ++a) {
    kind_[static_cast<std::size_t>(bosons_[a])] = 'B';
    index_[static_cast<std::size_t>(bosons_[a])] = static_cast<int>(a) + 1;
  }
  for (std::size_t b = 0; b < fermions_.size(); ++b) {
    kind_[static_cast<std::size_t>(fermions_[b])] = 'F';
    index_[static_cast<std::size_t>(fermions_[b])] = static_cast<int>(b) + 1;
  }
}

std::size_t SpinAlphabet::check(Label s) const {
  if (!contains(s))
    throw std::domain_error("label " + std::to_string(s) + " outside 1.." + std::to_string(size()));
  return static_cast<std::size_t>(s);
}

Label SpinAlphabet::reverse(Label s) const {
  int idx = sector_index(s);
  if (is_boson(s)) return bosons_[static_cast<std::size_t>(m_ - idx)];
  return fermions_[static_cast<std::size_t>(n_ - idx)];
}

std::string SpinAlphabet::name() const {
  std::ostringstream os;
  os << "su(" << m_ << "|" << n_ << ") eps=" << (eps_ > 0 ? "+" : "-") << " eps'=" << (epsp_ > 0 ? "+" : "-");
  return os.str();
}

// ---------------------------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int k : parts_) {
    if (k < 1) throw std::invalid_argument("composition parts must be >= 1");
    total_ += k;
  }
}

Composition Composition::from_mask(int total, std::uint64_t mask) {
  if (total < 1 || total > 64) throw std::invalid_argument("composition total must be in 1..64");
  std::vector<int> parts;
  int last = 0;
  for (int K = 1; K < total; ++K) {
    if ((mask >> (K - 1)) & 1u) {
      parts.push_back(K - last);
      last = K;
    }
  }
  parts.push_back(total - last);
  return Composition(std::move(parts));
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> K(parts_.size());
  int acc = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) K[i] = acc += parts_[i];
  return K;
}

std::uint64_t Composition::mask() const {
  std::uint64_t mask = 0;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    mask |= std::uint64_t{1} << (acc - 1);
  }
  return mask;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Motif::Motif(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("motif entries must be 0 or 1");
}

Motif Motif::from_mask(int length, std::uint64_t mask) {
  if (length < 0 || length > 63) throw std::invalid_argument("motif length must be in 0..63");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return Motif(std::move(bits));
}

std::uint64_t Motif::mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

std::string Motif::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < bits_.size(); ++i) os << (i ? "," : "") << int(bits_[i]);
  os << ')';
  return os.str();
}

Composition to_composition(const Motif& d) { return Composition::from_mask(d.size() + 1, d.mask()); }

Motif to_motif(const Composition& k) { return Motif::from_mask(k.total() - 1, k.mask()); }

// ---------------------------------------------------------------------------

std::vector<Cell> BorderStrip::cells() const {
  const Motif d = to_motif(columns_);
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(length()));
  Cell c{0, 0};
  out.push_back(c);
  for (int i = 0; i < d.size(); ++i) {
    if (d[i]) --c.col;
    else ++c.row;
    out.push_back(c);
  }
  return out;
}

BorderStrip border_strip_from_motif(const Motif& d) { return BorderStrip(to_composition(d)); }

// ---------------------------------------------------------------------------

std::string BondVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

int delta(Label s, Label t, const SpinAlphabet& a) {
  if (!a.contains(s) || !a.contains(t))
    throw std::domain_error("delta: labels must lie in 1.." + std::to_string(a.size()));
  if (s < t) return 0;
  if (s > t) return 1;
  return a.is_boson(s) ? 0 : 1;
}

bool bond_vector_allowed(const BondVector& s, const Motif& d, const SpinAlphabet& a) {
  if (s.entries.size() != static_cast<std::size_t>(d.size()) + 1)
    throw std::invalid_argument("bond vector length must be motif length + 1");
  for (int i = 0; i < d.size(); ++i)
    if (delta(s.entries[static_cast<std::size_t>(i)], s.entries[static_cast<std::size_t>(i) + 1], a) != d[i])
      return false;
  return true;
}

bool starred_bond_vector_allowed(const BondVector& s, const Motif& d, const SpinAlphabet& a) {
  const std::size_t L = s.entries.size();
  if (L != static_cast<std::size_t>(d.size()) + 1)
    throw std::invalid_argument("bond vector length must be motif length + 1");
  if (s.entries.back() != a.star()) return false;
  const int N = d.size();
  if (N == 0) return true;
  for (int i = 0; i + 1 < N; ++i)
    if (delta(s.entries[static_cast<std::size_t>(i)], s.entries[static_cast<std::size_t>(i) + 1], a) != d[i])
      return false;
  const Label last = s.entries[static_cast<std::size_t>(N) - 1];
  if (!a.contains(last)) throw std::domain_error("bond vector label out of range");
  return delta_star(last, a.star()) == d[N - 1];
}

namespace {

// Row vector after u^T M_{d_1} ... M_{d_{N-1}}, indexed by the label s_N,
// then contracted against the bosonic-star column of the last factor.
template <class Int>
Int starred_count(std::uint64_t mask, int N, const SpinAlphabet& a) {
  const int q = a.size();
  if (N == 0) return Int(1);
  std::vector<Int> v(static_cast<std::size_t>(q + 1), Int(1)), w(static_cast<std::size_t>(q + 1));
  v[0] = 0;
  for (int i = 0; i + 1 < N; ++i) {
    const int b = static_cast<int>((mask >> i) & 1u);
    for (int t = 1; t <= q; ++t) {
      Int acc = 0;
      for (int s = 1; s <= q; ++s)
        if (delta(s, t, a) == b) acc += v[static_cast<std::size_t>(s)];
      w[static_cast<std::size_t>(t)] = acc;
    }
    std::swap(v, w);
  }
  const int last = static_cast<int>((mask >> (N - 1)) & 1u);
  Int total = 0;
  for (int s = 1; s <= q; ++s)
    if (delta_star(s, a.star()) == last) total += v[static_cast<std::size_t>(s)];
  return total;
}

}  // namespace

BigInt count_starred_tableaux(const Motif& d, const SpinAlphabet& a) {
  return starred_count<BigInt>(d.mask(), d.size(), a);
}

std::uint64_t count_starred_tableaux_u64(std::uint64_t mask, int length, const SpinAlphabet& a) {
  return starred_count<std::uint64_t>(mask, length, a);
}

void for_each_starred_tableau(const Motif& d, const SpinAlphabet& a,
                              const std::function<void(const BondVector&)>& visit) {
  const int N = d.size();
  const int q = a.size();
  BondVector s;
  s.entries.assign(static_cast<std::size_t>(N) + 1, 0);
  s.entries.back() = a.star();
  if (N == 0) {
    visit(s);
    return;
  }
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == N) {
      if (delta_star(s.entries[static_cast<std::size_t>(N) - 1], a.star()) == d[N - 1]) visit(s);
      return;
    }
    for (Label t = 1; t <= q; ++t) {
      if (pos > 0 && delta(s.entries[static_cast<std::size_t>(pos) - 1], t, a) != d[pos - 1]) continue;
      s.entries[static_cast<std::size_t>(pos)] = t;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::vector<BondVector> enumerate_starred_tableaux(const Motif& d, const SpinAlphabet& a) {
  std::vector<BondVector> out;
  for_each_starred_tableau(d, a, [&](const BondVector& s) { out.push_back(s); });
  return out;
}

BigInt d_mn(int k, int m, int n) {
  if (k < 0 || m < 0 || n < 0) throw std::invalid_argument("d_mn arguments must be nonnegative");
  BigInt acc = 0;
  for (int l = 0; l <= k; ++l) {
    if (k - l > n) continue;
    acc += binomial(m + l - 1, l) * binomial(n, k - l);
  }
  return acc;
}

}  // namespace hsbcn
