#include "hsbcn/schur.hpp"

#include <stdexcept>

namespace hsbcn {

namespace {

// Calls visit(e) for every exponent vector e over `vars` variables with |e| = k.
template <class F>
void for_each_multiset(int k, int vars, MultiPoly::Exponents& e, std::size_t offset, F&& visit) {
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      e[offset + static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(left);
      visit();
      e[offset + static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (int c = left; c >= 0; --c) {
      e[offset + static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(c);
      self(self, pos + 1, left - c);
    }
    e[offset + static_cast<std::size_t>(pos)] = 0;
  };
  if (vars == 0) {
    if (k == 0) visit();
    return;
  }
  rec(rec, 0, k);
}

// Calls visit() for every 0/1 vector over `vars` variables with k ones.
template <class F>
void for_each_subset(int k, int vars, MultiPoly::Exponents& e, std::size_t offset, F&& visit) {
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (left == 0) {
      visit();
      return;
    }
    if (vars - pos < left) return;
    e[offset + static_cast<std::size_t>(pos)] = 1;
    self(self, pos + 1, left - 1);
    e[offset + static_cast<std::size_t>(pos)] = 0;
    self(self, pos + 1, left);
  };
  rec(rec, 0, k);
}

}  // namespace

MultiPoly complete_h(int k, int m) { return super_elementary_E(k, m, 0, m, 0); }

MultiPoly elementary_e(int k, int n) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  MultiPoly p(0, n);
  MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
  for_each_subset(k, n, e, 0, [&] { p.add_term(e, 1); });
  return p;
}

MultiPoly super_elementary_E(int k, int mu, int nu, int nx, int ny) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (mu < 0 || nu < 0 || mu > nx || nu > ny) throw std::invalid_argument("restricted variable count out of range");
  MultiPoly p(nx, ny);
  MultiPoly::Exponents e(static_cast<std::size_t>(nx + ny), 0);
  for (int j = 0; j <= k; ++j) {
    if (k - j > nu) continue;
    if (mu == 0 && j > 0) break;
    for_each_multiset(j, mu, e, 0, [&] {
      for_each_subset(k - j, nu, e, static_cast<std::size_t>(nx), [&] { p.add_term(e, 1); });
    });
  }
  return p;
}

MultiPoly super_elementary_E(int k, const SpinAlphabet& a) { return super_elementary_E(k, a.m(), a.n(), a.m(), a.n()); }

// ---------------------------------------------------------------------------

SuperSchur::SuperSchur(const SpinAlphabet& a, int max_degree) : a_(a), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  E_.reserve(static_cast<std::size_t>(max_degree) + 1);
  Eeps_.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) {
    E_.push_back(super_elementary_E(k, a.m(), a.n(), a.m(), a.n()));
    Eeps_.push_back(super_elementary_E(k, a.m_eps(), a.n_epsp(), a.m(), a.n()));
  }
}

const MultiPoly& SuperSchur::E(int k) const {
  if (k < 0 || k > max_degree_) throw std::out_of_range("E_k degree beyond precomputed range");
  return E_[static_cast<std::size_t>(k)];
}

const MultiPoly& SuperSchur::E_restricted(int k) const {
  if (k < 0 || k > max_degree_) throw std::out_of_range("E_k degree beyond precomputed range");
  return Eeps_[static_cast<std::size_t>(k)];
}

MultiPoly SuperSchur::f(int k, int branch) const {
  if (branch == 0) return E_restricted(k);
  if (branch == 1) return E(k) - E_restricted(k);
  throw std::invalid_argument("branch must be 0 or 1");
}

MultiPoly SuperSchur::border_strip(const Composition& k, SchurMethod method) const {
  switch (method) {
    case SchurMethod::determinant: {
      auto body = [&](int len) { return E(len); };
      auto A = border_strip_matrix<MultiPoly>(k, body, body, zero(), one());
      return unit_hessenberg_det(A, one());
    }
    case SchurMethod::recursion:
      return border_strip_recursive(k);
    case SchurMethod::combinatorial:
      return schur_from_tableaux(k, a_, -1);
  }
  throw std::invalid_argument("unknown method");
}

MultiPoly SuperSchur::bc(const Composition& k, int branch, SchurMethod method) const {
  if (branch != 0 && branch != 1) throw std::invalid_argument("branch must be 0 or 1");
  switch (method) {
    case SchurMethod::determinant: {
      auto top = [&](int len) { return f(len, branch); };
      auto body = [&](int len) { return E(len); };
      auto A = border_strip_matrix<MultiPoly>(k, top, body, zero(), one());
      return unit_hessenberg_det(A, one());
    }
    case SchurMethod::recursion:
      return bc_recursive(k, branch);
    case SchurMethod::combinatorial:
      return schur_from_tableaux(k, a_, branch);
  }
  throw std::invalid_argument("unknown method");
}

// S_<k_1..k_r> = E_{k_r} S_<k_1..k_{r-1}> - S_<k_1..k_{r-2}, k_{r-1}+k_r>, S_<> = 1.
MultiPoly SuperSchur::border_strip_recursive(const Composition& k) const {
  const int r = k.size();
  if (r == 1) return E(k[0]);
  std::vector<int> head(k.parts().begin(), k.parts().end() - 1);
  std::vector<int> merged(k.parts().begin(), k.parts().end() - 2);
  merged.push_back(k[r - 2] + k[r - 1]);
  return E(k[r - 1]) * border_strip_recursive(Composition(head)) - border_strip_recursive(Composition(merged));
}

// S_<k>,a = f_{k_r,a} S_<k_1..k_{r-1}> - S_<k_1..k_{r-2}, k_{r-1}+k_r>,a.
MultiPoly SuperSchur::bc_recursive(const Composition& k, int branch) const {
  const int r = k.size();
  if (r == 1) return f(k[0], branch);
  std::vector<int> head(k.parts().begin(), k.parts().end() - 1);
  std::vector<int> merged(k.parts().begin(), k.parts().end() - 2);
  merged.push_back(k[r - 2] + k[r - 1]);
  return f(k[r - 1], branch) * border_strip_recursive(Composition(head)) - bc_recursive(Composition(merged), branch);
}

MultiPoly SuperSchur::tilde(const Composition& k) const {
  const int r = k.size();
  if (k.total() < 2) throw std::invalid_argument("starred strip needs at least two boxes");
  if (k[r - 1] > 1) {
    std::vector<int> parts = k.parts();
    parts.back() -= 1;
    return bc(Composition(parts), 0, SchurMethod::determinant);
  }
  std::vector<int> parts(k.parts().begin(), k.parts().end() - 1);
  return bc(Composition(parts), 1, SchurMethod::determinant);
}

// ---------------------------------------------------------------------------

MultiPoly schur_border_strip(const BorderStrip& bs, const SpinAlphabet& a, SchurMethod method) {
  return SuperSchur(a, bs.length()).border_strip(bs.columns(), method);
}

MultiPoly schur_bc(const BorderStrip& bs, const SpinAlphabet& a, int branch, SchurMethod method) {
  return SuperSchur(a, bs.length()).bc(bs.columns(), branch, method);
}

MultiPoly schur_tilde(const BorderStrip& bs, const SpinAlphabet& a, int N) {
  if (bs.length() != N + 1) throw std::invalid_argument("starred strip must have N+1 boxes");
  return SuperSchur(a, bs.length()).tilde(bs.columns());
}

MultiPoly schur_from_tableaux(const Composition& k, const SpinAlphabet& a, int branch) {
  const Motif d = to_motif(k);
  const int L = k.total();
  const int q = a.size();
  const Label star = a.star();
  MultiPoly out(a.m(), a.n());
  MultiPoly::Exponents e(static_cast<std::size_t>(q), 0);
  auto var = [&](Label s) {
    return static_cast<std::size_t>(a.is_boson(s) ? a.sector_index(s) - 1 : a.m() + a.sector_index(s) - 1);
  };
  std::vector<Label> s(static_cast<std::size_t>(L), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == L) {
      const Label last = s.back();
      if (branch == 0 && last > star) return;
      if (branch == 1 && last <= star) return;
      out.add_term(e, 1);
      return;
    }
    for (Label t = 1; t <= q; ++t) {
      if (pos > 0 && delta(s[static_cast<std::size_t>(pos) - 1], t, a) != d[pos - 1]) continue;
      s[static_cast<std::size_t>(pos)] = t;
      ++e[var(t)];
      self(self, pos + 1);
      --e[var(t)];
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------

BigInt schur_border_strip_value(const Composition& k, const SpinAlphabet& a) {
  auto body = [&](int len) { return d_mn(len, a.m(), a.n()); };
  auto A = border_strip_matrix<BigInt>(k, body, body, BigInt(0), BigInt(1));
  return unit_hessenberg_det(A, BigInt(1));
}

BigInt schur_bc_value(const Composition& k, const SpinAlphabet& a, int branch) {
  if (branch != 0 && branch != 1) throw std::invalid_argument("branch must be 0 or 1");
  auto body = [&](int len) { return d_mn(len, a.m(), a.n()); };
  auto top = [&](int len) {
    BigInt restricted = d_mn(len, a.m_eps(), a.n_epsp());
    return branch == 0 ? restricted : BigInt(d_mn(len, a.m(), a.n()) - restricted);
  };
  auto A = border_strip_matrix<BigInt>(k, top, body, BigInt(0), BigInt(1));
  return unit_hessenberg_det(A, BigInt(1));
}

BigInt schur_tilde_value(const Composition& k, const SpinAlphabet& a) {
  const int r = k.size();
  if (k.total() < 2) throw std::invalid_argument("starred strip needs at least two boxes");
  if (k[r - 1] > 1) {
    std::vector<int> parts = k.parts();
    parts.back() -= 1;
    return schur_bc_value(Composition(parts), a, 0);
  }
  std::vector<int> parts(k.parts().begin(), k.parts().end() - 1);
  return schur_bc_value(Composition(parts), a, 1);
}

}  // namespace hsbcn
