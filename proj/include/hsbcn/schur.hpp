#pragma once

// Super Schur polynomials for border strips and their two BC_N-type variants.
//
// All polynomials live in the variable space (x_1..x_m | y_1..y_n) of the
// alphabet. Restricted elementary functions E^{(m_eps|n_eps')} use the first
// m_eps bosonic and first n_eps' fermionic variables, i.e. the labels 1..star.

#include <vector>

#include "hsbcn/combinat.hpp"
#include "hsbcn/polynomial.hpp"

namespace hsbcn {

enum class SchurMethod { determinant, recursion, combinatorial };

// h_k(x_1..x_m), e_k(y_1..y_n). e_k = 0 for k > n.
MultiPoly complete_h(int k, int m);
MultiPoly elementary_e(int k, int n);

/// E^{(mu|nu)}_k = sum_j h_j(x_1..x_mu) e_{k-j}(y_1..y_nu), embedded in the
/// (nx|ny) variable space. Requires mu <= nx, nu <= ny.
MultiPoly super_elementary_E(int k, int mu, int nu, int nx, int ny);
MultiPoly super_elementary_E(int k, const SpinAlphabet& a);

/// Determinant of an upper Hessenberg matrix with unit subdiagonal, by the
/// leading-minor recursion p_j = sum_{i<=j} (-1)^{j-i} A[i][j] p_{i-1}.
template <class Ring>
Ring unit_hessenberg_det(const std::vector<std::vector<Ring>>& A, const Ring& one) {
  const std::size_t r = A.size();
  std::vector<Ring> p;
  p.reserve(r + 1);
  p.push_back(one);
  for (std::size_t j = 0; j < r; ++j) {
    Ring acc = A[j][j] * p[j];
    for (std::size_t i = j; i-- > 0;) {
      Ring term = A[i][j] * p[i];
      if ((j - i) % 2 == 1) acc -= term;
      else acc += term;
    }
    p.push_back(std::move(acc));
  }
  return p[r];
}

/// Builds the r x r border-strip matrix: row 0 holds top(k_r), top(k_{r-1}+k_r),
/// ..., top(k_1+...+k_r); rows i >= 1 hold 1 on the subdiagonal and
/// body(k_{r-j}+...+k_{r-i}) in column j >= i.
template <class Ring, class Top, class Body>
std::vector<std::vector<Ring>> border_strip_matrix(const Composition& k, Top&& top, Body&& body,
                                                   const Ring& zero, const Ring& one) {
  const int r = k.size();
  std::vector<std::vector<Ring>> A(static_cast<std::size_t>(r), std::vector<Ring>(static_cast<std::size_t>(r), zero));
  // sum of k_{lo..hi}, 1-based inclusive
  auto span = [&](int lo, int hi) {
    int s = 0;
    for (int t = lo; t <= hi; ++t) s += k[t - 1];
    return s;
  };
  for (int i = 0; i < r; ++i) {
    if (i >= 1) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = one;
    for (int j = i; j < r; ++j) {
      const int len = span(r - j, r - i);
      A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == 0 ? top(len) : body(len);
    }
  }
  return A;
}

/// Precomputed E^{(m|n)}_k and E^{(m_eps|n_eps')}_k up to a maximum degree.
/// Immutable after construction and safe to share between threads.
class SuperSchur {
 public:
  SuperSchur(const SpinAlphabet& a, int max_degree);

  const SpinAlphabet& alphabet() const { return a_; }
  int max_degree() const { return max_degree_; }

  const MultiPoly& E(int k) const;             // E^{(m|n)}_k
  const MultiPoly& E_restricted(int k) const;  // E^{(m_eps|n_eps')}_k
  MultiPoly f(int k, int branch) const;        // f_{k,0} = E^eps_k, f_{k,1} = E_k - E^eps_k
  MultiPoly one() const { return MultiPoly::constant(a_.m(), a_.n(), 1); }
  MultiPoly zero() const { return MultiPoly(a_.m(), a_.n()); }

  MultiPoly border_strip(const Composition& k, SchurMethod method) const;
  MultiPoly bc(const Composition& k, int branch, SchurMethod method) const;
  MultiPoly tilde(const Composition& k_plus_one) const;

 private:
  MultiPoly border_strip_recursive(const Composition& k) const;
  MultiPoly bc_recursive(const Composition& k, int branch) const;

  SpinAlphabet a_;
  int max_degree_;
  std::vector<MultiPoly> E_, Eeps_;
};

MultiPoly schur_border_strip(const BorderStrip& bs, const SpinAlphabet& a,
                             SchurMethod method = SchurMethod::determinant);

/// S_{<k>,0} (branch 0) or S_{<k>,1} (branch 1).
MultiPoly schur_bc(const BorderStrip& bs, const SpinAlphabet& a, int branch,
                   SchurMethod method = SchurMethod::determinant);

/// Starred-strip polynomial for a composition of N+1: S_{<k_1..k_r - 1>,0}
/// when k_r > 1 and S_{<k_1..k_{r-1}>,1} when k_r = 1. Throws
/// std::invalid_argument if the total is not N+1 for the given N.
MultiPoly schur_tilde(const BorderStrip& bs, const SpinAlphabet& a, int N);

/// Sum over tableaux of the strip of x^{t_b} y^{t_f}. branch = -1 for no
/// restriction, 0 for last box <= star, 1 for last box > star.
MultiPoly schur_from_tableaux(const Composition& k, const SpinAlphabet& a, int branch);

// Values at (1^m, 1^n), computed over big integers without materializing
// polynomials.
BigInt schur_border_strip_value(const Composition& k, const SpinAlphabet& a);
BigInt schur_bc_value(const Composition& k, const SpinAlphabet& a, int branch);
BigInt schur_tilde_value(const Composition& k_plus_one, const SpinAlphabet& a);

}  // namespace hsbcn
