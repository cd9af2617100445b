#pragma once

// Compositions, motifs, border strips and (starred) bond vectors.

#include <cstdint>
#include <functional>
#include <ranges>
#include <string>
#include <vector>

#include "hsbcn/types.hpp"

namespace hsbcn {

using Label = int;  // spin label in 1..m+n; the star may be 0

/// su(m|n) label set together with the two reversal signs.
///
/// The default constructor-assigned labelling puts f_1..f_{n_eps'} on
/// 1..n_eps', then b_1..b_{m_eps} on n_eps'+1..star, so that the restricted
/// labels occupy 1..star and b_{m_eps} = star whenever m_eps > 0. Remaining
/// fermions, then remaining bosons, take star+1..m+n in increasing order.
class SpinAlphabet {
 public:
  SpinAlphabet(int m, int n, int eps = +1, int epsp = +1);
  /// Explicit labelling. Throws std::invalid_argument unless B and F
  /// partition 1..m+n and satisfy the restricted-label ordering above.
  SpinAlphabet(int m, int n, int eps, int epsp, std::vector<Label> bosons,
               std::vector<Label> fermions);

  int m() const { return m_; }
  int n() const { return n_; }
  int eps() const { return eps_; }
  int epsp() const { return epsp_; }
  int size() const { return m_ + n_; }

  int m_eps() const { return m_eps_; }
  int n_epsp() const { return n_epsp_; }
  Label star() const { return m_eps_ + n_epsp_; }

  const std::vector<Label>& bosons() const { return bosons_; }
  const std::vector<Label>& fermions() const { return fermions_; }

  bool contains(Label s) const { return s >= 1 && s <= size(); }
  bool is_boson(Label s) const { return kind_.at(check(s)) == 'B'; }
  bool is_fermion(Label s) const { return kind_.at(check(s)) == 'F'; }

  /// 1-based position of s inside B (if boson) or F (if fermion).
  int sector_index(Label s) const { return index_.at(check(s)); }

  /// Spin reversal i(b_a) = b_{m+1-a}, i(f_b) = f_{n+1-b}.
  Label reverse(Label s) const;

  /// Sign of the spin reversal operator on label s: eps for bosons, eps' for fermions.
  int reversal_sign(Label s) const { return is_boson(s) ? eps_ : epsp_; }

  std::string name() const;

 private:
  std::size_t check(Label s) const;
  void finish();

  int m_, n_, eps_, epsp_;
  int m_eps_, n_epsp_;
  std::vector<Label> bosons_, fermions_;
  std::vector<char> kind_;  // indexed by label, slot 0 unused
  std::vector<int> index_;
};

int parity(int k);
int restricted_count(int count, int sign);  // (count + sign*parity(count))/2

// ---------------------------------------------------------------------------

/// Ordered partition k_1..k_r of total with all parts >= 1.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  /// Composition of `total` whose proper partial sums are the set bits of
  /// `mask` (bit i-1 <-> partial sum i, i in 1..total-1).
  static Composition from_mask(int total, std::uint64_t mask);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// K_1 < ... < K_r with K_r = total.
  std::vector<int> partial_sums() const;
  std::uint64_t mask() const;

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

  std::string str() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All 2^(total-1) compositions of total, in ascending mask order. Empty for
/// total == 0.
inline auto compositions(int total) {
  const std::uint64_t count = total >= 1 ? (std::uint64_t{1} << (total - 1)) : 0;
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([total](std::uint64_t mask) { return Composition::from_mask(total, mask); });
}

// ---------------------------------------------------------------------------

/// Binary motif delta_1..delta_L.
class Motif {
 public:
  Motif() = default;
  explicit Motif(std::vector<std::uint8_t> bits);
  static Motif from_mask(int length, std::uint64_t mask);

  int size() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::uint64_t mask() const;

  bool operator==(const Motif&) const = default;
  std::string str() const;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Motif of length L <-> composition of L+1; the 1-bits sit at K_1..K_{r-1}.
Composition to_composition(const Motif& d);
Motif to_motif(const Composition& k);

// ---------------------------------------------------------------------------

struct Cell {
  int row;
  int col;
  bool operator==(const Cell&) const = default;
};

/// Border strip <k_1,...,k_r>: k_i boxes in the i-th column counted right to left.
class BorderStrip {
 public:
  explicit BorderStrip(Composition columns) : columns_(std::move(columns)) {}
  const Composition& columns() const { return columns_; }
  int length() const { return columns_.total(); }

  /// Cells in reading order (right to left, top to bottom). Box i+1 is left
  /// of box i where the motif has a 1, below it where it has a 0. Rows grow
  /// downwards and columns grow to the right; the first box is at (0, 0).
  std::vector<Cell> cells() const;

 private:
  Composition columns_;
};

BorderStrip border_strip_from_motif(const Motif& d);

// ---------------------------------------------------------------------------

/// Bond vector s_1..s_L. A starred vector has L = N+1 and s_L = star.
struct BondVector {
  std::vector<Label> entries;
  bool operator==(const BondVector&) const = default;
  std::string str() const;
};

/// delta(s,t) = 0 if s<t or s=t in B; 1 if s>t or s=t in F.
/// Throws std::domain_error for labels outside 1..m+n.
int delta(Label s, Label t, const SpinAlphabet& a);

/// Comparison against the star, which is always treated as bosonic.
inline int delta_star(Label s, Label star) { return s <= star ? 0 : 1; }

/// True iff delta_i = delta(s_i, s_{i+1}) for every i. Requires |s| = |d|+1.
bool bond_vector_allowed(const BondVector& s, const Motif& d, const SpinAlphabet& a);

/// Same check for a starred vector (|s| = |d|+1, s_last = star), with the
/// final comparison made against a bosonic star.
bool starred_bond_vector_allowed(const BondVector& s, const Motif& d, const SpinAlphabet& a);

/// Number of starred tableaux for the border strip of d, via the
/// transfer-matrix product u^T M_{d_1} ... M_{d_N} e_star.
BigInt count_starred_tableaux(const Motif& d, const SpinAlphabet& a);

/// 64-bit variant; valid whenever (m+n)^N < 2^63.
std::uint64_t count_starred_tableaux_u64(std::uint64_t mask, int length, const SpinAlphabet& a);

/// Calls visit(s) for each starred bond vector allowed for d (depth-first,
/// lexicographic order).
void for_each_starred_tableau(const Motif& d, const SpinAlphabet& a,
                              const std::function<void(const BondVector&)>& visit);

std::vector<BondVector> enumerate_starred_tableaux(const Motif& d, const SpinAlphabet& a);

/// Number of fillings of a column of k boxes with m bosonic (repeatable) and
/// n fermionic (non-repeatable) labels.
BigInt d_mn(int k, int m, int n);

}  // namespace hsbcn
