#pragma once

// Chain parameters, dispersion relations and the partition-function routes.

#include <optional>
#include <string>
#include <vector>

#include "hsbcn/combinat.hpp"
#include "hsbcn/polynomial.hpp"
#include "hsbcn/schur.hpp"

namespace hsbcn {

struct ChainParams {
  int N = 1;
  SpinAlphabet alphabet{1, 0};
  Rational bbar{1};
  std::optional<Rational> beta, betap;

  ChainParams(int N_, SpinAlphabet a, Rational bbar_);
  static ChainParams from_betas(int N, SpinAlphabet a, Rational beta, Rational betap);

  void check() const;  // throws std::domain_error
};

/// E(j) = j*bbar + j(2N-j-1)/2 as an exponent pair. Throws std::domain_error
/// unless 1 <= j <= N.
QExponent dispersion(int j, int N);
inline QExponent dispersion(int j, const ChainParams& p) { return dispersion(j, p.N); }

/// E_A(i) = i(N-i).
std::int64_t dispersion_A(int i, int N);

/// Sum of E(K_i) over the proper partial sums of k.
QExponent motif_energy(const Composition& k, int N);
QExponent motif_energy(const Motif& d);

/// F(q,k) = prod_{i<r} q^{E(K_i)} prod_{K' not a partial sum} (1 - q^{E(K')}).
/// Used only for N <= 20.
QPoly freezing_factor(const Composition& k, int N);

QPoly z_freezing(const ChainParams& p);

/// Motif sweep over all 2^N motifs; threads = 0 means hardware concurrency.
QPoly z_motif(const ChainParams& p, unsigned threads = 1);

QPoly z_branched(const ChainParams& p);

enum class GeneralizedForm { sum, schur };
QMultiPoly z_generalized(const ChainParams& p, GeneralizedForm form);

/// A-type chain over N sites; exponents carry alpha = 0.
QPoly z_a_type(int N, const SpinAlphabet& a);

/// Closed forms for su(1|1). Throws std::domain_error for m != 1 or n != 1
/// and for (eps, epsp) = (-1, +1) with N < 2.
QPoly su11_closed_form(int N, int eps, int epsp);

// ---------------------------------------------------------------------------

struct MergedLevel {
  double energy;
  BigInt deg;
  std::vector<QExponent> members;
};

/// Groups exact levels whose numeric energies at bbar are within
/// rel_tol*(1+|E|) of their neighbour, in ascending energy order.
std::vector<MergedLevel> merge_levels(const QPoly& levels, double bbar, double rel_tol = 1e-9);

struct SpectrumTable {
  ChainParams params;
  QPoly levels;

  BigInt total_degeneracy() const { return levels.at_one(); }
  std::string to_json(int indent = -1) const;
  static SpectrumTable from_json(const std::string& text);
  bool operator==(const SpectrumTable& o) const;
};

}  // namespace hsbcn
