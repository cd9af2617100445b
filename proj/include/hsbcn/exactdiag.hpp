#pragma once

// Brute-force oracle: chain sites, spin operators, the dense Hamiltonian and
// comparison of its eigenvalues to the predicted levels.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hsbcn/combinat.hpp"
#include "hsbcn/spectrum.hpp"

namespace hsbcn {

/// P_N^{(a,b)}(x) and its derivative by the three-term recurrence.
struct JacobiValue {
  long double p;
  long double dp;
};
JacobiValue jacobi_p(int N, long double a, long double b, long double x);

/// Largest absolute coefficient of P_N^{(a,b)} in the monomial basis.
double jacobi_coefficient_scale(int N, double a, double b);

struct SiteSet {
  int N = 0;
  double beta = 0, betap = 0;
  std::vector<double> thetas;  // increasing, in (0, pi/2)
  double max_residual = 0;     // max_i |P_N(cos 2 theta_i)| / coefficient scale
};

/// Roots of P_N^{(beta-1, beta'-1)}(cos 2 theta) in (0, pi/2).
/// Throws std::domain_error for non-positive parameters.
SiteSet chain_sites(int N, double beta, double betap);

// ---------------------------------------------------------------------------

using SpinConfig = std::vector<Label>;  // s_1..s_N, entries in 1..m+n

struct SignedConfig {
  SpinConfig s;
  int sign = 1;
  bool operator==(const SignedConfig&) const = default;
};

/// Basis |s_1...s_N>: index = sum (s_i - 1) (m+n)^{N-i}.
class SpinBasis {
 public:
  SpinBasis(int N, int q);
  int sites() const { return N_; }
  std::uint64_t dimension() const { return dim_; }
  std::uint64_t encode(const SpinConfig& s) const;
  SpinConfig decode(std::uint64_t index) const;

 private:
  int N_, q_;
  std::uint64_t dim_;
};

/// Graded permutation S_ij (1-based sites, i != j).
SignedConfig apply_Sij(int i, int j, const SignedConfig& s, const SpinAlphabet& a);
/// Spin reversal S_i.
SignedConfig apply_Si(int i, const SignedConfig& s, const SpinAlphabet& a);
/// S~_ij = S_i S_j S_ij.
SignedConfig apply_Sij_tilde(int i, int j, const SignedConfig& s, const SpinAlphabet& a);

/// Dense Hamiltonian on the full spin space. Requires p.beta and p.betap to
/// be set and to match the sites. Throws std::length_error if the dimension
/// exceeds cap.
Eigen::MatrixXd build_hamiltonian(const ChainParams& p, const SiteSet& sites, std::uint64_t cap = 4096);

struct EigenResult {
  std::vector<double> values;  // ascending
  double residual = 0;         // max |H v - lambda v| / max(1, |H|)
};

/// Full symmetric eigensolve. Throws std::runtime_error on failure or when
/// the residual exceeds 1e-12 relative to the matrix norm.
EigenResult eigen_spectrum(const Eigen::MatrixXd& H);

// ---------------------------------------------------------------------------

struct Cluster {
  double energy;   // mean
  std::size_t size;
  double spread;   // max - min
};

/// Clusters sorted eigenvalues: a gap > 1e-6(1+|E|) starts a new cluster.
/// Gaps in (1e-9(1+|E|), 1e-6(1+|E|)] are counted in ambiguous_gaps.
std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& sorted, std::size_t* ambiguous_gaps = nullptr);

struct LevelVerdict {
  double predicted_energy;
  BigInt predicted_deg;
  double numeric_energy;   // NaN if no cluster paired
  std::size_t numeric_deg;
  bool match;
};

struct ComparisonReport {
  std::vector<Cluster> clusters;
  std::vector<MergedLevel> predicted;
  std::vector<LevelVerdict> verdicts;
  std::size_t ambiguous_gaps = 0;
  double max_energy_error = 0;
  bool indeterminate = false;
  bool pass = false;
  std::string message;
};

ComparisonReport compare_spectra(const std::vector<double>& numeric, const QPoly& predicted, const Rational& bbar);

}  // namespace hsbcn
