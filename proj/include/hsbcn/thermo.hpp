#pragma once

// Thermodynamic limit of the su(1|1) chain.

namespace hsbcn {

struct ThermoParams {
  double gamma = 1.0;  // >= 1
  double T = 1.0;      // > 0
  void check() const;  // throws std::domain_error
};

/// phi(p) = |p|(2 pi gamma - |p|)/(2 pi^2) on |p| <= pi.
double phi(double p, double gamma);

struct FreeEnergy {
  double value;
  double error;  // estimated absolute quadrature error
};

/// f(T) = -(T/pi) int_0^pi log(1 + exp(-phi(p)/T)) dp by adaptive 15-point
/// Gauss-Legendre panels. Throws std::runtime_error if tol is not reached.
FreeEnergy free_energy(const ThermoParams& g, double tol = 1e-10);

/// -(T/N) log Z_N(q), q = exp(-1/(N^2 T)), from the su(1|1) closed forms in
/// log space. Requires N >= 2 and bbar > 0.
double finite_n_free_energy(int N, int eps, int epsp, double bbar, double T);

}  // namespace hsbcn
