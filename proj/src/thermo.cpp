#include "hsbcn/thermo.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsbcn {

void ThermoParams::check() const {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma must be >= 1");
  if (!(T > 0.0)) throw std::domain_error("temperature must be positive");
}

double phi(double p, double gamma) {
  constexpr double pi = std::numbers::pi;
  const double ap = std::abs(p);
  if (ap > pi) throw std::domain_error("momentum outside [-pi, pi]");
  return ap * (2 * pi * gamma - ap) / (2 * pi * pi);
}

namespace {

// 15-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {0.0,
                                          0.2011940939974345223006283,
                                          0.3941513470775633698972074,
                                          0.5709721726085388475372267,
                                          0.7244177313601700474161861,
                                          0.8482065834104272162006483,
                                          0.9372733924007059043077589,
                                          0.9879925180204854284895657};
constexpr std::array<double, 8> kWeights = {0.2025782419255612728806202,
                                            0.1984314853271115764561183,
                                            0.1861610000155622110268006,
                                            0.1662692058169939335532009,
                                            0.1395706779261543144478048,
                                            0.1071592204671719350118695,
                                            0.0703660474881081247092674,
                                            0.0307532419961172683546284};

template <class F>
double gauss15(F&& f, double a, double b) {
  const double c = (a + b) / 2, h = (b - a) / 2;
  double s = kWeights[0] * f(c);
  for (std::size_t k = 1; k < kNodes.size(); ++k) s += kWeights[k] * (f(c - h * kNodes[k]) + f(c + h * kNodes[k]));
  return s * h;
}

template <class F>
double adaptive(F&& f, double a, double b, double whole, double tol, int depth, double& err) {
  const double m = (a + b) / 2;
  const double left = gauss15(f, a, m), right = gauss15(f, m, b);
  const double diff = std::abs(left + right - whole);
  if (diff <= tol) {
    err += diff;
    return left + right;
  }
  if (depth == 0) throw std::runtime_error("quadrature did not reach the requested tolerance");
  return adaptive(f, a, m, left, tol / 2, depth - 1, err) + adaptive(f, m, b, right, tol / 2, depth - 1, err);
}

// log(1 + exp(-x)) for x >= 0 without overflow or cancellation.
double log1p_exp_neg(double x) { return std::log1p(std::exp(-x)); }

}  // namespace

FreeEnergy free_energy(const ThermoParams& g, double tol) {
  g.check();
  constexpr double pi = std::numbers::pi;
  auto integrand = [&](double p) { return log1p_exp_neg(phi(p, g.gamma) / g.T); };
  // f = -(T/pi) I, so the tolerance on I is tol * pi / T.
  const double itol = tol * pi / g.T;
  double err = 0;
  const double I = adaptive(integrand, 0.0, pi, gauss15(integrand, 0.0, pi), itol, 40, err);
  return {-g.T / pi * I, g.T / pi * err};
}

double finite_n_free_energy(int N, int eps, int epsp, double bbar, double T) {
  if (N < 2) throw std::domain_error("finite-N free energy needs N >= 2");
  if (!(bbar > 0)) throw std::domain_error("bbar must be positive");
  if (!(T > 0)) throw std::domain_error("temperature must be positive");
  if ((eps != 1 && eps != -1) || (epsp != 1 && epsp != -1)) throw std::domain_error("signs must be +1 or -1");
  const double scale = 1.0 / (static_cast<double>(N) * N * T);  // -log q
  auto en = [&](int j) { return j * (2 * bbar + 2.0 * N - j - 1) / 2; };
  auto log_one_plus = [&](int j) { return log1p_exp_neg(en(j) * scale); };
  double logZ = 0;
  if (eps == 1 && epsp == -1) {
    for (int i = 1; i <= N; ++i) logZ += log_one_plus(i);
  } else if (eps == 1 || epsp == -1) {
    // Z++ = 2 prod_{i<N} (1 + q^E(i)); Z-- = q^E(N) Z++.
    logZ = std::log(2.0);
    for (int i = 1; i < N; ++i) logZ += log_one_plus(i);
    if (eps == -1) logZ -= en(N) * scale;
  } else {
    // Z-+ = 2 (q^E(N-1) + q^E(N)) prod_{i<N-1} (1 + q^E(i)).
    logZ = std::log(2.0) - en(N - 1) * scale + log1p_exp_neg((en(N) - en(N - 1)) * scale);
    for (int i = 1; i < N - 1; ++i) logZ += log_one_plus(i);
  }
  return -T / N * logZ;
}

}  // namespace hsbcn
