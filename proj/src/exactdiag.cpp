#include "hsbcn/exactdiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hsbcn {

JacobiValue jacobi_p(int N, long double a, long double b, long double x) {
  if (N < 0) throw std::invalid_argument("degree must be nonnegative");
  // P_n^{(a,b)} and P_{n-1}^{(a+1,b+1)} for the derivative.
  auto eval = [x](int n, long double al, long double be) {
    if (n == 0) return 1.0L;
    long double p0 = 1.0L;
    long double p1 = (al + 1) + (al + be + 2) * (x - 1) / 2;
    for (int k = 2; k <= n; ++k) {
      const long double s = 2.0L * k + al + be;
      const long double c1 = 2.0L * k * (k + al + be) * (s - 2);
      const long double c2 = (s - 1) * (s * (s - 2) * x + al * al - be * be);
      const long double c3 = 2.0L * (k + al - 1) * (k + be - 1) * s;
      const long double p2 = (c2 * p1 - c3 * p0) / c1;
      p0 = p1;
      p1 = p2;
    }
    return p1;
  };
  JacobiValue v;
  v.p = eval(N, a, b);
  v.dp = N == 0 ? 0.0L : (N + a + b + 1) / 2 * eval(N - 1, a + 1, b + 1);
  return v;
}

double jacobi_coefficient_scale(int N, double a, double b) {
  // Same recurrence on monomial coefficient vectors.
  std::vector<double> p0{1.0}, p1;
  if (N == 0) return 1.0;
  p1 = {(a + 1) - (a + b + 2) / 2, (a + b + 2) / 2};
  for (int k = 2; k <= N; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2);
    const double c2x = (s - 1) * s * (s - 2), c20 = (s - 1) * (a * a - b * b);
    const double c3 = 2.0 * (k + a - 1) * (k + b - 1) * s;
    std::vector<double> p2(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t i = 0; i < p1.size(); ++i) {
      p2[i] += c20 * p1[i];
      p2[i + 1] += c2x * p1[i];
    }
    for (std::size_t i = 0; i < p0.size(); ++i) p2[i] -= c3 * p0[i];
    for (auto& c : p2) c /= c1;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  double m = 0;
  for (double c : p1) m = std::max(m, std::abs(c));
  return m;
}

SiteSet chain_sites(int N, double beta, double betap) {
  if (N < 1) throw std::domain_error("N must be at least 1");
  if (!(beta > 0) || !(betap > 0)) throw std::domain_error("beta and beta' must be positive");
  const double a = beta - 1, b = betap - 1;

  // Monic Jacobi recurrence for the weight (1-x)^a (1+x)^b.
  Eigen::VectorXd diag(N), sub(std::max(N - 1, 0));
  for (int k = 0; k < N; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = k == 0 ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
  }
  for (int k = 1; k < N; ++k) {
    const double s = 2.0 * k + a + b;
    const double bk = k == 1 ? 4 * (1 + a) * (1 + b) / ((2 + a + b) * (2 + a + b) * (3 + a + b))
                             : 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
    sub(k - 1) = std::sqrt(bk);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigensolve failed");

  SiteSet out;
  out.N = N;
  out.beta = beta;
  out.betap = betap;
  const double scale = jacobi_coefficient_scale(N, a, b);
  for (int k = 0; k < N; ++k) {
    const double x = std::clamp(es.eigenvalues()(k), -1.0, 1.0);
    long double th = std::acos(static_cast<long double>(x)) / 2;
    // Newton on g(theta) = P_N(cos 2 theta).
    for (int it = 0; it < 20; ++it) {
      const JacobiValue v = jacobi_p(N, a, b, std::cos(2 * th));
      const long double dg = -2 * std::sin(2 * th) * v.dp;
      if (dg == 0) break;
      const long double step = v.p / dg;
      th -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    out.thetas.push_back(static_cast<double>(th));
  }
  std::sort(out.thetas.begin(), out.thetas.end());
  for (int k = 0; k < N; ++k) {
    const double th = out.thetas[static_cast<std::size_t>(k)];
    if (!(th > 0 && th < std::numbers::pi / 2)) throw std::runtime_error("site outside (0, pi/2)");
    if (k > 0 && !(th > out.thetas[static_cast<std::size_t>(k) - 1])) throw std::runtime_error("sites not strictly increasing");
    const long double r = std::abs(jacobi_p(N, a, b, std::cos(2.0L * th)).p);
    out.max_residual = std::max(out.max_residual, static_cast<double>(r) / scale);
  }
  return out;
}

// ---------------------------------------------------------------------------

SpinBasis::SpinBasis(int N, int q) : N_(N), q_(q), dim_(1) {
  if (N < 1 || q < 1) throw std::invalid_argument("basis needs N >= 1 and q >= 1");
  for (int i = 0; i < N; ++i) {
    if (dim_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q))
      throw std::overflow_error("basis dimension overflows 64 bits");
    dim_ *= static_cast<std::uint64_t>(q);
  }
}

std::uint64_t SpinBasis::encode(const SpinConfig& s) const {
  if (static_cast<int>(s.size()) != N_) throw std::invalid_argument("configuration length mismatch");
  std::uint64_t idx = 0;
  for (Label v : s) {
    if (v < 1 || v > q_) throw std::domain_error("label out of range");
    idx = idx * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(v - 1);
  }
  return idx;
}

SpinConfig SpinBasis::decode(std::uint64_t index) const {
  if (index >= dim_) throw std::out_of_range("basis index out of range");
  SpinConfig s(static_cast<std::size_t>(N_));
  for (int i = N_ - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<Label>(index % static_cast<std::uint64_t>(q_)) + 1;
    index /= static_cast<std::uint64_t>(q_);
  }
  return s;
}

SignedConfig apply_Sij(int i, int j, const SignedConfig& in, const SpinAlphabet& a) {
  const int N = static_cast<int>(in.s.size());
  if (i == j || i < 1 || j < 1 || i > N || j > N) throw std::invalid_argument("invalid site pair");
  if (i > j) std::swap(i, j);
  SignedConfig out = in;
  const Label si = in.s[static_cast<std::size_t>(i - 1)], sj = in.s[static_cast<std::size_t>(j - 1)];
  const bool fi = a.is_fermion(si), fj = a.is_fermion(sj);
  int nu = 0;
  if (fi && fj) {
    nu = 1;
  } else if (fi != fj) {
    for (int k = i + 1; k < j; ++k) nu += a.is_fermion(in.s[static_cast<std::size_t>(k - 1)]);
  }
  std::swap(out.s[static_cast<std::size_t>(i - 1)], out.s[static_cast<std::size_t>(j - 1)]);
  if (nu % 2) out.sign = -out.sign;
  return out;
}

SignedConfig apply_Si(int i, const SignedConfig& in, const SpinAlphabet& a) {
  const int N = static_cast<int>(in.s.size());
  if (i < 1 || i > N) throw std::invalid_argument("invalid site");
  SignedConfig out = in;
  Label& v = out.s[static_cast<std::size_t>(i - 1)];
  out.sign *= a.reversal_sign(v);
  v = a.reverse(v);
  return out;
}

SignedConfig apply_Sij_tilde(int i, int j, const SignedConfig& s, const SpinAlphabet& a) {
  return apply_Si(i, apply_Si(j, apply_Sij(i, j, s, a), a), a);
}

Eigen::MatrixXd build_hamiltonian(const ChainParams& p, const SiteSet& sites, std::uint64_t cap) {
  if (!p.beta || !p.betap) throw std::invalid_argument("Hamiltonian needs beta and beta'");
  const int N = p.N;
  if (sites.N != N || static_cast<int>(sites.thetas.size()) != N) throw std::invalid_argument("site set does not match N");
  const double beta = to_double(*p.beta), betap = to_double(*p.betap);
  if (std::abs(beta - sites.beta) > 1e-14 || std::abs(betap - sites.betap) > 1e-14)
    throw std::invalid_argument("site set computed for different (beta, beta')");
  const SpinAlphabet& a = p.alphabet;
  const SpinBasis basis(N, a.size());
  if (basis.dimension() > cap) {
    std::ostringstream os;
    os << "Hilbert space dimension " << basis.dimension() << " exceeds cap " << cap;
    throw std::length_error(os.str());
  }
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  const auto& th = sites.thetas;

  std::vector<std::tuple<int, int, double, double>> pairs;  // i, j, w-, w+
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      const double sm = std::sin(th[static_cast<std::size_t>(i - 1)] - th[static_cast<std::size_t>(j - 1)]);
      const double sp = std::sin(th[static_cast<std::size_t>(i - 1)] + th[static_cast<std::size_t>(j - 1)]);
      pairs.emplace_back(i, j, 0.25 / (sm * sm), 0.25 / (sp * sp));
    }
  std::vector<double> wsite(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    const double s = std::sin(th[static_cast<std::size_t>(i)]), c = std::cos(th[static_cast<std::size_t>(i)]);
    wsite[static_cast<std::size_t>(i)] = 0.125 * (beta / (s * s) + betap / (c * c));
  }

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const SignedConfig s{basis.decode(static_cast<std::uint64_t>(col)), 1};
    for (const auto& [i, j, wm, wp] : pairs) {
      H(col, col) += wm + wp;
      const SignedConfig t1 = apply_Sij(i, j, s, a);
      H(static_cast<Eigen::Index>(basis.encode(t1.s)), col) -= wm * t1.sign;
      const SignedConfig t2 = apply_Sij_tilde(i, j, s, a);
      H(static_cast<Eigen::Index>(basis.encode(t2.s)), col) -= wp * t2.sign;
    }
    for (int i = 1; i <= N; ++i) {
      const double w = wsite[static_cast<std::size_t>(i - 1)];
      H(col, col) += w;
      const SignedConfig t = apply_Si(i, s, a);
      H(static_cast<Eigen::Index>(basis.encode(t.s)), col) -= w * t.sign;
    }
  }
  return H;
}

EigenResult eigen_spectrum(const Eigen::MatrixXd& H) {
  if (H.rows() != H.cols()) throw std::invalid_argument("matrix must be square");
  EigenResult r;
  if (H.rows() == 0) return r;
  const double asym = (H - H.transpose()).cwiseAbs().maxCoeff();
  const double norm = std::max(1.0, H.cwiseAbs().maxCoeff());
  if (asym > 1e-12 * norm) throw std::invalid_argument("matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const Eigen::MatrixXd& V = es.eigenvectors();
  const Eigen::VectorXd& w = es.eigenvalues();
  const double opnorm = std::max(1.0, w.cwiseAbs().maxCoeff());
  r.residual = (H * V - V * w.asDiagonal()).cwiseAbs().maxCoeff() / opnorm;
  if (r.residual > 1e-12) {
    std::ostringstream os;
    os << "eigen residual " << r.residual << " exceeds 1e-12";
    throw std::runtime_error(os.str());
  }
  r.values.assign(w.data(), w.data() + w.size());
  std::sort(r.values.begin(), r.values.end());
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& v, std::size_t* ambiguous_gaps) {
  std::vector<Cluster> out;
  std::size_t ambiguous = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    double sum = 0;
    for (std::size_t k = start; k < end; ++k) sum += v[k];
    out.push_back({sum / static_cast<double>(end - start), end - start, v[end - 1] - v[start]});
    start = end;
  };
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] < v[k - 1]) throw std::invalid_argument("eigenvalues must be sorted");
    const double gap = v[k] - v[k - 1];
    const double scale = 1.0 + std::abs(v[k]);
    if (gap > 1e-6 * scale) flush(k);
    else if (gap > 1e-9 * scale) ++ambiguous;
  }
  if (!v.empty()) flush(v.size());
  if (ambiguous_gaps) *ambiguous_gaps = ambiguous;
  return out;
}

ComparisonReport compare_spectra(const std::vector<double>& numeric, const QPoly& predicted, const Rational& bbar) {
  ComparisonReport rep;
  const BigInt total = predicted.at_one();
  if (BigInt(numeric.size()) != total) {
    std::ostringstream os;
    os << "eigenvalue count " << numeric.size() << " differs from predicted dimension " << total;
    rep.message = os.str();
    return rep;
  }
  rep.clusters = cluster_eigenvalues(numeric, &rep.ambiguous_gaps);
  rep.predicted = merge_levels(predicted, to_double(bbar));
  rep.indeterminate = rep.ambiguous_gaps > 0;

  bool all = rep.clusters.size() == rep.predicted.size();
  const std::size_t L = std::max(rep.clusters.size(), rep.predicted.size());
  for (std::size_t k = 0; k < L; ++k) {
    LevelVerdict lv{std::numeric_limits<double>::quiet_NaN(), 0, std::numeric_limits<double>::quiet_NaN(), 0, false};
    if (k < rep.predicted.size()) {
      lv.predicted_energy = rep.predicted[k].energy;
      lv.predicted_deg = rep.predicted[k].deg;
    }
    if (k < rep.clusters.size()) {
      lv.numeric_energy = rep.clusters[k].energy;
      lv.numeric_deg = rep.clusters[k].size;
    }
    if (k < rep.predicted.size() && k < rep.clusters.size()) {
      const double err = std::abs(lv.numeric_energy - lv.predicted_energy);
      rep.max_energy_error = std::max(rep.max_energy_error, err);
      lv.match = err < 1e-8 && BigInt(lv.numeric_deg) == lv.predicted_deg;
    }
    all = all && lv.match;
    rep.verdicts.push_back(lv);
  }
  rep.pass = all && !rep.indeterminate;
  std::ostringstream os;
  if (rep.indeterminate) os << rep.ambiguous_gaps << " ambiguous eigenvalue gap(s); ";
  os << rep.clusters.size() << " clusters vs " << rep.predicted.size() << " predicted levels, max |dE| = "
     << rep.max_energy_error << (rep.pass ? ": match" : ": MISMATCH");
  rep.message = os.str();
  return rep;
}

}  // namespace hsbcn
