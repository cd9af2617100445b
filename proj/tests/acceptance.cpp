// Acceptance checks. One line per criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hsbcn/exactdiag.hpp"
#include "hsbcn/spectrum.hpp"
#include "hsbcn/thermo.hpp"
#include "hsbcn/verify.hpp"

using namespace hsbcn;

namespace {

// Pinned limits.
constexpr double kTable2Seconds = 0.1;
constexpr double kSweepSeconds = 60.0;
constexpr double kDiagSeconds = 300.0;
constexpr double kLargeChainSeconds = 30.0;
constexpr int kWeylProbes = 1000;
constexpr double kSiteTol = 1e-12;
constexpr double kHotTol = 1e-3;
constexpr double kColdTol = 1e-2;
constexpr double kSignSpreadTol = 1e-2;
constexpr double kGamma = 1.5;

int failures = 0;

void report(int k, bool pass, const std::string& what, double seconds) {
  std::printf("[%s] criterion %d: %s (%.3f s)\n", pass ? "PASS" : "FAIL", k, what.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

void sub(int k, const char* label, bool pass, const std::string& detail) {
  std::printf("    %s criterion %d.%s: %s\n", pass ? "ok  " : "FAIL", k, label, detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QPoly levels(std::initializer_list<std::tuple<int, int, int>> list) {
  QPoly z;
  for (const auto& [a, c, d] : list) z.add_term({a, c}, d);
  return z;
}

ChainParams su12(int N, int eps, const Rational& bbar = Rational(1)) {
  return ChainParams(N, SpinAlphabet(1, 2, eps, 1), bbar);
}

void criterion1() {
  const QPoly expect = levels({{0, 0, 2}, {1, 2, 4}, {2, 3, 6}, {3, 3, 2}, {3, 5, 6}, {4, 5, 4}, {5, 6, 2}, {6, 8, 1}});
  const auto t0 = std::chrono::steady_clock::now();
  const QPoly z = z_motif(su12(3, 1));
  const double s = seconds_since(t0);
  report(1, z == expect && s < kTable2Seconds, "su(1|2) N=3 eps=+1 levels " + z.str(), s);
}

void criterion2() {
  const QPoly expect = levels({{2, 3, 4}, {3, 3, 4}, {3, 5, 5}, {4, 5, 8}, {5, 6, 4}, {6, 8, 2}});
  const auto t0 = std::chrono::steady_clock::now();
  const QPoly z = z_motif(su12(3, -1));
  report(2, z == expect, "su(1|2) N=3 eps=-1 levels " + z.str(), seconds_since(t0));
}

// Criteria 3 and 4 share one sweep.
void criteria3and4() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t routes_cases = 0, norm_cases = 0;
  std::string route_bad, norm_bad;
  auto note = [](std::string& slot, const ChainParams& p, const char* what) {
    if (slot.empty()) slot = p.alphabet.name() + " N=" + std::to_string(p.N) + " " + what;
  };
  for (const SpinAlphabet& a : alphabets_upto(4))
    for (int N = 1; N <= 8; ++N) {
      const ChainParams p(N, a, Rational(1));
      const BigInt total = ipow(a.size(), N);
      const QPoly zm = z_motif(p), zf = z_freezing(p), zb = z_branched(p);
      ++routes_cases;
      if (!(zm == zf)) note(route_bad, p, "freezing != motif");
      if (!(zm == zb)) note(route_bad, p, "branched != motif");
      for (const QPoly* z : {&zm, &zf, &zb}) {
        ++norm_cases;
        if (z->at_one() != total) note(norm_bad, p, "Z(1) != (m+n)^N");
      }
      if (N <= 6 && a.size() <= 3) {
        const QMultiPoly gs = z_generalized(p, GeneralizedForm::sum);
        const QMultiPoly gt = z_generalized(p, GeneralizedForm::schur);
        ++routes_cases;
        if (!(gs == gt)) note(route_bad, p, "generalized sum != schur");
        if (!(gs.at_ones() == zm)) note(route_bad, p, "generalized does not specialize to motif");
        ++norm_cases;
        if (gs.at_ones().at_one() != total) note(norm_bad, p, "generalized Z(1) != (m+n)^N");
      }
    }
  const double s = seconds_since(t0);
  report(3, route_bad.empty() && s < kSweepSeconds,
         std::to_string(routes_cases) + " route comparisons" + (route_bad.empty() ? "" : ", first mismatch " + route_bad), s);
  report(4, norm_bad.empty(), std::to_string(norm_cases) + " evaluations at q=1" + (norm_bad.empty() ? "" : ", " + norm_bad),
         s);
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<Rational, Rational>> betas = {{Rational(1), Rational(3)},
                                                            {parse_rational("1/2"), parse_rational("1/2")}};
  std::uint64_t cases = 0;
  std::string bad;
  for (int size = 1; size <= 3; ++size)
    for (int m = 0; m <= size; ++m)
      for (int N = 1; N <= 6; ++N)
        for (const CheckResult& r : verify_diag(N, m, size - m, betas)) {
          cases += r.cases;
          if (!r.pass && bad.empty()) bad = r.counterexample;
        }
  const double s = seconds_since(t0);
  report(5, bad.empty() && s < kDiagSeconds,
         std::to_string(cases) + " diagonalizations" + (bad.empty() ? "" : ", first failure " + bad), s);
}

void criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = verify_weyl(6, 4, kWeylProbes);
  bool pass = !results.empty();
  std::string detail;
  for (const CheckResult& r : results) {
    pass = pass && r.pass && r.cases >= static_cast<std::uint64_t>(kWeylProbes);
    if (!r.pass && detail.empty()) detail = ", " + r.name + " fails at " + r.counterexample;
  }
  report(6, pass, std::to_string(results.size()) + " relations x " + std::to_string(kWeylProbes) + " probes" + detail,
         seconds_since(t0));
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  std::string bad;
  for (int eps : {1, -1})
    for (int epsp : {1, -1})
      // the (-,+) product form needs N >= 2
      for (int N = (eps == -1 && epsp == 1) ? 2 : 1; N <= 12; ++N) {
        ++cases;
        const QPoly z = z_motif(ChainParams(N, SpinAlphabet(1, 1, eps, epsp), Rational(1)));
        if (!(su11_closed_form(N, eps, epsp) == z) && bad.empty())
          bad = "N=" + std::to_string(N) + " eps=" + std::to_string(eps) + " eps'=" + std::to_string(epsp);
      }
  report(7, bad.empty(), std::to_string(cases) + " closed forms" + (bad.empty() ? "" : ", mismatch at " + bad),
         seconds_since(t0));
}

void criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  const int N = 15;
  std::vector<MergedLevel> merged[2];
  for (int i : {0, 1}) {
    const ChainParams p = su12(N, i == 0 ? 1 : -1);
    merged[i] = merge_levels(z_motif(p, 0), to_double(p.bbar));
  }
  const double s = seconds_since(t0);

  bool pass = s < kLargeChainSeconds;
  const BigInt expect_total = ipow(3, N);
  for (int i : {0, 1}) {
    BigInt total = 0, peak = 0;
    for (const MergedLevel& l : merged[i]) {
      total += l.deg;
      if (l.deg > peak) peak = l.deg;
    }
    const char* sign = i == 0 ? "eps=+1" : "eps=-1";
    const bool sum_ok = total == expect_total, peak_ok = peak >= 10000 && peak <= 100000;
    sub(8, i == 0 ? "sum+" : "sum-", sum_ok, std::string(sign) + " total degeneracy " + to_string(total));
    sub(8, i == 0 ? "peak+" : "peak-", peak_ok,
        std::string(sign) + " peak degeneracy " + to_string(peak) + " in [1e4, 1e5]");
    pass = pass && sum_ok && peak_ok;
  }
  const MergedLevel &plo = merged[0].front(), &phi = merged[0].back();
  const MergedLevel &mlo = merged[1].front(), &mhi = merged[1].back();
  auto fmt = [](const MergedLevel& l) {
    std::ostringstream os;
    os << l.energy << " (deg " << to_string(l.deg) << ")";
    return os.str();
  };
  const bool lower = mlo.energy > plo.energy, upper = mhi.energy < phi.energy;
  sub(8, "lower", lower, "min energy eps=-1 " + fmt(mlo) + " > eps=+1 " + fmt(plo));
  sub(8, "upper", upper, "max energy eps=-1 " + fmt(mhi) + " < eps=+1 " + fmt(phi));
  pass = pass && lower && upper;
  report(8, pass, "su(1|2) N=15 bbar=1 merged spectra" + std::string(upper ? "" : "; top level is shared by both signs"),
         s);
}

void criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  const double pi = std::numbers::pi;
  struct Row {
    double beta, betap;
    std::function<double(int, int)> theta;
  };
  const std::vector<Row> rows = {
      {0.5, 0.5, [pi](int j, int N) { return pi * (j - 0.5) / (2 * N); }},
      {1.5, 0.5, [pi](int j, int N) { return pi * j / (2 * N + 1); }},
      {1.5, 1.5, [pi](int j, int N) { return pi * j / (2 * N + 2); }},
  };
  double worst = 0;
  for (const Row& r : rows)
    for (int N = 1; N <= 40; ++N) {
      const SiteSet s = chain_sites(N, r.beta, r.betap);
      for (int j = 1; j <= N; ++j)
        worst = std::max(worst, std::abs(s.thetas[static_cast<std::size_t>(j - 1)] - r.theta(j, N)));
    }
  std::ostringstream os;
  os << "max |theta - closed form| = " << worst << " over N <= 40, three (beta, beta') pairs";
  report(9, worst < kSiteTol, os.str(), seconds_since(t0));
}

void criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  const double hot = free_energy({1.0, 1e3}).value / 1e3;
  const bool hot_ok = std::abs(hot + std::log(2.0)) <= kHotTol;
  sub(10, "hot", hot_ok, "f(1e3)/1e3 = " + std::to_string(hot));
  const double cold = free_energy({1.0, 1e-3}).value;
  const bool cold_ok = std::abs(cold) < kColdTol;
  sub(10, "cold", cold_ok, "f(1e-3) = " + std::to_string(cold));
  pass = hot_ok && cold_ok;

  const double f = free_energy({kGamma, 1.0}).value;
  double prev = INFINITY;
  bool decreasing = true;
  std::ostringstream os;
  os << "gamma=" << kGamma << " |f_N(1) - f(1)|:";
  for (int N : {64, 128, 256}) {
    const double err = std::abs(finite_n_free_energy(N, 1, -1, (kGamma - 1) * N, 1.0) - f);
    os << " N=" << N << ":" << err;
    decreasing = decreasing && err < prev;
    prev = err;
  }
  sub(10, "finite", decreasing, os.str());

  const int N = 256;
  double lo = INFINITY, hi = -INFINITY;
  for (int eps : {1, -1})
    for (int epsp : {1, -1}) {
      const double v = finite_n_free_energy(N, eps, epsp, (kGamma - 1) * N, 1.0);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const bool signs_ok = hi - lo < kSignSpreadTol;
  sub(10, "signs", signs_ok, "spread of f_256 over sign pairs = " + std::to_string(hi - lo));
  pass = pass && decreasing && signs_ok;
  report(10, pass, "free energy limits and finite-N convergence", seconds_since(t0));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks = {criterion1, criterion2, criteria3and4, criterion5, criterion6,
                                                     criterion7, criterion8, criterion9,    criterion10};
  for (const auto& c : checks) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
