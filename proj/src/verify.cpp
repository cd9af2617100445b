#include "hsbcn/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hsbcn/exactdiag.hpp"
#include "hsbcn/schur.hpp"
#include "hsbcn/spectrum.hpp"

namespace hsbcn {

std::vector<SpinAlphabet> alphabets_upto(int max_size) {
  std::vector<SpinAlphabet> out;
  for (int q = 1; q <= max_size; ++q)
    for (int m = q; m >= 0; --m)
      for (int eps : {1, -1})
        for (int epsp : {1, -1}) out.emplace_back(m, q - m, eps, epsp);
  return out;
}

namespace {

std::string where(const SpinAlphabet& a, int N) {
  std::ostringstream os;
  os << a.name() << " eps=" << a.eps() << " eps'=" << a.epsp() << " N=" << N;
  return os.str();
}

void record(CheckResult& r, bool ok, const std::function<std::string()>& what) {
  ++r.cases;
  if (!ok && r.pass) {
    r.pass = false;
    r.counterexample = what();
  }
}

}  // namespace

std::vector<CheckResult> verify_identities(int max_n, int max_size) {
  CheckResult triple{"z_freezing = z_motif = z_branched"};
  CheckResult norm{"Z(1) = (m+n)^N"};
  CheckResult gen{"generalized sum = schur form, specializes to z_motif"};
  CheckResult methods{"schur_bc determinant = recursion = combinatorial, branch sum"};
  CheckResult starred{"starred count = schur_tilde at 1's"};
  CheckResult atype{"d_0 + d_1 = d_A"};

  for (const SpinAlphabet& a : alphabets_upto(max_size)) {
    for (int N = 1; N <= max_n; ++N) {
      const ChainParams p(N, a, Rational(1));
      const QPoly zm = z_motif(p), zf = z_freezing(p), zb = z_branched(p);
      record(triple, zm == zf && zm == zb, [&] { return where(a, N); });
      const BigInt dim = ipow(a.size(), N);
      record(norm, zm.at_one() == dim && zf.at_one() == dim && zb.at_one() == dim, [&] { return where(a, N); });

      const QMultiPoly gs = z_generalized(p, GeneralizedForm::sum);
      const QMultiPoly gc = z_generalized(p, GeneralizedForm::schur);
      record(gen, gs == gc && gs.at_ones() == zm, [&] { return where(a, N); });

      const SuperSchur S(a, N + 1);
      for (const Composition& k : compositions(N)) {
        const MultiPoly full = S.border_strip(k, SchurMethod::determinant);
        bool ok = full == S.border_strip(k, SchurMethod::combinatorial) &&
                  full == S.border_strip(k, SchurMethod::recursion);
        MultiPoly sum = S.zero();
        for (int b : {0, 1}) {
          const MultiPoly d = S.bc(k, b, SchurMethod::determinant);
          ok = ok && d == S.bc(k, b, SchurMethod::recursion) && d == S.bc(k, b, SchurMethod::combinatorial);
          ok = ok && d.at_ones() == schur_bc_value(k, a, b);
          sum += d;
        }
        ok = ok && sum == full;
        record(methods, ok, [&] { return where(a, N) + " k=" + k.str(); });
        record(atype, schur_bc_value(k, a, 0) + schur_bc_value(k, a, 1) == schur_border_strip_value(k, a),
               [&] { return where(a, N) + " k=" + k.str(); });
      }
      for (const Composition& k : compositions(N + 1)) {
        record(starred, count_starred_tableaux(to_motif(k), a) == schur_tilde_value(k, a),
               [&] { return where(a, N) + " k=" + k.str(); });
      }
    }
  }
  return {triple, norm, gen, methods, starred, atype};
}

std::vector<CheckResult> verify_weyl(int max_n, int max_size, int probes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  struct Relation {
    std::string name;
    int sites;  // distinct site indices needed
    std::function<bool(const SignedConfig&, const std::vector<int>&, const SpinAlphabet&)> holds;
  };
  using SC = SignedConfig;
  const std::vector<Relation> relations = {
      {"S_ij^2 = 1", 2,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         return apply_Sij(x[0], x[1], apply_Sij(x[0], x[1], s, a), a) == s;
       }},
      {"S_ij S_jk = S_ik S_ij = S_jk S_ik", 3,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         const int i = x[0], j = x[1], k = x[2];
         const SC l = apply_Sij(i, j, apply_Sij(j, k, s, a), a);
         const SC m = apply_Sij(i, k, apply_Sij(i, j, s, a), a);
         const SC r = apply_Sij(j, k, apply_Sij(i, k, s, a), a);
         return l == m && m == r;
       }},
      {"S_ij S_kl = S_kl S_ij", 4,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         return apply_Sij(x[0], x[1], apply_Sij(x[2], x[3], s, a), a) ==
                apply_Sij(x[2], x[3], apply_Sij(x[0], x[1], s, a), a);
       }},
      {"S_i^2 = 1", 1,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         return apply_Si(x[0], apply_Si(x[0], s, a), a) == s;
       }},
      {"S_i S_j = S_j S_i", 2,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         return apply_Si(x[0], apply_Si(x[1], s, a), a) == apply_Si(x[1], apply_Si(x[0], s, a), a);
       }},
      {"S_ij S_k = S_k S_ij", 3,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         return apply_Sij(x[0], x[1], apply_Si(x[2], s, a), a) == apply_Si(x[2], apply_Sij(x[0], x[1], s, a), a);
       }},
      {"S_ij S_j = S_i S_ij", 2,
       [](const SC& s, const std::vector<int>& x, const SpinAlphabet& a) {
         return apply_Sij(x[0], x[1], apply_Si(x[1], s, a), a) == apply_Si(x[0], apply_Sij(x[0], x[1], s, a), a);
       }},
  };

  const std::vector<SpinAlphabet> alphabets = alphabets_upto(max_size);
  std::vector<CheckResult> out;
  for (const Relation& rel : relations) {
    CheckResult r{rel.name};
    if (max_n < rel.sites) {
      out.push_back(r);
      continue;
    }
    for (int probe = 0; probe < probes; ++probe) {
      const SpinAlphabet& a = alphabets[static_cast<std::size_t>(uniform(0, static_cast<int>(alphabets.size()) - 1))];
      const int N = uniform(rel.sites, max_n);
      SignedConfig s{SpinConfig(static_cast<std::size_t>(N)), 1};
      for (auto& v : s.s) v = uniform(1, a.size());
      std::vector<int> sites(static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i) sites[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(sites.begin(), sites.end(), rng);
      sites.resize(static_cast<std::size_t>(rel.sites));
      record(r, rel.holds(s, sites, a), [&] {
        std::ostringstream os;
        os << where(a, N) << " state=";
        for (Label v : s.s) os << v;
        os << " sites=";
        for (int i : sites) os << i << ' ';
        return os.str();
      });
    }
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> verify_diag(int N, int m, int n, const std::vector<std::pair<Rational, Rational>>& betas) {
  std::vector<CheckResult> out;
  for (const auto& [beta, betap] : betas) {
    CheckResult r{"diag N=" + std::to_string(N) + " su(" + std::to_string(m) + "|" + std::to_string(n) +
                  ") beta=" + to_string(beta) + " beta'=" + to_string(betap)};
    const SiteSet sites = chain_sites(N, to_double(beta), to_double(betap));
    for (int eps : {1, -1})
      for (int epsp : {1, -1}) {
        const auto p = ChainParams::from_betas(N, SpinAlphabet(m, n, eps, epsp), beta, betap);
        const EigenResult ev = eigen_spectrum(build_hamiltonian(p, sites));
        const ComparisonReport rep = compare_spectra(ev.values, z_motif(p), p.bbar);
        record(r, rep.pass, [&] { return where(p.alphabet, N) + ": " + rep.message; });
      }
    out.push_back(r);
  }
  return out;
}

}  // namespace hsbcn
