#include "hsbcn/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace hsbcn {

ChainParams::ChainParams(int N_, SpinAlphabet a, Rational bbar_) : N(N_), alphabet(std::move(a)), bbar(bbar_) { check(); }

ChainParams ChainParams::from_betas(int N, SpinAlphabet a, Rational beta, Rational betap) {
  if (beta <= 0 || betap <= 0) throw std::domain_error("beta and beta' must be positive");
  ChainParams p(N, std::move(a), (beta + betap) / 2);
  p.beta = beta;
  p.betap = betap;
  return p;
}

void ChainParams::check() const {
  if (N < 1) throw std::domain_error("N must be at least 1");
  if (bbar <= 0) throw std::domain_error("bbar must be positive");
}

QExponent dispersion(int j, int N) {
  if (j < 1 || j > N) throw std::domain_error("dispersion index out of range");
  const std::int64_t jj = j;
  return {jj, jj * (2 * std::int64_t{N} - jj - 1) / 2};
}

std::int64_t dispersion_A(int i, int N) { return std::int64_t{i} * (N - i); }

QExponent motif_energy(const Composition& k, int N) {
  QExponent e;
  const auto K = k.partial_sums();
  for (std::size_t i = 0; i + 1 < K.size(); ++i) e = e + dispersion(K[i], N);
  return e;
}

QExponent motif_energy(const Motif& d) {
  QExponent e;
  for (int i = 0; i < d.size(); ++i)
    if (d[i]) e = e + dispersion(i + 1, d.size());
  return e;
}

namespace {

constexpr int kFreezingMaxN = 20;

// prod_{K in complement} (1 - q^{en(K)}) times q^{sum_{i<r} en(K_i)}, by subsets.
template <class Energy>
QPoly freezing_factor_impl(const Composition& k, int N, Energy&& en) {
  if (N > kFreezingMaxN) throw std::domain_error("freezing-trick route is limited to N <= 20");
  const auto K = k.partial_sums();
  QExponent base;
  std::vector<QExponent> comp;
  std::size_t idx = 0;
  for (int j = 1; j <= N; ++j) {
    if (idx < K.size() && K[idx] == j) {
      if (idx + 1 < K.size()) base = base + en(j);
      ++idx;
    } else {
      comp.push_back(en(j));
    }
  }
  QPoly out;
  const std::uint64_t subsets = std::uint64_t{1} << comp.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    QExponent e = base;
    for (std::size_t j = 0; j < comp.size(); ++j)
      if ((s >> j) & 1u) e = e + comp[j];
    out.add_term(e, std::popcount(s) % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

QPoly freezing_factor(const Composition& k, int N) {
  return freezing_factor_impl(k, N, [N](int j) { return dispersion(j, N); });
}

QPoly z_freezing(const ChainParams& p) {
  const SpinAlphabet& a = p.alphabet;
  const int N = p.N;
  const QExponent top = dispersion(N, N);
  QPoly z;
  for (const Composition& k : compositions(N)) {
    const int r = k.size();
    BigInt prod = 1;
    for (int i = 0; i + 1 < r; ++i) prod *= d_mn(k[i], a.m(), a.n());
    if (prod == 0) continue;
    const BigInt d0 = d_mn(k[r - 1], a.m_eps(), a.n_epsp());
    const BigInt d1 = d_mn(k[r - 1], a.m(), a.n()) - d0;
    QPoly bracket;
    bracket.add_term({0, 0}, d0);
    bracket.add_term(top, d1);
    z += freezing_factor(k, N) * bracket * prod;
  }
  return z;
}

QPoly z_motif(const ChainParams& p, unsigned threads) {
  const SpinAlphabet& a = p.alphabet;
  const int N = p.N;
  if (N > 40) throw std::domain_error("motif sweep is limited to N <= 40");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t count = std::uint64_t{1} << N;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));

  std::vector<QExponent> en(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) en[static_cast<std::size_t>(j - 1)] = dispersion(j, N);
  const bool fast = N * std::log2(static_cast<double>(std::max(a.size(), 1))) < 62.0;

  auto work = [&](std::uint64_t lo, std::uint64_t hi, QPoly& out) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      BigInt deg = fast ? BigInt(count_starred_tableaux_u64(mask, N, a))
                        : count_starred_tableaux(Motif::from_mask(N, mask), a);
      if (deg == 0) continue;
      QExponent e;
      for (int j = 0; j < N; ++j)
        if ((mask >> j) & 1u) e = e + en[static_cast<std::size_t>(j)];
      out.add_term(e, deg);
    }
  };

  std::vector<QPoly> partial(threads);
  if (threads == 1) {
    work(0, count, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = count * t / threads, hi = count * (t + 1) / threads;
      pool.emplace_back(work, lo, hi, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }
  QPoly z;
  for (const auto& part : partial) z += part;
  return z;
}

QPoly z_branched(const ChainParams& p) {
  const SpinAlphabet& a = p.alphabet;
  const int N = p.N;
  const QExponent top = dispersion(N, N);
  QPoly z;
  for (const Composition& k : compositions(N)) {
    const QExponent e = motif_energy(k, N);
    z.add_term(e, schur_bc_value(k, a, 0));
    z.add_term(e + top, schur_bc_value(k, a, 1));
  }
  return z;
}

QMultiPoly z_generalized(const ChainParams& p, GeneralizedForm form) {
  const SpinAlphabet& a = p.alphabet;
  const int N = p.N;
  const SuperSchur S(a, N + 1);
  QMultiPoly z(a.m(), a.n());
  if (form == GeneralizedForm::sum) {
    const QExponent top = dispersion(N, N);
    for (const Composition& k : compositions(N)) {
      const int r = k.size();
      MultiPoly prod = S.one();
      for (int i = 0; i + 1 < r; ++i) prod = prod * S.E(k[i]);
      const MultiPoly p0 = S.f(k[r - 1], 0) * prod;
      const MultiPoly p1 = S.f(k[r - 1], 1) * prod;
      const QPoly F = freezing_factor(k, N);
      for (const auto& [e, c] : F.terms()) {
        z.add_term(e, p0 * c);
        z.add_term(e + top, p1 * c);
      }
    }
  } else {
    for (const Composition& k : compositions(N + 1)) z.add_term(motif_energy(k, N), S.tilde(k));
  }
  return z;
}

QPoly z_a_type(int N, const SpinAlphabet& a) {
  if (N < 1) throw std::domain_error("N must be at least 1");
  QPoly z;
  auto en = [N](int j) { return QExponent{0, dispersion_A(j, N)}; };
  for (const Composition& k : compositions(N)) {
    BigInt prod = 1;
    for (int i = 0; i < k.size(); ++i) prod *= d_mn(k[i], a.m(), a.n());
    if (prod == 0) continue;
    z += freezing_factor_impl(k, N, en) * prod;
  }
  return z;
}

QPoly su11_closed_form(int N, int eps, int epsp) {
  if (N < 1) throw std::domain_error("N must be at least 1");
  if ((eps != 1 && eps != -1) || (epsp != 1 && epsp != -1)) throw std::domain_error("signs must be +1 or -1");
  auto one_plus = [N](int i) {
    QPoly f = QPoly::constant(1);
    f.add_term(dispersion(i, N), 1);
    return f;
  };
  auto product = [&](int upto) {
    QPoly f = QPoly::constant(1);
    for (int i = 1; i <= upto; ++i) f = f * one_plus(i);
    return f;
  };
  if (eps == 1 && epsp == 1) return product(N - 1) * BigInt(2);
  if (eps == -1 && epsp == -1) return (product(N - 1) * BigInt(2)).shifted(dispersion(N, N));
  if (eps == 1 && epsp == -1) return product(N);
  if (N < 2) throw std::domain_error("closed form for (eps,eps') = (-1,+1) needs N >= 2");
  QPoly head;
  head.add_term(dispersion(N - 1, N), 2);
  head.add_term(dispersion(N, N), 2);
  return head * product(N - 2);
}

// ---------------------------------------------------------------------------

std::vector<MergedLevel> merge_levels(const QPoly& levels, double bbar, double rel_tol) {
  std::vector<std::pair<double, std::pair<QExponent, BigInt>>> items;
  for (const auto& [e, c] : levels.terms()) items.push_back({e.value(bbar), {e, c}});
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<MergedLevel> out;
  double prev = 0.0;
  for (const auto& [E, ec] : items) {
    if (out.empty() || std::abs(E - prev) >= rel_tol * (1.0 + std::abs(E))) {
      out.push_back({E, 0, {}});
    }
    out.back().deg += ec.second;
    out.back().members.push_back(ec.first);
    prev = E;
  }
  return out;
}

std::string SpectrumTable::to_json(int indent) const {
  nlohmann::ordered_json j;
  const SpinAlphabet& a = params.alphabet;
  j["params"] = {{"N", params.N}, {"m", a.m()}, {"n", a.n()}, {"eps", a.eps()}, {"epsp", a.epsp()},
                 {"bbar", to_string(params.bbar)}};
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : levels.terms())
    j["levels"].push_back({{"alpha", e.alpha}, {"const", e.c}, {"deg", to_string(c)}});
  return j.dump(indent);
}

SpectrumTable SpectrumTable::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const auto& pj = j.at("params");
  SpinAlphabet a(pj.at("m").get<int>(), pj.at("n").get<int>(), pj.at("eps").get<int>(), pj.at("epsp").get<int>());
  SpectrumTable t{ChainParams(pj.at("N").get<int>(), a, parse_rational(pj.at("bbar").get<std::string>())), {}};
  for (const auto& lv : j.at("levels"))
    t.levels.add_term({lv.at("alpha").get<std::int64_t>(), lv.at("const").get<std::int64_t>()},
                      parse_bigint(lv.at("deg").get<std::string>()));
  return t;
}

bool SpectrumTable::operator==(const SpectrumTable& o) const {
  const SpinAlphabet &a = params.alphabet, &b = o.params.alphabet;
  return params.N == o.params.N && params.bbar == o.params.bbar && a.m() == b.m() && a.n() == b.n() &&
         a.eps() == b.eps() && a.epsp() == b.epsp() && a.bosons() == b.bosons() && levels == o.levels;
}

}  // namespace hsbcn
