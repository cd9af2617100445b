// Command-line front end.
//
// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsbcn/exactdiag.hpp"
#include "hsbcn/spectrum.hpp"
#include "hsbcn/thermo.hpp"
#include "hsbcn/verify.hpp"

using namespace hsbcn;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int N = 3;
  int m = 1;
  int n = 1;
  int eps = 1;
  int epsp = 1;
  std::string bbar;
  std::string beta, betap;
  std::string format;  // empty: per-command default
  std::string output;
  unsigned threads = 0;
  std::uint64_t cap = 4096;
  bool merge = false;
  double tol = 1e-9;
};

unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HSBCN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("HSBCN_THREADS must be a positive integer");
  }
  return 0;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SpinAlphabet alphabet_of(const RunConfig& c) {
  if (c.m < 0 || c.n < 0 || c.m + c.n < 1) throw UsageError("need m, n >= 0 and m+n >= 1");
  if ((c.eps != 1 && c.eps != -1) || (c.epsp != 1 && c.epsp != -1)) throw UsageError("--eps/--epsp must be +1 or -1");
  return SpinAlphabet(c.m, c.n, c.eps, c.epsp);
}

Rational rational_arg(const std::string& s, const char* name) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid ") + name + ": " + e.what());
  }
}

// bbar from --bbar, or from --beta/--beta-prime; defaults to 1.
ChainParams params_of(const RunConfig& c, bool need_betas = false) {
  if (c.N < 1) throw UsageError("--N must be at least 1");
  const SpinAlphabet a = alphabet_of(c);
  const bool have_betas = !c.beta.empty() || !c.betap.empty();
  if (have_betas) {
    if (c.beta.empty() || c.betap.empty()) throw UsageError("--beta and --beta-prime go together");
    if (!c.bbar.empty()) throw UsageError("give either --bbar or --beta/--beta-prime");
    const Rational b = rational_arg(c.beta, "--beta"), bp = rational_arg(c.betap, "--beta-prime");
    if (b <= 0 || bp <= 0) throw UsageError("beta and beta' must be positive");
    return ChainParams::from_betas(c.N, a, b, bp);
  }
  if (need_betas) throw UsageError("this command needs --beta and --beta-prime");
  const Rational bbar = c.bbar.empty() ? Rational(1) : rational_arg(c.bbar, "--bbar");
  if (bbar <= 0) throw UsageError("bbar must be positive");
  return ChainParams(c.N, a, bbar);
}

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("unsupported --format " + c.format + " for this command");
}

ojson params_json(const ChainParams& p) {
  ojson j = {{"N", p.N}, {"m", p.alphabet.m()}, {"n", p.alphabet.n()}, {"eps", p.alphabet.eps()},
             {"epsp", p.alphabet.epsp()}, {"bbar", to_string(p.bbar)}};
  if (p.beta) j["beta"] = to_string(*p.beta);
  if (p.betap) j["betap"] = to_string(*p.betap);
  return j;
}

ojson levels_json(const QPoly& z) {
  ojson arr = ojson::array();
  for (const auto& [e, c] : z.terms()) arr.push_back({{"alpha", e.alpha}, {"const", e.c}, {"deg", to_string(c)}});
  return arr;
}

ojson merged_json(const QPoly& z, double bbar, double tol) {
  ojson arr = ojson::array();
  for (const MergedLevel& l : merge_levels(z, bbar, tol)) arr.push_back({{"energy", l.energy}, {"deg", to_string(l.deg)}});
  return arr;
}

std::string merged_csv(const QPoly& z, double bbar, double tol) {
  std::ostringstream os;
  os << "energy,deg\n";
  for (const MergedLevel& l : merge_levels(z, bbar, tol)) os << fmt(l.energy) << ',' << l.deg << '\n';
  return os.str();
}

std::string levels_pretty(const QPoly& z) {
  std::ostringstream os;
  os << std::setw(8) << "alpha" << std::setw(10) << "const" << std::setw(24) << "deg" << '\n';
  for (const auto& [e, c] : z.terms()) os << std::setw(8) << e.alpha << std::setw(10) << e.c << std::setw(24) << c << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

std::string cmd_spectrum(const RunConfig& c) {
  check_format(c, {"json", "csv", "pretty"});
  const ChainParams p = params_of(c);
  const QPoly z = z_motif(p, resolve_threads(c.threads));
  if (c.format == "json") {
    ojson j;
    j["params"] = params_json(p);
    j["levels"] = levels_json(z);
    if (c.merge) j["merged"] = merged_json(z, to_double(p.bbar), c.tol);
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") {
    if (c.merge) return merged_csv(z, to_double(p.bbar), c.tol);
    std::ostringstream os;
    os << "alpha,const,deg\n";
    for (const auto& [e, d] : z.terms()) os << e.alpha << ',' << e.c << ',' << d << '\n';
    return os.str();
  }
  return levels_pretty(z) + (c.merge ? merged_csv(z, to_double(p.bbar), c.tol) : "");
}

std::string cmd_zq(const RunConfig& c, const std::string& route) {
  check_format(c, {"json", "pretty"});
  const ChainParams p = params_of(c);
  QPoly z;
  if (route == "motif") z = z_motif(p, resolve_threads(c.threads));
  else if (route == "freezing") z = z_freezing(p);
  else if (route == "branched") z = z_branched(p);
  else if (route == "a-type") z = z_a_type(p.N, p.alphabet);
  else if (route == "closed") {
    if (c.m != 1 || c.n != 1) throw UsageError("--route closed requires m = n = 1");
    z = su11_closed_form(p.N, c.eps, c.epsp);
  } else if (route == "generalized" || route == "generalized-schur") {
    if (p.N > 8 || p.alphabet.size() > 4) throw UsageError("generalized routes are limited to N <= 8, m+n <= 4");
    const QMultiPoly g = z_generalized(p, route == "generalized" ? GeneralizedForm::sum : GeneralizedForm::schur);
    if (c.format == "pretty") {
      std::ostringstream os;
      for (const auto& [e, poly] : g.terms()) os << "q^{" << e.str() << "}:\n" << poly.str();
      return os.str();
    }
    ojson j;
    j["params"] = params_json(p);
    j["route"] = route;
    j["terms"] = ojson::array();
    for (const auto& [e, poly] : g.terms()) {
      ojson monos = ojson::array();
      for (const auto& [ex, coef] : poly.terms()) monos.push_back({{"exponents", ex}, {"coef", to_string(coef)}});
      j["terms"].push_back({{"alpha", e.alpha}, {"const", e.c}, {"monomials", monos}});
    }
    return j.dump(2) + "\n";
  } else {
    throw UsageError("unknown --route " + route);
  }
  if (c.format == "pretty") return "Z(q) = " + z.str() + "\n";
  ojson j;
  j["params"] = params_json(p);
  j["route"] = route;
  j["levels"] = levels_json(z);
  return j.dump(2) + "\n";
}

std::string cmd_motifs(const RunConfig& c, bool tableaux) {
  check_format(c, {"json", "pretty"});
  const ChainParams p = params_of(c);
  if (p.N > 20) throw UsageError("motif listing is limited to N <= 20");
  ojson rows = ojson::array();
  std::ostringstream os;
  os << std::left << std::setw(22) << "partition" << std::setw(22) << "motif" << std::setw(16) << "energy"
     << "deg\n";
  for (const Composition& k : compositions(p.N + 1)) {
    const Motif d = to_motif(k);
    const BigInt deg = count_starred_tableaux(d, p.alphabet);
    const QExponent e = motif_energy(d);
    os << std::setw(22) << k.str() << std::setw(22) << d.str() << std::setw(16) << e.str() << deg << '\n';
    ojson row = {{"partition", k.parts()}, {"motif", d.bits()}, {"alpha", e.alpha}, {"const", e.c},
                 {"deg", to_string(deg)}};
    if (tableaux) {
      ojson list = ojson::array();
      for_each_starred_tableau(d, p.alphabet, [&](const BondVector& s) {
        list.push_back(s.entries);
        os << "    " << s.str() << '\n';
      });
      row["tableaux"] = list;
    }
    rows.push_back(row);
  }
  if (c.format == "pretty") return os.str();
  ojson j;
  j["params"] = params_json(p);
  j["star"] = p.alphabet.star();
  j["bosons"] = p.alphabet.bosons();
  j["fermions"] = p.alphabet.fermions();
  j["motifs"] = rows;
  return j.dump(2) + "\n";
}

std::string cmd_sites(const RunConfig& c, double beta, double betap) {
  check_format(c, {"json", "csv"});
  if (c.N < 1) throw UsageError("--N must be at least 1");
  if (!(beta > 0) || !(betap > 0)) throw UsageError("beta and beta' must be positive");
  const SiteSet s = chain_sites(c.N, beta, betap);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "j,theta\n";
    for (std::size_t k = 0; k < s.thetas.size(); ++k) os << k + 1 << ',' << fmt(s.thetas[k]) << '\n';
    return os.str();
  }
  ojson j = {{"N", s.N}, {"beta", s.beta}, {"betap", s.betap}, {"thetas", s.thetas}, {"max_residual", s.max_residual}};
  return j.dump(2) + "\n";
}

std::string cmd_diag(const RunConfig& c, int& exit_code) {
  check_format(c, {"json"});
  const ChainParams p = params_of(c, true);
  const SiteSet sites = chain_sites(p.N, to_double(*p.beta), to_double(*p.betap));
  const EigenResult ev = eigen_spectrum(build_hamiltonian(p, sites, c.cap));
  const ComparisonReport rep = compare_spectra(ev.values, z_motif(p, resolve_threads(c.threads)), p.bbar);
  ojson j;
  j["params"] = params_json(p);
  j["dimension"] = ev.values.size();
  j["site_residual"] = sites.max_residual;
  j["eigen_residual"] = ev.residual;
  j["clusters"] = ojson::array();
  for (const Cluster& cl : rep.clusters) j["clusters"].push_back({{"energy", cl.energy}, {"size", cl.size}, {"spread", cl.spread}});
  j["levels"] = ojson::array();
  for (const LevelVerdict& v : rep.verdicts) {
    ojson row = {{"predicted_energy", v.predicted_energy}, {"predicted_deg", to_string(v.predicted_deg)},
                 {"numeric_deg", v.numeric_deg}, {"match", v.match}};
    row["numeric_energy"] = std::isnan(v.numeric_energy) ? ojson(nullptr) : ojson(v.numeric_energy);
    j["levels"].push_back(row);
  }
  j["max_energy_error"] = rep.max_energy_error;
  j["ambiguous_gaps"] = rep.ambiguous_gaps;
  j["indeterminate"] = rep.indeterminate;
  j["pass"] = rep.pass;
  j["message"] = rep.message;
  exit_code = rep.pass ? 0 : 1;
  return j.dump(2) + "\n";
}

std::string cmd_verify(const RunConfig& c, const std::string& suite, int max_n, int max_size, int probes,
                       bool n_given, bool mn_given, int& exit_code) {
  check_format(c, {"json"});
  std::vector<CheckResult> results;
  ojson sweep;
  if (suite == "identities" || suite == "all") {
    if (max_n > 8 || max_size > 4) throw UsageError("identity sweep limited to N <= 8, m+n <= 4");
    auto r = verify_identities(max_n, max_size);
    results.insert(results.end(), r.begin(), r.end());
    sweep["identities"] = {{"max_N", max_n}, {"max_size", max_size}};
  }
  if (suite == "weyl" || suite == "all") {
    const int wn = n_given ? max_n : 6, ws = mn_given ? max_size : 4;
    auto r = verify_weyl(wn, ws, probes);
    results.insert(results.end(), r.begin(), r.end());
    sweep["weyl"] = {{"max_N", wn}, {"max_size", ws}, {"probes", probes}};
  }
  if (suite == "diag") {
    if (c.N < 1) throw UsageError("--N must be at least 1");
    if (c.m < 0 || c.n < 0 || c.m + c.n < 1) throw UsageError("need m, n >= 0 and m+n >= 1");
    auto r = verify_diag(c.N, c.m, c.n, {{Rational(1), Rational(3)}, {Rational(1, 2), Rational(1, 2)}});
    results.insert(results.end(), r.begin(), r.end());
    sweep["diag"] = {{"N", c.N}, {"m", c.m}, {"n", c.n}};
  } else if (suite != "identities" && suite != "weyl" && suite != "all") {
    throw UsageError("unknown --suite " + suite);
  }
  bool ok = true;
  ojson checks = ojson::array();
  for (const CheckResult& r : results) {
    ojson row = {{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}};
    if (!r.pass) row["counterexample"] = r.counterexample;
    checks.push_back(row);
    ok = ok && r.pass;
  }
  exit_code = ok ? 0 : 1;
  ojson j = {{"suite", suite}, {"sweep", sweep}, {"checks", checks}, {"pass", ok}};
  return j.dump(2) + "\n";
}

std::string cmd_thermo(const RunConfig& c, double gamma, const std::vector<double>& temps, int finite_n) {
  check_format(c, {"csv"});
  if (temps.empty()) throw UsageError("need at least one --T");
  if (!(gamma >= 1)) throw UsageError("--gamma must be >= 1");
  if (finite_n != 0 && finite_n < 2) throw UsageError("--finite-N must be at least 2");
  if (finite_n && gamma == 1) throw UsageError("finite-N column needs gamma > 1 so that bbar = (gamma-1)N > 0");
  if ((c.eps != 1 && c.eps != -1) || (c.epsp != 1 && c.epsp != -1)) throw UsageError("--eps/--epsp must be +1 or -1");
  std::ostringstream os;
  os << "T,f,f_err" << (finite_n ? ",N,f_N" : "") << '\n';
  for (double T : temps) {
    if (!(T > 0)) throw UsageError("temperatures must be positive");
    const FreeEnergy f = free_energy({gamma, T});
    os << fmt(T) << ',' << fmt(f.value) << ',' << fmt(f.error);
    if (finite_n)
      os << ',' << finite_n << ',' << fmt(finite_n_free_energy(finite_n, c.eps, c.epsp, (gamma - 1) * finite_n, T));
    os << '\n';
  }
  return os.str();
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "output format (json, csv or pretty, per command)");
  sub->add_option("-o,--output", c.output, "write output to this file instead of stdout");
  sub->add_option("--threads", c.threads, "worker threads (default: HSBCN_THREADS, else all cores)");
}

void add_chain_options(CLI::App* sub, RunConfig& c) {
  add_common_options(sub, c);
  sub->add_option("--N", c.N, "number of sites");
  sub->add_option("--m", c.m, "bosonic species");
  sub->add_option("--n", c.n, "fermionic species");
  sub->add_option("--eps", c.eps, "boson reversal sign (+1 or -1)");
  sub->add_option("--epsp", c.epsp, "fermion reversal sign (+1 or -1)");
}

void add_bbar_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--bbar", c.bbar, "mean boundary coupling as p/q (default 1)");
  sub->add_option("--beta", c.beta, "beta as p/q");
  sub->add_option("--beta-prime", c.betap, "beta' as p/q");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum and partition functions of the open su(m|n) Haldane-Shastry chain"};
  app.require_subcommand(1);
  RunConfig c;

  auto* spectrum = app.add_subcommand("spectrum", "exact levels (alpha, const, deg) from the motif sweep");
  add_chain_options(spectrum, c);
  add_bbar_options(spectrum, c);
  spectrum->add_flag("--merge", c.merge, "also merge levels numerically at bbar");
  spectrum->add_option("--merge-tol", c.tol, "relative merge tolerance (default 1e-9)");

  std::string route = "motif";
  auto* zq = app.add_subcommand("zq", "partition function Z(q) by a chosen route");
  add_chain_options(zq, c);
  add_bbar_options(zq, c);
  zq->add_option("--route", route, "motif, freezing, branched, a-type, closed, generalized, generalized-schur");

  bool tableaux = false;
  auto* motifs = app.add_subcommand("motifs", "table of partitions, motifs, energies and degeneracies");
  add_chain_options(motifs, c);
  motifs->add_flag("--tableaux", tableaux, "list the starred bond vectors of each motif");

  double beta = 0.5, betap = 0.5;
  auto* sites = app.add_subcommand("sites", "chain sites theta_1 < ... < theta_N");
  add_common_options(sites, c);
  sites->add_option("--N", c.N, "number of sites");
  sites->add_option("--beta", beta, "beta (real)");
  sites->add_option("--beta-prime", betap, "beta' (real)");

  auto* diag = app.add_subcommand("diag", "exact diagonalization compared with the motif spectrum");
  add_chain_options(diag, c);
  add_bbar_options(diag, c);
  diag->add_option("--cap", c.cap, "maximum Hilbert space dimension (default 4096)");

  std::string suite = "all";
  int max_n = 6, max_size = 3, probes = 1000;
  auto* verify = app.add_subcommand("verify", "run self-check suites");
  add_common_options(verify, c);
  verify->add_option("--suite", suite, "identities, weyl, diag or all (identities + weyl)");
  auto* opt_n = verify->add_option("--N", c.N, "N for diag; sweep bound for the other suites");
  verify->add_option("--m", c.m, "bosonic species (diag)");
  verify->add_option("--n", c.n, "fermionic species (diag)");
  auto* opt_size = verify->add_option("--max-size", max_size, "largest m+n in sweeps (default 3)");
  verify->add_option("--probes", probes, "random probes per Weyl relation (default 1000)");

  double gamma = 1.0;
  std::vector<double> temps;
  int finite_n = 0;
  auto* thermo = app.add_subcommand("thermo", "su(1|1) free energy per site; CSV columns T,f,f_err[,N,f_N]");
  add_common_options(thermo, c);
  thermo->add_option("--gamma", gamma, "gamma = 1 + lim bbar/N (default 1)");
  thermo->add_option("--T", temps, "temperature(s)")->expected(1, -1);
  thermo->add_option("--finite-N", finite_n, "add the finite-N column at this N (bbar = (gamma-1)N)");
  thermo->add_option("--eps", c.eps, "boson reversal sign for the finite-N column");
  thermo->add_option("--epsp", c.epsp, "fermion reversal sign for the finite-N column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (c.format.empty()) c.format = *thermo ? "csv" : "json";
  int exit_code = 0;
  std::string out;
  try {
    if (*spectrum) out = cmd_spectrum(c);
    else if (*zq) out = cmd_zq(c, route);
    else if (*motifs) out = cmd_motifs(c, tableaux);
    else if (*sites) out = cmd_sites(c, beta, betap);
    else if (*diag) out = cmd_diag(c, exit_code);
    else if (*verify) {
      if (*opt_n && suite != "diag") max_n = c.N;
      out = cmd_verify(c, suite, max_n, max_size, probes, static_cast<bool>(*opt_n), static_cast<bool>(*opt_size),
                       exit_code);
    } else if (*thermo) {
      out = cmd_thermo(c, gamma, temps, finite_n);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (c.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      std::cerr << "error: cannot open " << c.output << '\n';
      return 1;
    }
    f << out;
  }
  return exit_code;
}
