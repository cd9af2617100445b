#pragma once

// Self-check suites shared by the command-line tool and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "hsbcn/combinat.hpp"
#include "hsbcn/types.hpp"

namespace hsbcn {

struct CheckResult {
  std::string name{};
  bool pass = true;
  std::uint64_t cases = 0;
  std::string counterexample{};  // first failing instance
};

/// Every alphabet with 1 <= m+n <= max_size and all four sign pairs.
std::vector<SpinAlphabet> alphabets_upto(int max_size);

/// Cross-route, normalization and Schur identities over N <= max_n and
/// alphabets of size <= max_size.
std::vector<CheckResult> verify_identities(int max_n = 6, int max_size = 3);

/// Weyl group relations on random configurations.
std::vector<CheckResult> verify_weyl(int max_n = 6, int max_size = 4, int probes = 1000, std::uint64_t seed = 12345);

/// Exact diagonalization against the motif spectrum for one alphabet size at
/// the given (beta, beta') points, for all four sign pairs.
std::vector<CheckResult> verify_diag(int N, int m, int n, const std::vector<std::pair<Rational, Rational>>& betas);

}  // namespace hsbcn
