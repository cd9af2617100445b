#include <doctest.h>

#include <cmath>

#include "hsbcn/spectrum.hpp"
#include "hsbcn/verify.hpp"

using namespace hsbcn;

namespace {

QPoly levels(std::initializer_list<std::tuple<int, int, int>> list) {
  QPoly z;
  for (const auto& [a, c, d] : list) z.add_term({a, c}, d);
  return z;
}

ChainParams chain(int N, int m, int n, int eps, int epsp) { return ChainParams(N, SpinAlphabet(m, n, eps, epsp), Rational(1)); }

}  // namespace

TEST_CASE("dispersion relations") {
  CHECK(dispersion(1, 3) == QExponent{1, 2});
  CHECK(dispersion(2, 3) == QExponent{2, 3});
  CHECK(dispersion(3, 3) == QExponent{3, 3});
  CHECK(dispersion(1, 1) == QExponent{1, 0});
  CHECK_THROWS_AS(dispersion(0, 3), std::domain_error);
  CHECK_THROWS_AS(dispersion(4, 3), std::domain_error);
  for (int N = 1; N <= 50; ++N)
    for (int j = 1; j < N; ++j) {
      CHECK(dispersion(j + 1, N).value(0.01) > dispersion(j, N).value(0.01));
      // E(j) = j(2 bbar + 2N - j - 1)/2 exactly
      CHECK(2 * dispersion(j, N).c == std::int64_t{j} * (2 * N - j - 1));
    }
  CHECK(dispersion_A(1, 4) == 3);
  CHECK(dispersion_A(2, 4) == 4);
  for (int N = 2; N <= 20; ++N)
    for (int i = 1; i < N; ++i) CHECK(dispersion_A(i, N) == dispersion_A(N - i, N));
}

TEST_CASE("small-chain partition functions") {
  const QPoly plus = levels({{0, 0, 2}, {1, 2, 4}, {2, 3, 6}, {3, 3, 2}, {3, 5, 6}, {4, 5, 4}, {5, 6, 2}, {6, 8, 1}});
  const QPoly minus = levels({{2, 3, 4}, {3, 3, 4}, {3, 5, 5}, {4, 5, 8}, {5, 6, 4}, {6, 8, 2}});
  for (auto* route : {&z_freezing, &z_branched}) {
    CHECK((*route)(chain(3, 1, 2, 1, 1)) == plus);
    CHECK((*route)(chain(3, 1, 2, -1, 1)) == minus);
  }
  CHECK(z_motif(chain(3, 1, 2, 1, 1)) == plus);
  CHECK(z_motif(chain(3, 1, 2, -1, 1)) == minus);

  // su(1|1) eps=eps'=1, N=2: 2(1 + q^{E(1)})
  CHECK(z_motif(chain(2, 1, 1, 1, 1)) == levels({{0, 0, 2}, {1, 1, 2}}));
  CHECK(z_motif(chain(1, 1, 0, 1, 1)) == levels({{0, 0, 1}}));
  // su(1|1) eps=eps'=-1, N=3: 2 q^{E(3)} (1 + q^{E(1)})(1 + q^{E(2)})
  QPoly expect = QPoly::monomial(dispersion(3, 3), 2) * (QPoly::constant(1) + QPoly::monomial(dispersion(1, 3))) *
                 (QPoly::constant(1) + QPoly::monomial(dispersion(2, 3)));
  CHECK(z_branched(chain(3, 1, 1, -1, -1)) == expect);
}

TEST_CASE("three routes agree and are normalized") {
  for (const SpinAlphabet& a : alphabets_upto(4))
    for (int N = 1; N <= 7; ++N) {
      const ChainParams p(N, a, Rational(1));
      const QPoly zm = z_motif(p);
      REQUIRE(zm == z_freezing(p));
      REQUIRE(zm == z_branched(p));
      REQUIRE(zm.at_one() == ipow(a.size(), N));
      for (const auto& [e, c] : zm.terms()) REQUIRE(c > 0);
    }
}

TEST_CASE("threaded motif sweep is deterministic") {
  const ChainParams p = chain(11, 2, 2, -1, 1);
  const QPoly one = z_motif(p, 1);
  CHECK(one == z_motif(p, 3));
  CHECK(one == z_motif(p, 8));
}

TEST_CASE("generalized partition function") {
  for (const SpinAlphabet& a : alphabets_upto(3))
    for (int N = 1; N <= 5; ++N) {
      const ChainParams p(N, a, Rational(1));
      const QMultiPoly s = z_generalized(p, GeneralizedForm::sum);
      REQUIRE(s == z_generalized(p, GeneralizedForm::schur));
      REQUIRE(s.at_ones() == z_motif(p));
    }
  // one tableau per composition of 3: four monomials in (q; x, y)
  CHECK(z_generalized(chain(2, 1, 1, 1, -1), GeneralizedForm::schur).monomial_count() == 4);
}

TEST_CASE("branch degeneracies add up to the A-type ones") {
  for (const SpinAlphabet& a : alphabets_upto(3))
    for (int N = 1; N <= 8; ++N)
      for (const Composition& k : compositions(N))
        REQUIRE(schur_bc_value(k, a, 0) + schur_bc_value(k, a, 1) == schur_border_strip_value(k, a));
  for (const SpinAlphabet& a : alphabets_upto(3))
    for (int N = 1; N <= 8; ++N)
      CHECK(schur_bc_value(Composition({N}), a, 0) + schur_bc_value(Composition({N}), a, 1) == d_mn(N, a.m(), a.n()));
}

TEST_CASE("A-type chain") {
  CHECK(z_a_type(2, SpinAlphabet(2, 0)) == levels({{0, 0, 3}, {0, 1, 1}}));
  CHECK(z_a_type(1, SpinAlphabet(2, 1)).at_one() == 3);
  for (int N = 1; N <= 10; ++N) {
    QPoly expect = QPoly::constant(2);
    for (int i = 1; i < N; ++i) expect = expect * (QPoly::constant(1) + QPoly::monomial({0, dispersion_A(i, N)}));
    CHECK(z_a_type(N, SpinAlphabet(1, 1)) == expect);
  }
}

TEST_CASE("su(1|1) closed forms") {
  for (int N = 1; N <= 12; ++N)
    for (int eps : {1, -1})
      for (int epsp : {1, -1}) {
        if (eps == -1 && epsp == 1 && N < 2) {
          CHECK_THROWS_AS(su11_closed_form(N, eps, epsp), std::domain_error);
          continue;
        }
        const QPoly z = su11_closed_form(N, eps, epsp);
        CHECK(z.at_one() == ipow(2, N));
        CHECK(z == z_motif(chain(N, 1, 1, eps, epsp)));
      }
}

TEST_CASE("extreme levels of su(1|2)") {
  for (int N = 3; N <= 10; ++N) {
    const QExponent top{std::int64_t{N} * (N + 1) / 2, 0};
    QExponent sum;
    for (int i = 1; i <= N; ++i) sum = sum + dispersion(i, N);
    CHECK(sum.alpha == top.alpha);
    // N(N+1)(3 bbar + 2N - 2)/6 at bbar = 0
    CHECK(6 * sum.c == std::int64_t{N} * (N + 1) * (2 * N - 2));
    const QPoly zp = z_motif(chain(N, 1, 2, 1, 1)), zm = z_motif(chain(N, 1, 2, -1, 1));
    CHECK(zp.terms().rbegin()->first == sum);
    CHECK(zp.terms().rbegin()->second == 1);
    CHECK(zm.terms().rbegin()->first == sum);
    CHECK(zm.terms().rbegin()->second == 2);
    CHECK(zm.terms().begin()->first == dispersion(N - 1, N));
    CHECK(zm.terms().begin()->second == 4);
  }
}

TEST_CASE("numeric merging") {
  // levels alpha*bbar + c collide at bbar = 2: (3,3) = 9 and (1,7) = 9
  const QPoly z = levels({{0, 0, 1}, {1, 7, 2}, {3, 3, 5}, {3, 4, 1}});
  const auto m = merge_levels(z, 2.0);
  REQUIRE(m.size() == 3);
  CHECK(m[1].energy == doctest::Approx(9.0));
  CHECK(m[1].deg == 7);
  CHECK(m[1].members.size() == 2);
  CHECK(merge_levels(z, std::sqrt(2.0)).size() == 4);
}

TEST_CASE("spectrum JSON round trip") {
  const ChainParams p(4, SpinAlphabet(2, 1, -1, 1), parse_rational("3/2"));
  const SpectrumTable t{p, z_motif(p)};
  const std::string text = t.to_json();
  CHECK(text.find("\"bbar\":\"3/2\"") != std::string::npos);
  CHECK(text.rfind("{\"params\":{\"N\":4,\"m\":2,\"n\":1,\"eps\":-1,\"epsp\":1", 0) == 0);
  const SpectrumTable back = SpectrumTable::from_json(text);
  CHECK(back == t);
  CHECK(back.total_degeneracy() == 81);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ChainParams(0, SpinAlphabet(1, 1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(ChainParams(2, SpinAlphabet(1, 1), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(ChainParams::from_betas(2, SpinAlphabet(1, 1), Rational(-1), Rational(1)), std::domain_error);
  const auto p = ChainParams::from_betas(2, SpinAlphabet(1, 1), Rational(1), Rational(3));
  CHECK(p.bbar == Rational(2));
  CHECK_THROWS_AS(z_freezing(chain(21, 1, 0, 1, 1)), std::domain_error);
}
