#include <doctest.h>

#include <map>
#include <set>

#include "hsbcn/combinat.hpp"
#include "hsbcn/verify.hpp"

using namespace hsbcn;

namespace {

// Tableau rules checked on the geometry of the strip: along a row (left to
// right) labels increase, repeating only fermions; down a column labels
// increase, repeating only bosons.
bool geometric_tableau_ok(const BorderStrip& bs, const std::vector<Label>& s, const SpinAlphabet& a) {
  const auto cells = bs.cells();
  for (std::size_t u = 0; u < cells.size(); ++u)
    for (std::size_t v = 0; v < cells.size(); ++v) {
      const Label x = s[u], y = s[v];
      if (cells[u].row == cells[v].row && cells[u].col + 1 == cells[v].col) {
        if (!(x < y || (x == y && a.is_fermion(x)))) return false;
      }
      if (cells[u].col == cells[v].col && cells[u].row + 1 == cells[v].row) {
        if (!(x < y || (x == y && a.is_boson(x)))) return false;
      }
    }
  return true;
}

bool no_two_by_two(const std::vector<Cell>& cells) {
  std::set<std::pair<int, int>> occ;
  for (const Cell& c : cells) occ.insert({c.row, c.col});
  for (const Cell& c : cells)
    if (occ.count({c.row + 1, c.col}) && occ.count({c.row, c.col + 1}) && occ.count({c.row + 1, c.col + 1}))
      return false;
  return true;
}

}  // namespace

TEST_CASE("alphabet default labelling") {
  const SpinAlphabet p(1, 2, 1, 1);
  CHECK(p.bosons() == std::vector<Label>{2});
  CHECK(p.fermions() == std::vector<Label>{1, 3});
  CHECK(p.star() == 2);
  const SpinAlphabet m(1, 2, -1, 1);
  CHECK(m.fermions() == std::vector<Label>{1, 2});
  CHECK(m.bosons() == std::vector<Label>{3});
  CHECK(m.m_eps() == 0);
  CHECK(m.star() == 1);

  CHECK(SpinAlphabet(1, 1, -1, -1).star() == 0);
  CHECK_THROWS_AS(SpinAlphabet(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(SpinAlphabet(1, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(SpinAlphabet(1, 2, 1, 1, {1}, {2, 3}), std::invalid_argument);
  CHECK_NOTHROW(SpinAlphabet(1, 2, 1, 1, {2}, {1, 3}));
}

TEST_CASE("alphabet invariants over all small alphabets") {
  for (int q = 1; q <= 6; ++q)
    for (int m = 0; m <= q; ++m)
      for (int eps : {1, -1})
        for (int epsp : {1, -1}) {
          const int n = q - m;
          const SpinAlphabet a(m, n, eps, epsp);
          CHECK((a.m_eps() == m / 2 || a.m_eps() == (m + 1) / 2));
          CHECK((a.n_epsp() == n / 2 || a.n_epsp() == (n + 1) / 2));
          std::set<Label> restricted;
          for (int i = 0; i < a.m_eps(); ++i) restricted.insert(a.bosons()[static_cast<std::size_t>(i)]);
          for (int i = 0; i < a.n_epsp(); ++i) restricted.insert(a.fermions()[static_cast<std::size_t>(i)]);
          std::set<Label> expect;
          for (int i = 1; i <= a.star(); ++i) expect.insert(i);
          CHECK(restricted == expect);
          if (a.m_eps() > 0) CHECK(a.bosons()[static_cast<std::size_t>(a.m_eps() - 1)] == a.star());
          for (Label s = 1; s <= q; ++s) {
            CHECK(a.reverse(a.reverse(s)) == s);
            CHECK(a.is_boson(a.reverse(s)) == a.is_boson(s));
          }
        }
}

TEST_CASE("compositions") {
  CHECK(std::ranges::distance(compositions(0)) == 0);
  std::vector<Composition> c1(compositions(1).begin(), compositions(1).end());
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].parts() == std::vector<int>{1});

  std::set<std::vector<int>> three;
  for (const Composition& k : compositions(3)) three.insert(k.parts());
  CHECK(three == std::set<std::vector<int>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
  CHECK(std::ranges::distance(compositions(16)) == 32768);

  std::uint64_t expect = 0;
  for (const Composition& k : compositions(9)) {
    CHECK(k.mask() == expect++);
    CHECK(k.total() == 9);
    CHECK(k.partial_sums().back() == 9);
  }
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
}

TEST_CASE("motif and composition bijection") {
  CHECK(to_composition(Motif({0, 1, 0})).parts() == std::vector<int>{2, 2});
  CHECK(to_composition(Motif({0, 0, 0, 0, 0})).parts() == std::vector<int>{6});
  CHECK(to_composition(Motif({1, 1, 1})).parts() == std::vector<int>{1, 1, 1, 1});
  for (int L = 0; L <= 12; ++L)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
      const Motif d = Motif::from_mask(L, mask);
      const Composition k = to_composition(d);
      REQUIRE(to_motif(k) == d);
      const auto K = k.partial_sums();
      for (int i = 1; i <= L; ++i) {
        const bool is_sum = std::find(K.begin(), K.end() - 1, i) != K.end() - 1;
        REQUIRE(is_sum == static_cast<bool>(d[i - 1]));
      }
    }
}

TEST_CASE("border strips") {
  CHECK(border_strip_from_motif(Motif({0, 0, 0})).columns().parts() == std::vector<int>{4});
  CHECK(border_strip_from_motif(Motif({1, 1, 1})).columns().parts() == std::vector<int>{1, 1, 1, 1});
  CHECK(border_strip_from_motif(Motif({0, 1, 1})).columns().parts() == std::vector<int>{2, 1, 1});

  const auto row = border_strip_from_motif(Motif({1, 1, 1})).cells();
  for (const Cell& c : row) CHECK(c.row == 0);
  const auto col = border_strip_from_motif(Motif({0, 0, 0})).cells();
  for (const Cell& c : col) CHECK(c.col == 0);

  for (int L = 0; L <= 9; ++L)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
      const BorderStrip bs = border_strip_from_motif(Motif::from_mask(L, mask));
      const auto cells = bs.cells();
      REQUIRE(cells.size() == static_cast<std::size_t>(L + 1));
      REQUIRE(no_two_by_two(cells));
      // column heights right to left
      std::map<int, int, std::greater<int>> heights;
      for (const Cell& c : cells) ++heights[c.col];
      std::vector<int> h;
      for (const auto& [col, count] : heights) h.push_back(count);
      REQUIRE(h == bs.columns().parts());
    }
}

TEST_CASE("delta rule") {
  const SpinAlphabet a(1, 2, 1, 1);
  CHECK(delta(1, 2, a) == 0);
  CHECK(delta(2, 2, a) == 0);
  CHECK(delta(3, 3, a) == 1);
  CHECK(delta(3, 1, a) == 1);
  CHECK_THROWS_AS(delta(0, 1, a), std::domain_error);
  CHECK_THROWS_AS(delta(1, 4, a), std::domain_error);
}

TEST_CASE("bond vectors") {
  const SpinAlphabet a(1, 2, 1, 1);
  CHECK(bond_vector_allowed({{1, 2, 2, 2}}, Motif({0, 0, 0}), a));
  // The single-row tableau holding 2,3,3,3 from left to right is read right
  // to left, giving the bond vector (3,3,3,2).
  CHECK(bond_vector_allowed({{3, 3, 3, 2}}, Motif({1, 1, 1}), a));
  CHECK_FALSE(bond_vector_allowed({{2, 3, 3, 3}}, Motif({1, 1, 1}), a));
  CHECK_FALSE(bond_vector_allowed({{2, 2, 1, 2}}, Motif({0, 0, 0}), a));
  CHECK_THROWS_AS(bond_vector_allowed({{1, 2}}, Motif({0, 0}), a), std::invalid_argument);
}

TEST_CASE("bond vector rule agrees with geometric tableau rules") {
  for (const SpinAlphabet& a : alphabets_upto(3)) {
    const int q = a.size();
    for (int L = 1; L <= 5; ++L) {
      std::uint64_t total = 1;
      for (int i = 0; i < L; ++i) total *= static_cast<std::uint64_t>(q);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (L - 1)); ++mask) {
        const Motif d = Motif::from_mask(L - 1, mask);
        const BorderStrip bs = border_strip_from_motif(d);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          BondVector s;
          std::uint64_t r = idx;
          for (int i = 0; i < L; ++i) {
            s.entries.push_back(static_cast<Label>(r % static_cast<std::uint64_t>(q)) + 1);
            r /= static_cast<std::uint64_t>(q);
          }
          REQUIRE(bond_vector_allowed(s, d, a) == geometric_tableau_ok(bs, s.entries, a));
        }
      }
    }
  }
}

TEST_CASE("starred tableau counts") {
  CHECK(count_starred_tableaux(Motif({0, 1, 0}), SpinAlphabet(1, 2, 1, 1)) == 6);
  CHECK(count_starred_tableaux(Motif({1, 0, 1}), SpinAlphabet(1, 2, -1, 1)) == 8);
  CHECK(count_starred_tableaux(Motif({0, 0, 0}), SpinAlphabet(1, 2, -1, 1)) == 0);

  const auto one = enumerate_starred_tableaux(Motif({1, 1, 1}), SpinAlphabet(1, 2, 1, 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].entries == std::vector<Label>{3, 3, 3, 2});
  const auto two = enumerate_starred_tableaux(Motif({0, 0, 0}), SpinAlphabet(1, 2, 1, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0].entries == std::vector<Label>{1, 2, 2, 2});
  CHECK(two[1].entries == std::vector<Label>{2, 2, 2, 2});

  const SpinAlphabet su11(1, 1, 1, -1);
  for (int N = 1; N <= 8; ++N)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask)
      CHECK(enumerate_starred_tableaux(Motif::from_mask(N, mask), su11).size() == 1);
}

TEST_CASE("transfer matrix equals enumeration") {
  for (int q = 1; q <= 4; ++q)
    for (int m = 0; m <= q; ++m)
      for (int eps : {1, -1})
        for (int epsp : {1, -1}) {
          const SpinAlphabet a(m, q - m, eps, epsp);
          for (int N = 0; N <= 6; ++N)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
              const Motif d = Motif::from_mask(N, mask);
              const auto list = enumerate_starred_tableaux(d, a);
              REQUIRE(BigInt(list.size()) == count_starred_tableaux(d, a));
              REQUIRE(BigInt(count_starred_tableaux_u64(mask, N, a)) == count_starred_tableaux(d, a));
              for (const BondVector& s : list) REQUIRE(starred_bond_vector_allowed(s, d, a));
            }
        }
}

TEST_CASE("completeness: starred counts sum to (m+n)^N") {
  for (const SpinAlphabet& a : alphabets_upto(4))
    for (int N = 1; N <= 10; ++N) {
      BigInt sum = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask)
        sum += count_starred_tableaux(Motif::from_mask(N, mask), a);
      REQUIRE(sum == ipow(a.size(), N));
    }
}

TEST_CASE("column fillings") {
  CHECK(d_mn(0, 3, 2) == 1);
  CHECK(d_mn(2, 1, 2) == 4);
  CHECK(d_mn(3, 0, 2) == 0);
  for (int k = 0; k <= 12; ++k)
    for (int r = 0; r <= 5; ++r) {
      CHECK(d_mn(k, r, 0) == binomial(r + k - 1, k));
      CHECK(d_mn(k, 0, r) == binomial(r, k));
    }
}
