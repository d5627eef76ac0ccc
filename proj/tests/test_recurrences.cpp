#include "catalog.hpp"
#include "doctest.h"
#include "recurrences.hpp"
#include "support.hpp"

using namespace permav;

namespace {

BigInt binom(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

struct Brute {
  std::map<std::pair<int, int>, long> cells;
  std::map<int, long> rows;
  long total = 0;
};

// Avoiders of length n grouped by their first two letters.
Brute brute(const char* patterns, int n) {
  Brute b;
  testsupport::for_each_naive(n, testsupport::values_of(PatternSet::parse(patterns)), [&](const std::vector<int>& p) {
    ++b.total;
    if (n >= 1) ++b.rows[p[0]];
    if (n >= 2) ++b.cells[{p[0], p[1]}];
  });
  return b;
}

void check_tables(const char* patterns, const std::vector<RecurrenceTable>& tables, int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    INFO(patterns << " n=" << n);
    const RecurrenceTable& t = tables.at(n);
    Brute b = brute(patterns, n);
    CHECK(t.n == n);
    CHECK(t.total == b.total);
    BigInt rows = 0;
    for (int i = 1; i <= n; ++i) {
      CHECK(t.rows[i] == b.rows[i]);
      CHECK(t.rows[i] >= 0);
      rows += t.rows[i];
    }
    CHECK(rows == t.total);
    for (const auto& [ij, v] : t.cells) {
      CHECK(v >= 0);
      auto it = b.cells.find(ij);
      CHECK(v == (it == b.cells.end() ? 0 : it->second));
    }
  }
}

// Number of sites at which inserting n+1 keeps p avoiding t.
int active_sites(std::span<const int> p, const std::vector<Matcher>& ms) {
  const int n = static_cast<int>(p.size());
  int k = 0;
  std::vector<int> c(n + 1);
  for (int s = 0; s <= n; ++s) {
    for (int i = 0, j = 0; i <= n; ++i) c[i] = i == s ? n + 1 : p[j++];
    bool ok = true;
    for (const auto& m : ms) ok = ok && !m.occurs_through(c, s);
    k += ok;
  }
  return k;
}

}  // namespace

TEST_CASE("table engines reproduce brute-force cells") {
  check_tables("2134,1423,2341", case131_tables(8), 8);
  check_tables("1432,2431,3214", case164_tables(8), 8);
  check_tables("3124,4123,1243", case194_tables(8), 8);
  check_tables("1243,1423,2341", case199_tables(8), 8);
}

TEST_CASE("table engine totals") {
  const struct {
    int id;
    CountTable (*fn)(int);
  } engines[] = {{131, case131_counts}, {164, case164_counts}, {194, case194_counts},
                 {199, case199_counts}, {232, case232_counts}, {222, case222_counts}};
  for (const auto& e : engines) {
    INFO("case " << e.id);
    const CountTable c = e.fn(10);
    const CountTable oracle = count_avoiders(Catalog::builtin().get(e.id).patterns, 9, 1);
    const Series s = Catalog::builtin().evaluate_case(e.id, 11);
    for (int n = 0; n <= 3; ++n) CHECK(c.at(n) == (n == 3 ? 6 : n == 2 ? 2 : 1));
    CHECK(c.at(4) == 21);
    for (int n = 0; n <= 9; ++n) CHECK(c.at(n) == oracle.at(n));
    for (int n = 0; n <= 10; ++n) CHECK(s[n] == c.at(n));
  }
}

TEST_CASE("case 164 boundary cell") {
  const auto t = case164_tables(6);
  CHECK(t[5].cell(1, 3) == 5);
  CHECK(binom(5, 3) * 2 / 4 == 5);
  CHECK(t[3].total == 6);
}

TEST_CASE("auxiliary triangles") {
  const auto c = first_letter_123_triangle(10);
  const Series cat = catalan(11);
  for (int n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += c[n][i];
    CHECK(sum == cat[n]);
    CHECK(c[n][n] == cat[n - 1]);
  }
  for (int n = 1; n <= 7; ++n) {
    std::map<int, long> first;
    testsupport::for_each_naive(n, {{1, 2, 3}}, [&](const std::vector<int>& p) { ++first[p[0]]; });
    for (int i = 1; i <= n; ++i) CHECK(c[n][i] == first[i]);
  }

  const auto w = w_triangle(12);
  const Series w1 = rational_expand({1}, Polynomial{1, -1} * Polynomial{1, -1} * Polynomial{1, -2}, 13);
  for (int n = 0; n <= 12; ++n) {
    BigInt sum = 0;
    for (int j = 0; j <= n; ++j) sum += w[n][j];
    CHECK(sum == w1[n]);
    if (n >= 1) {
      BigInt prev = 0;
      for (int j = 0; j < n; ++j) prev += w[n - 1][j];
      CHECK(sum == 2 * prev + n + 1);
    }
  }
}

TEST_CASE("case 222 forest") {
  using F = Label::Family;
  CHECK_THROWS_AS(case222_forest(1), Error);
  const auto f = case222_forest(10);
  CHECK(f[0].n == 2);
  CHECK(f[0].counts.size() == 2);
  CHECK(f[0].counts.at({F::Plain, 3}) == 1);
  CHECK(f[0].counts.at({F::Bar, 3}) == 1);

  const std::map<Label, BigInt> level3{{{F::Plain, 3}, 1},     {{F::Plain, 4}, 1}, {{F::Bar, 3}, 1},
                                       {{F::Bar, 4}, 2},       {{F::DoubleBar, 3}, 1}};
  CHECK(f[1].counts == level3);
  CHECK(Label{F::Bar, 4}.to_string() == "4'");
  CHECK(Label{F::DoubleBar, 3}.to_string() == "3''");

  for (const auto& lv : f)
    for (const auto& [l, c] : lv.counts) CHECK(static_cast<int>(successors(l).size()) == l.k);

  const PatternSet t = Catalog::builtin().get(222).patterns;
  const CountTable oracle = count_avoiders(t, 10, 2);
  for (size_t i = 0; i < f.size(); ++i) {
    CHECK(f[i].total() == oracle.at(f[i].n));
    if (i + 1 < f.size()) {
      BigInt weighted = 0;
      for (const auto& [l, c] : f[i].counts) weighted += l.k * c;
      CHECK(weighted == f[i + 1].total());
    }
  }

  // The label k of each node is its number of active sites.
  std::vector<Matcher> ms;
  for (const auto& q : t.patterns()) ms.emplace_back(q);
  for (int n = 2; n <= 7; ++n) {
    std::map<int, BigInt> by_sites, by_label;
    for_each_avoider(t, n, 1, [&](std::span<const int> p, int) {
      if (static_cast<int>(p.size()) == n) by_sites[active_sites(p, ms)] += 1;
    });
    for (const auto& [l, c] : f[n - 2].counts) by_label[l.k] += c;
    CHECK(by_sites == by_label);
  }
}

TEST_CASE("case 242 engines") {
  CHECK(case242_sum(1) == 1);
  CHECK(case242_sum(4) == 21);
  CHECK(case242_sum(5) == 80);
  for (int n = 1; n <= 30; ++n) CHECK_NOTHROW(case242_sum(n));
  CHECK_THROWS_AS(case242_sum(0), Error);

  const int N = 20;
  const Series f = case242_fixed_point(N);
  const long prefix[] = {1, 1, 2, 6, 21, 80};
  for (int n = 0; n < 6; ++n) CHECK(f[n] == prefix[n]);
  const Series one = Series::from_polynomial(Polynomial{1}, N);
  const Series x = Series::from_polynomial(Polynomial{0, 1}, N);
  CHECK(sub(sub(f, one), div(mul(x, f), sub(one, mul(x, mul(f, f))))) == Series(N));
  CHECK(case242_sum_series(N) == f);
  const CountTable oracle = count_avoiders(Catalog::builtin().get(242).patterns, 9, 1);
  for (int n = 0; n <= 9; ++n) CHECK(f[n] == oracle.at(n));
}

TEST_CASE("case 118 series recurrence") {
  const int N = 20;
  const Series closed = Catalog::builtin().evaluate_auxiliary(118, "SumJ", N).first;
  const Series full = case118_J_recurrence(N, N + 1);
  CHECK(full == closed);
  CHECK(full[2] == 1);
  for (int m = 2; m <= 10; ++m) {
    const Series partial = case118_J_recurrence(N, m);
    for (int n = 0; n <= m; ++n) CHECK(partial[n] == full[n]);
  }
  CHECK(case118_J_recurrence(N, N + 5) == full);
  CHECK(case118_J1(N) == Catalog::builtin().evaluate_auxiliary(118, "J1", N).first);
}
