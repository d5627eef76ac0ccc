#include <mutex>
#include <set>

#include "doctest.h"
#include "enumerate.hpp"
#include "support.hpp"

using namespace permav;
using testsupport::Gen;

namespace {

PatternSet T(const char* s) { return PatternSet::parse(s); }

long naive_filtered(const PatternSet& t, int n, const FilterSpec& f) {
  long k = 0;
  testsupport::for_each_naive(n, testsupport::values_of(t), [&](const std::vector<int>& p) {
    if (f.holds(p)) ++k;
  });
  return k;
}

}  // namespace

TEST_CASE("count examples") {
  const CountTable c = count_avoiders(T("1342,2143,2314"), 6, 1);
  CHECK(c.at(4) == 21);
  CHECK(c.at(5) == 74);
  CHECK(c.at(6) == 255);
  const CountTable cat = count_avoiders(T("123"), 5, 1);
  const long expect[] = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) CHECK(cat.at(n) == expect[n]);
  CHECK(count_avoiders(T("1342,2143,2314"), 3, 1).at(3) == 6);
  CHECK(count_avoiders(T("1"), 3, 1).at(0) == 1);
  CHECK(count_avoiders(T("1"), 3, 1).at(1) == 0);
  CHECK_THROWS_AS(c.at(7), Error);
}

TEST_CASE("oracle matches naive listing on random pattern sets") {
  Gen g(11);
  for (int it = 0; it < 25; ++it) {
    std::vector<Permutation> qs;
    const int k = g.uniform(1, 3);
    for (int i = 0; i < k; ++i) qs.push_back(g.perm(g.uniform(3, 4)));
    const PatternSet t(qs);
    const CountTable c = count_avoiders(t, 7, 2);
    const auto naive = testsupport::naive_counts(t, 7);
    for (int n = 0; n <= 7; ++n) CHECK(c.at(n) == naive[n]);
  }
}

TEST_CASE("counts are invariant under symmetry and partitioning") {
  const PatternSet t = T("1342,2314,3412");
  const CountTable base = count_avoiders(t, 9, 1);
  for (const auto& m : symmetry_class(t)) CHECK(count_avoiders(m, 9, 1) == base);
  for (int threads : {2, 3, 8}) CHECK(count_avoiders(t, 9, threads) == base);
  for (int n = 1; n <= 9; ++n) {
    CHECK(base.at(n) <= (n + 1) * base.at(n - 1));
    if (n <= 3) CHECK(base.at(n) == (n == 3 ? 6 : n == 2 ? 2 : 1));
  }
}

TEST_CASE("visitor sees every avoider exactly once") {
  const PatternSet t = T("1342,2143,2314");
  std::mutex mu;
  std::set<std::vector<int>> seen;
  long visits = 0;
  for_each_avoider(t, 7, 3, [&](std::span<const int> p, int) {
    std::lock_guard<std::mutex> lock(mu);
    seen.insert(std::vector<int>(p.begin(), p.end()));
    ++visits;
  });
  CHECK(static_cast<long>(seen.size()) == visits);
  for (const auto& p : seen) {
    CHECK(testsupport::naive_avoids(p, testsupport::values_of(t)));
    // Every one-point deletion also avoids.
    for (size_t i = 0; i < p.size(); ++i) {
      std::vector<int> w = p;
      w.erase(w.begin() + static_cast<long>(i));
      CHECK(seen.count(Permutation::standardize(w).values()) == 1);
    }
  }
}

TEST_CASE("filter parsing") {
  CHECK(Target::parse("n-1").resolve(7) == 6);
  CHECK(Target::parse("n").resolve(7) == 7);
  CHECK(Target::parse("3").resolve(7) == 3);
  CHECK(Target::parse("n+2").resolve(7) == 9);
  CHECK_THROWS_AS(Target::parse("m"), Error);
  const FilterSpec f = FilterSpec::parse("lrmax==2;start1<=n-2");
  CHECK(f.clauses.size() == 2);
  CHECK(FilterSpec::parse(f.to_string()).to_string() == f.to_string());
  CHECK(FilterSpec::parse("start2=n").clauses[0].cmp == Clause::Cmp::Eq);
  CHECK(FilterSpec::parse("rlmax>=2").clauses[0].cmp == Clause::Cmp::Ge);
  CHECK(f.min_length() == 1);
  CHECK(FilterSpec::parse("start3==n").min_length() == 3);
  CHECK_THROWS_AS(FilterSpec::parse("lrmax<2"), Error);
}

TEST_CASE("filtered counts") {
  const PatternSet t106 = T("1342,2143,3412");
  const CountTable j = count_filtered(t106, 6, FilterSpec::parse("start2==n"), 2, 1);
  CHECK(j.at(2) == 1);
  CHECK(j.at(3) == 2);
  CHECK(j.at(4) == 5);
  try {
    count_filtered(t106, 6, FilterSpec::parse("start2==n"), 0, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
    CHECK(std::string(e.what()).find("start2") != std::string::npos);
  }

  // Avoiders starting with their maximum are counted by the previous length.
  const CountTable all = count_avoiders(t106, 8, 1);
  const CountTable g1 = count_filtered(t106, 8, FilterSpec::parse("lrmax==1"), 0, 1);
  CHECK(g1.at(0) == 0);
  for (int n = 1; n <= 8; ++n) CHECK(g1.at(n) == all.at(n - 1));

  Gen g(12);
  const char* filters[] = {"lrmax==2", "start1==n-1", "rlmax>=2;lastmax==0", "lrtop==1", "end1<=2", "rlsuffix==1"};
  for (int it = 0; it < 12; ++it) {
    std::vector<Permutation> qs;
    for (int i = 0; i < 3; ++i) qs.push_back(g.perm(4));
    const PatternSet t(qs);
    const FilterSpec f = FilterSpec::parse(filters[it % 6]);
    const CountTable c = count_filtered(t, 7, f, f.min_length(), 2);
    const CountTable total = count_avoiders(t, 7, 1);
    for (int n = f.min_length(); n <= 7; ++n) {
      CHECK(c.at(n) == naive_filtered(t, n, f));
      CHECK(c.at(n) <= total.at(n));
    }
  }
}

TEST_CASE("partition by statistic") {
  const PatternSet t = T("1342,2143,2314");
  const CountTable all = count_avoiders(t, 8, 1);
  for (const char* s : {"lrmax", "rlmax", "start1", "end1"}) {
    const Statistic st = Statistic::parse(s);
    const auto parts = count_by_statistic(t, 8, st, 2);
    for (int n = st.min_length(); n <= 8; ++n) {
      BigInt sum = 0;
      for (const auto& [v, table] : parts) sum += table.at(n);
      CHECK(sum == all.at(n));
    }
  }
  const auto lr = count_by_statistic(t, 1, Statistic::parse("lrmax"), 1);
  CHECK(lr.at(1).at(1) == 1);
}

TEST_CASE("table serialization") {
  const CountTable c = count_avoiders(T("1342,2143,2314"), 6, 1);
  CHECK(c.to_json() == R"({"0":"1","1":"1","2":"2","3":"6","4":"21","5":"74","6":"255"})");
  CHECK(CountTable::from_json(c.to_json()) == c);
  CHECK(c.to_csv().rfind("n,count\n0,1\n1,1\n", 0) == 0);
  CHECK_THROWS_AS(CountTable::from_json("[1,2]"), Error);
}
