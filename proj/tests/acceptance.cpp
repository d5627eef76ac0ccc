#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "permav/permav.h"
#include "recurrences.hpp"

using namespace permav;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int k, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", k, title, o.detail.c_str(), s);
  std::fflush(stdout);
}

const Catalog& cat() { return Catalog::builtin(); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool prefix_is(const Series& s, std::initializer_list<long> expect) {
  int i = 0;
  for (long v : expect)
    if (i >= s.order() || s[i++] != v) return false;
  return true;
}

// Counts mismatches and keeps the first one for the report.
struct Mismatch {
  std::string first;
  int count = 0;
  void note(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count == 0) return {true, ok_detail};
    return {false, std::to_string(count) + " mismatches, first: " + first};
  }
};

std::string at(const std::string& what, int n, const std::string& got, const std::string& want) {
  return what + " n=" + std::to_string(n) + " got " + got + " expected " + want;
}

Outcome full_suite() {
  Mismatch m;
  for (int id : cat().ids()) {
    const CountTable oracle = count_avoiders(cat().get(id).patterns, 9);
    const Series s = cat().evaluate_case(id, 10);
    for (int n = 0; n <= 9; ++n)
      if (s[n] != oracle.at(n)) m.note(at("case " + std::to_string(id), n, s[n].get_str(), oracle.at(n).get_str()));
  }
  return m.outcome(std::to_string(cat().ids().size()) + " cases, n <= 9");
}

Outcome universal() {
  Mismatch m;
  for (int id : cat().ids()) {
    const CountTable oracle = count_avoiders(cat().get(id).patterns, 4, 1);
    const Series s = cat().evaluate_case(id, 5);
    for (int n = 0; n <= 4; ++n) {
      const BigInt want = n <= 3 ? factorial(n) : BigInt(21);
      const std::string c = "case " + std::to_string(id);
      if (oracle.at(n) != want) m.note(at(c + " oracle", n, oracle.at(n).get_str(), want.get_str()));
      if (s[n] != want) m.note(at(c + " series", n, s[n].get_str(), want.get_str()));
    }
  }
  return m.outcome("a(n) = n! for n <= 3 and a(4) = 21 in oracle and series");
}

std::vector<BigInt> upto9(const CountTable& c) {
  std::vector<BigInt> v;
  for (int n = 0; n <= 9; ++n) v.push_back(c.at(n));
  return v;
}

Outcome engines() {
  Mismatch m;
  const struct {
    int id;
    const char* name;
    std::function<std::vector<BigInt>()> run;
  } list[] = {
      {131, "table", [] { return upto9(case131_counts(9)); }},
      {164, "table", [] { return upto9(case164_counts(9)); }},
      {194, "table", [] { return upto9(case194_counts(9)); }},
      {199, "table", [] { return upto9(case199_counts(9)); }},
      {232, "table", [] { return upto9(case232_counts(9)); }},
      {222, "forest", [] { return upto9(case222_counts(9)); }},
      {242, "fixed point",
       [] {
         const Series f = case242_fixed_point(10);
         std::vector<BigInt> v;
         for (int n = 0; n <= 9; ++n) v.push_back(f[n].get_num());
         return v;
       }},
      {242, "sum",
       [] {
         std::vector<BigInt> v{1};
         for (int n = 1; n <= 9; ++n) v.push_back(case242_sum(n));
         return v;
       }},
  };
  for (const auto& e : list) {
    const CountTable oracle = count_avoiders(cat().get(e.id).patterns, 9);
    const Series s = cat().evaluate_case(e.id, 10);
    const auto got = e.run();
    const std::string name = "case " + std::to_string(e.id) + " " + e.name;
    for (int n = 0; n <= 9; ++n) {
      if (got[n] != oracle.at(n)) m.note(at(name + " vs oracle", n, got[n].get_str(), oracle.at(n).get_str()));
      if (s[n] != got[n]) m.note(at(name + " vs catalog", n, got[n].get_str(), s[n].get_str()));
    }
  }
  return m.outcome("8 engines agree with oracle and catalog for n <= 9");
}

Outcome anchors() {
  Mismatch m;
  const Series a = rational_expand({1, -2}, {1, -3, 1}, 7);
  if (!prefix_is(a, {1, 1, 2, 5, 13, 34, 89})) m.note("(1-2x)/(1-3x+x^2)");
  const Series b = div(Series::from_polynomial({1, -1}, 12), Series::from_polynomial({1, -2}, 12));
  for (int n = 0; n < 12; ++n)
    if (b[n] != (n == 0 ? BigInt(1) : BigInt(1) << (n - 1))) m.note("(1-x)/(1-2x) at n=" + std::to_string(n));
  if (!prefix_is(catalan(6), {1, 1, 2, 5, 14, 42})) m.note("catalan prefix");
  return m.outcome("Fibonacci bisection, powers of two, Catalan prefix");
}

Outcome auxiliaries() {
  Mismatch m;
  const struct {
    int id;
    const char* aux;
    const char* filter;
  } checks[] = {{106, "J", "start2==n"}, {77, "H", "start1==n-1"}, {163, "G2", "lrmax==2"},
                {182, "G2", "lrmax==2"}, {214, "G2", "lrmax==2"}, {103, "G2", "lrmax==2"}};
  for (const auto& c : checks) {
    auto [s, f] = cat().evaluate_auxiliary(c.id, c.aux, 9);
    const std::string name = "case " + std::to_string(c.id) + " " + c.aux;
    if (f.to_string() != c.filter) m.note(name + " filter is " + f.to_string());
    const CountTable oracle = count_filtered(cat().get(c.id).patterns, 8, FilterSpec::parse(c.filter), f.min_length());
    for (int n = f.min_length(); n <= 8; ++n)
      if (s[n] != oracle.at(n)) m.note(at(name, n, s[n].get_str(), oracle.at(n).get_str()));
  }
  // G_2 = (xC - x) F_T for case 103, built here from the main series.
  const Series x = Series::from_polynomial({0, 1}, 9);
  const Series g2 = mul(sub(mul(x, catalan(9)), x), cat().evaluate_case(103, 9));
  const CountTable oracle = count_filtered(cat().get(103).patterns, 8, FilterSpec::parse("lrmax==2"), 0);
  for (int n = 0; n <= 8; ++n)
    if (g2[n] != oracle.at(n)) m.note(at("case 103 (xC-x)F", n, g2[n].get_str(), oracle.at(n).get_str()));
  return m.outcome("6 auxiliaries and the case 103 G_2 identity, n <= 8");
}

Outcome algebra() {
  Mismatch m;
  std::mt19937_64 rng(20240601);
  const int N = 24;
  auto q = [&] {
    Rational r(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
    r.canonicalize();
    return r;
  };
  auto series = [&](std::optional<Rational> c0) {
    std::vector<Rational> v(N);
    for (int i = 0; i < N; ++i) v[i] = i == 0 && c0 ? *c0 : q();
    return Series(v);
  };
  const Series x = Series::from_polynomial({0, 1}, N);
  for (int it = 0; it < 100; ++it) {
    const Series a = series({}), b = series({}), c = series({});
    if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a) || add(add(a, b), c) != add(a, add(b, c)) ||
        mul(mul(a, b), c) != mul(a, mul(b, c)) || mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
      m.note("ring law, instance " + std::to_string(it));
    Rational d0 = q();
    if (d0 == 0) d0 = 1;
    const Series d = series(d0);
    if (mul(div(a, d), d) != a) m.note("div/mul roundtrip, instance " + std::to_string(it));
    const Series u = series(Rational(1));
    const Series r = sqrt(u);
    if (mul(r, r) != u || sqrt(mul(u, u)) != u) m.note("sqrt roundtrip, instance " + std::to_string(it));
    if (compose(a, x) != a) m.note("compose identity, instance " + std::to_string(it));
  }
  const Series C = catalan(N);
  if (sub(C, add(Series::from_polynomial({1}, N), mul(x, mul(C, C)))) != Series(N)) m.note("C = 1 + xC^2");
  return m.outcome("100 random instances per law at order 24, C = 1 + xC^2");
}

Outcome j_recurrence() {
  const int N = 20;
  const Series sum = case118_J_recurrence(N, N + 1);
  const Series closed =
      rational_expand(Polynomial{0, 0, 1, -7, 22, -35, 29, -13},
                      Polynomial{1, -1} * Polynomial{1, -1} * Polynomial{1, -1} * Polynomial{1, -1} *
                          Polynomial{1, -2} * Polynomial{1, -2} * Polynomial{1, -2},
                      N);
  for (int n = 0; n < N; ++n)
    if (sum[n] != closed[n]) return {false, at("sum of J_m", n, sum[n].get_str(), closed[n].get_str())};
  return {true, "sum of J_m for m >= 2 equals the closed form to order 20"};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pa_string_free(s);
  return out;
}

Outcome negative_control() {
  const struct {
    int id, leaf, coeff;
    const char* delta;
  } mutations[] = {{133, 0, 1, "1"}, {175, 1, 3, "-1"}, {106, 2, 2, "1/2"}, {204, 0, 0, "1"}};
  std::ostringstream detail;
  int localized = 0;
  for (const auto& mu : mutations) {
    pa_catalog* c = nullptr;
    if (pa_catalog_open(&c) != PA_OK) return {false, pa_last_error()};
    if (pa_catalog_mutate(c, mu.id, mu.leaf, mu.coeff, mu.delta) != PA_OK) {
      const std::string e = pa_last_error();
      pa_catalog_free(c);
      return {false, "mutation of case " + std::to_string(mu.id) + " rejected: " + e};
    }
    int count = 0;
    pa_catalog_ids(c, nullptr, 0, &count);
    std::vector<int> ids(count);
    pa_catalog_ids(c, ids.data(), count, &count);
    std::vector<int> failed;
    std::string where;
    for (int id : ids) {
      char* report = nullptr;
      int passed = 0;
      if (pa_catalog_verify(c, id, 8, 0, &report, &passed) != PA_OK) {
        pa_catalog_free(c);
        return {false, pa_last_error()};
      }
      const auto r = nlohmann::ordered_json::parse(take(report));
      if (!passed) {
        failed.push_back(id);
        const auto& d = r["first_divergence"];
        if (id == mu.id && !d.is_null() && d["n"].is_number())
          where = d["part"].get<std::string>() + " n=" + d["n"].dump();
      }
    }
    pa_catalog_free(c);
    if (failed.size() == 1 && failed[0] == mu.id && !where.empty()) {
      ++localized;
      detail << (localized > 1 ? ", " : "") << mu.id << " at " << where;
    } else {
      return {false, "mutating case " + std::to_string(mu.id) + " was not caught as a single localized failure"};
    }
  }
  return {true, std::to_string(localized) + " mutated cases each fail alone: " + detail.str()};
}

}  // namespace

int main() {
  criterion(1, "full-suite oracle agreement", full_suite);
  criterion(2, "universal small-n values", universal);
  criterion(3, "recurrence engines agree with oracle and catalog", engines);
  criterion(4, "known-sequence anchors", anchors);
  criterion(5, "auxiliary series against filtered counts", auxiliaries);
  criterion(6, "series algebra properties", algebra);
  criterion(7, "series-valued J_m recurrence", j_recurrence);
  criterion(8, "negative control by coefficient mutation", negative_control);
  std::printf("%d/8 criteria pass\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
