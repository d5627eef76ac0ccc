#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "enumerate.hpp"
#include "series.hpp"

namespace testsupport {

using permav::BigInt;
using permav::Permutation;
using permav::Rational;
using permav::Series;

// Naive containment: try every index subset of size |q|.
inline bool naive_contains(const std::vector<int>& p, const std::vector<int>& q) {
  const int n = static_cast<int>(p.size()), k = static_cast<int>(q.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(p[i]);
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = a + 1; b < k && iso; ++b) iso = (sub[a] < sub[b]) == (q[a] < q[b]);
    if (iso) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool naive_avoids(const std::vector<int>& p, const std::vector<std::vector<int>>& t) {
  for (const auto& q : t)
    if (naive_contains(p, q)) return false;
  return true;
}

// Visits every permutation of length n avoiding t, by listing all of S_n.
template <class F>
void for_each_naive(int n, const std::vector<std::vector<int>>& t, F&& visit) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    if (naive_avoids(p, t)) visit(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<std::vector<int>> values_of(const permav::PatternSet& t) {
  std::vector<std::vector<int>> out;
  for (const auto& q : t.patterns()) out.push_back(q.values());
  return out;
}

inline std::vector<BigInt> naive_counts(const permav::PatternSet& t, int n_max) {
  std::vector<BigInt> c;
  const auto qs = values_of(t);
  for (int n = 0; n <= n_max; ++n) {
    long k = 0;
    for_each_naive(n, qs, [&](const std::vector<int>&) { ++k; });
    c.emplace_back(k);
  }
  return c;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Permutation perm(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
  }

  Rational rational(int mag = 9, int den = 4) {
    Rational r(uniform(-mag, mag), uniform(1, den));
    r.canonicalize();
    return r;
  }

  Series series(int order, Rational constant) {
    std::vector<Rational> c(order);
    for (int i = 0; i < order; ++i) c[i] = i == 0 ? constant : rational();
    return Series(c);
  }

  Series series(int order) { return series(order, rational()); }

  permav::Polynomial poly(int max_degree, Rational constant) {
    std::vector<Rational> c(uniform(0, max_degree) + 1);
    for (size_t i = 0; i < c.size(); ++i) c[i] = i == 0 ? constant : rational();
    return permav::Polynomial(c);
  }
};

}  // namespace testsupport
