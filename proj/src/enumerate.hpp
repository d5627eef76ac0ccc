#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "perm.hpp"

namespace permav {

using BigInt = mpz_class;

// counts[n] for n in [n_min, n_max].
struct CountTable {
  std::map<int, BigInt> counts;

  const BigInt& at(int n) const;
  int n_min() const { return counts.empty() ? 0 : counts.begin()->first; }
  int n_max() const { return counts.empty() ? -1 : counts.rbegin()->first; }

  std::string to_json() const;
  std::string to_csv() const;
  static CountTable from_json(const std::string& text);
  bool operator==(const CountTable&) const = default;
};

// Target value a*n + b, resolved per length.
struct Target {
  int n_coeff = 0;
  int offset = 0;

  static Target parse(const std::string& text);
  int resolve(int n) const { return n_coeff * n + offset; }
  std::string to_string() const;
  bool operator==(const Target&) const = default;
};

struct Clause {
  enum class Cmp { Eq, Le, Ge };
  Statistic stat;
  Cmp cmp = Cmp::Eq;
  Target target;

  static Clause parse(const std::string& text);
  bool holds(std::span<const int> p) const;
  std::string to_string() const;
  bool operator==(const Clause&) const = default;
};

struct FilterSpec {
  std::vector<Clause> clauses;

  static FilterSpec parse(const std::string& text);
  int min_length() const;
  bool holds(std::span<const int> p) const;
  std::string to_string() const;
};

// Visits every avoider of length 0..n_max; worker identifies the calling thread's partition.
using AvoiderVisitor = std::function<void(std::span<const int> perm, int worker)>;
int for_each_avoider(const PatternSet& t, int n_max, int threads, const AvoiderVisitor& visit);

CountTable count_avoiders(const PatternSet& t, int n_max, int threads = 0);
CountTable count_filtered(const PatternSet& t, int n_max, const FilterSpec& f, int n_min = 0, int threads = 0);
std::map<int, CountTable> count_by_statistic(const PatternSet& t, int n_max, const Statistic& s, int threads = 0);

int default_threads();

}  // namespace permav
