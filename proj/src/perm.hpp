#pragma once

#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace permav {

// One-line notation over 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation parse(const std::string& text);
  static Permutation identity(int n);
  static Permutation standardize(std::span<const int> word);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int operator[](int i) const { return v_[i]; }
  const std::vector<int>& values() const { return v_; }
  std::span<const int> span() const { return v_; }

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

// Canonical (sorted, duplicate-free) set of forbidden patterns.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);

  static PatternSet parse(const std::string& text);

  const std::vector<Permutation>& patterns() const { return p_; }
  int size() const { return static_cast<int>(p_.size()); }
  std::string to_string() const;

  auto operator<=>(const PatternSet&) const = default;
  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Permutation> p_;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

// Compiled pattern for repeated containment queries.
class Matcher {
 public:
  explicit Matcher(const Permutation& q);

  int size() const { return k_; }
  int max_index() const { return max_index_; }

  bool occurs_in(std::span<const int> p) const;
  // Occurrence in which the pattern's maximum lands on position pos of p.
  bool occurs_through(std::span<const int> p, int pos) const;

 private:
  bool extend(std::span<const int> p, int t, int from, int* chosen, int forced_pos) const;

  int k_ = 0;
  int max_index_ = -1;
  std::vector<int> q_;
  std::vector<int> lo_;
  std::vector<int> hi_;
};

bool contains(const Permutation& p, const Permutation& q);
bool avoids(const Permutation& p, const PatternSet& t);
bool avoids(std::span<const int> p, const std::vector<Matcher>& t);

std::vector<PatternSet> symmetry_class(const PatternSet& t);

struct Statistic {
  enum class Kind {
    LRMaxCount,
    RLMaxCount,
    ValueAtFromStart,
    ValueAtFromEnd,
    LRMaxValuesAreTopInterval,
    LastPositionHoldsMax,
    RLMaxSuffix,
  };
  Kind kind = Kind::LRMaxCount;
  int k = 0;

  static Statistic parse(const std::string& name);
  std::string name() const;
  int min_length() const;
  bool operator==(const Statistic&) const = default;
};

int eval_statistic(std::span<const int> p, const Statistic& s);
int eval_statistic(const Permutation& p, const Statistic& s);

}  // namespace permav
