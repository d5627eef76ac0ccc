#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "series.hpp"

namespace permav {

// One level n of a two-index table a(n;i,j) with row totals a(n;i).
struct RecurrenceTable {
  int n = 0;
  std::map<std::pair<int, int>, BigInt> cells;
  std::vector<BigInt> rows;  // rows[i] = a(n;i), index 0 unused
  BigInt total;

  const BigInt& cell(int i, int j) const;
  bool has(int i, int j) const { return cells.count({i, j}) != 0; }
};

std::vector<RecurrenceTable> case131_tables(int n_max);
std::vector<RecurrenceTable> case164_tables(int n_max);
std::vector<RecurrenceTable> case194_tables(int n_max);
std::vector<RecurrenceTable> case199_tables(int n_max);

CountTable case131_counts(int n_max);
CountTable case164_counts(int n_max);
CountTable case194_counts(int n_max);
CountTable case199_counts(int n_max);
CountTable case232_counts(int n_max);

// c[n][i]: 123-avoiders of length n with first letter i.
std::vector<std::vector<BigInt>> first_letter_123_triangle(int n_max);
// w_{n,j} for 0 <= j <= n <= n_max.
std::vector<std::vector<BigInt>> w_triangle(int n_max);

struct Label {
  enum class Family { Plain, Bar, DoubleBar };
  Family family = Family::Plain;
  int k = 0;

  std::string to_string() const;
  auto operator<=>(const Label&) const = default;
};

struct LabelVector {
  int n = 0;
  std::map<Label, BigInt> counts;

  BigInt total() const;
};

std::vector<Label> successors(const Label& l);
std::vector<LabelVector> case222_forest(int n_max);
CountTable case222_counts(int n_max);

Series case242_fixed_point(int order);
BigInt case242_sum(int n);
Series case242_sum_series(int order);

Series case118_J1(int order);
// Sum of J_m for 2 <= m <= m_max, from the series-valued recurrence.
Series case118_J_recurrence(int order, int m_max);

}  // namespace permav
