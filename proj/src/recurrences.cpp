#include "recurrences.hpp"

#include <functional>

namespace permav {

const BigInt& RecurrenceTable::cell(int i, int j) const {
  auto it = cells.find({i, j});
  if (it == cells.end())
    throw Error(ErrorCode::OutOfRange, "a(" + std::to_string(n) + ";" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is not determined by the recurrence");
  return it->second;
}

namespace {

BigInt binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow2(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigInt catalan_number(int n) { return binom(2 * n, n) / (n + 1); }

// Table under construction at level n; every write is range- and sign-checked.
class Level {
 public:
  Level(std::string engine, int n) : engine_(std::move(engine)) {
    t_.n = n;
    t_.rows.assign(n + 1, 0);
  }

  void set(int i, int j, const BigInt& v, const std::string& line) {
    const int n = t_.n;
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw Error(ErrorCode::OutOfRange, engine_ + ": line " + line + " writes outside the table at " + where(i, j));
    if (v < 0)
      throw Error(ErrorCode::Domain, engine_ + ": line " + line + " produced negative " + v.get_str() + " at " + where(i, j));
    auto [it, fresh] = t_.cells.emplace(std::make_pair(i, j), v);
    if (fresh) {
      line_[{i, j}] = line;
    } else if (it->second != v) {
      throw Error(ErrorCode::Domain, engine_ + ": lines " + line_[{i, j}] + " and " + line + " disagree at " +
                                         where(i, j) + " (" + it->second.get_str() + " vs " + v.get_str() + ")");
    }
  }

  const BigInt& get(int i, int j) const {
    auto it = t_.cells.find({i, j});
    if (it == t_.cells.end()) throw Error(ErrorCode::OutOfRange, engine_ + ": " + where(i, j) + " read before it is set");
    return it->second;
  }

  // Row totals: a full row is summed; a row with a closed-form total must match any full sum.
  RecurrenceTable finish(const std::map<int, BigInt>& given_rows) {
    const int n = t_.n;
    for (int i = 1; i <= n; ++i) {
      BigInt sum = 0;
      bool full = true;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        auto it = t_.cells.find({i, j});
        if (it == t_.cells.end()) {
          full = false;
        } else {
          sum += it->second;
        }
      }
      if (n == 1) sum = 1;
      auto g = given_rows.find(i);
      if (g != given_rows.end()) {
        if (full && g->second != sum)
          throw Error(ErrorCode::Domain, engine_ + ": row " + std::to_string(i) + " at n=" + std::to_string(n) +
                                             " sums to " + sum.get_str() + " but its closed form gives " +
                                             g->second.get_str());
        t_.rows[i] = g->second;
      } else if (full) {
        t_.rows[i] = sum;
      } else {
        throw Error(ErrorCode::OutOfRange, engine_ + ": row " + std::to_string(i) + " at n=" + std::to_string(n) +
                                               " is not covered by any line");
      }
      if (t_.rows[i] < 0) throw Error(ErrorCode::Domain, engine_ + ": negative row total");
    }
    t_.total = 0;
    for (int i = 1; i <= n; ++i) t_.total += t_.rows[i];
    return t_;
  }

 private:
  std::string where(int i, int j) const {
    return "a(" + std::to_string(t_.n) + ";" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  std::string engine_;
  RecurrenceTable t_;
  std::map<std::pair<int, int>, std::string> line_;
};

constexpr int kSeedDepth = 4;

std::vector<RecurrenceTable> seed_tables(const std::string& patterns, int n_max) {
  const int depth = std::min(n_max, kSeedDepth);
  std::vector<RecurrenceTable> out(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    out[n].n = n;
    out[n].rows.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) out[n].cells[{i, j}] = 0;
  }
  for_each_avoider(PatternSet::parse(patterns), depth, 1, [&](std::span<const int> p, int) {
    const int n = static_cast<int>(p.size());
    auto& t = out[n];
    t.total += 1;
    if (n >= 1) t.rows[p[0]] += 1;
    if (n >= 2) t.cells[{p[0], p[1]}] += 1;
  });
  return out;
}

CountTable totals(const std::vector<RecurrenceTable>& tables) {
  CountTable c;
  for (const auto& t : tables) c.counts[t.n] = t.total;
  return c;
}

// Coefficient list of a rational function, used for closed-form row totals.
std::vector<BigInt> integer_expansion(const Polynomial& num, const Polynomial& den, int order) {
  return rational_expand(num, den, order).integers();
}

Polynomial one_minus_x_pow(int k) {
  Polynomial r{1};
  for (int i = 0; i < k; ++i) r = r * Polynomial{1, -1};
  return r;
}

using Step = std::function<RecurrenceTable(int n, const std::vector<RecurrenceTable>& lower)>;

std::vector<RecurrenceTable> run_engine(const std::string& patterns, int n_max, int n_min, const Step& step) {
  if (n_max < n_min) throw Error(ErrorCode::InvalidArgument, "n_max must be >= " + std::to_string(n_min));
  auto tables = seed_tables(patterns, n_max);
  for (int n = kSeedDepth + 1; n <= n_max; ++n) tables.push_back(step(n, tables));
  return tables;
}

}  // namespace

std::vector<RecurrenceTable> case131_tables(int n_max) {
  const auto g = integer_expansion(Polynomial{1, -3, 4, -1, 1}, one_minus_x_pow(4), n_max + 1);
  auto ell = [](int i) -> BigInt { return pow2(i) - i; };
  return run_engine("2134,1423,2341", n_max, 1, [&](int n, const std::vector<RecurrenceTable>& lo) {
    const auto& pr = lo[n - 1];
    auto prev = [&](int i, int j) { return i == j ? BigInt(0) : pr.cell(i, j); };
    Level L("case131", n);
    for (int i = 2; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j) L.set(i, j, prev(i, j), "2<=i<j<=n-2");
    for (int i = 2; i <= n - 2; ++i)
      for (int j = 1; j < i; ++j) {
        BigInt v = prev(i, j);
        for (int k = 1; k < j; ++k) v += prev(j, k);
        L.set(i, j, v, "j<i<=n-2");
      }
    for (int j = 1; j <= n - 2; ++j) L.set(n - 1, j, pr.rows[j], "a(n;n-1,j)");
    for (int j = 1; j <= n - 1; ++j) L.set(n, j, pr.rows[j], "a(n;n,j)");
    for (int i = 1; i <= n - 2; ++i) L.set(i, n - 1, prev(i, n - 2) + ell(i - 1), "b(n;i)");
    L.set(n - 1, n, lo[n - 2].total, "a(n;n-1,n)");
    for (int i = 1; i <= n - 1; ++i) {
      BigInt v = prev(i, n - 1);
      for (int k = 1; k < i; ++k) v += prev(i, k);
      L.set(i, n, v, "b'(n;i)");
    }
    return L.finish({{1, g[n - 1]}});
  });
}

std::vector<RecurrenceTable> case164_tables(int n_max) {
  return run_engine("1432,2431,3214", n_max, 2, [](int n, const std::vector<RecurrenceTable>& lo) {
    const auto& pr = lo[n - 1];
    Level L("case164", n);
    for (int j = 2; j <= n; ++j) {
      const BigInt num = BigInt(j - 1) * binom(2 * n - 2 - j, n - 2);
      if (num % (n - 1) != 0)
        throw Error(ErrorCode::NonIntegral, "case164: a(n;1,j) term is not integral at n=" + std::to_string(n) +
                                                ", j=" + std::to_string(j));
      L.set(1, j, num / (n - 1), "a(n;1,j)");
    }
    for (int i = 2; i <= n - 1; ++i) {
      L.set(i, i + 1, pr.rows[i], "a(n;i,i+1)");
      if (i + 2 <= n) L.set(i, i + 2, L.get(i - 1, i + 2), "a(n;i,i+2)");
      for (int j = i + 3; j <= n; ++j) {
        BigInt v = 0;
        for (int k = j - 1; k <= n - 1; ++k) v += pr.cell(i, k);
        L.set(i, j, v, "j>=i+3");
      }
    }
    for (int i = 2; i <= n - 1; ++i) L.set(i, 1, L.get(1, i) + pow2(i - 2) + 1 - i, "a(n;i,1)");
    for (int i = 3; i <= n - 2; ++i)
      for (int j = 2; j < i; ++j) L.set(i, j, pr.cell(i, j), "2<=j<i<=n-2");
    for (int j = 2; j <= n - 3; ++j) L.set(n - 1, j, pr.cell(n - 2, j) + pow2(n - 3 - j), "a(n;n-1,j)");
    L.set(n - 1, n - 2, lo[n - 3].total, "a(n;n-1,n-2)");
    for (int j = 1; j <= n - 1; ++j) L.set(n, j, pr.rows[j], "a(n;n,j)");
    return L.finish({});
  });
}

std::vector<RecurrenceTable> case194_tables(int n_max) {
  const auto h = integer_expansion(Polynomial{1, -3, 2, 1}, Polynomial{1, -4, 4}, n_max + 1);
  return run_engine("3124,4123,1243", n_max, 2, [&](int n, const std::vector<RecurrenceTable>& lo) {
    const auto& pr = lo[n - 1];
    auto b_prev = [&](int k) { return k + 1 <= n - 1 ? pr.cell(k, k + 1) : BigInt(0); };
    Level L("case194", n);
    std::vector<BigInt> b(n + 1, 0);
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = 1; k <= i; ++k) b[i] += b_prev(k);
      L.set(i, i + 1, b[i], "b(n;i)");
    }
    for (int i = 2; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        L.set(i, j, pr.cell(i, j) + pr.cell(i, j - 1) + b[i - 1], "2<=i<j<=n-1");
    for (int i = 2; i <= n - 2; ++i) L.set(i, n, L.get(i, n - 1), "a(n;i,n)");
    for (int i = 3; i <= n - 1; ++i)
      for (int j = 1; j < i - 1; ++j) {
        BigInt v = 0;
        for (int k = 1; k <= j; ++k) v += pr.cell(i - 1, k);
        L.set(i, j, v, "j<i-1<=n-2");
      }
    for (int i = 2; i <= n; ++i) L.set(i, i - 1, pr.rows[i - 1], "a(n;i,i-1)");
    return L.finish({{1, h[n - 1]}, {n, catalan_number(n - 1)}});
  });
}

std::vector<std::vector<BigInt>> w_triangle(int n_max) {
  std::vector<std::vector<BigInt>> w(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    w[n].assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
      if (n == 0) {
        w[n][j] = 1;
        continue;
      }
      const BigInt a = j <= n - 1 ? w[n - 1][j] : BigInt(0);
      const BigInt c = j >= 1 ? w[n - 1][j - 1] : BigInt(0);
      w[n][j] = a + c + 1;
    }
  }
  return w;
}

std::vector<RecurrenceTable> case199_tables(int n_max) {
  const auto w = w_triangle(std::max(n_max, 0));
  auto wv = [&](int n, int j) { return n < 0 || j < 0 || j > n ? BigInt(0) : w[n][j]; };
  return run_engine("1243,1423,2341", n_max, 2, [&](int n, const std::vector<RecurrenceTable>& lo) {
    const auto& pr = lo[n - 1];
    auto t = [&](int m) { return lo[m].total; };
    Level L("case199", n);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j) L.set(i, j, pr.cell(i, j), "1<=i<j<=n-2");
    for (int j = 1; j <= n - 2; ++j) L.set(n - 1, j, pr.rows[j], "a(n;n-1,j)");
    for (int i = 2; i <= n; ++i) L.set(i, i - 1, pr.rows[i - 1], "a(n;i,i-1)");
    for (int i = 1; i <= n - 1; ++i) L.set(i, i + 1, t(i - 1), "a(n;i,i+1)");
    L.set(n - 1, n, t(n - 2), "a(n;n-1,n)");
    for (int j = 1; j <= n - 1; ++j) L.set(n, j, pr.rows[j], "a(n;n,j)");
    for (int i = 1; i <= n - 3; ++i) {
      BigInt v = 0;
      for (int k = 1; k <= i; ++k) v += pr.cell(k, n - 1);
      L.set(i, n, v, "b'(n;i)");
    }
    L.set(n - 2, n, t(n - 2), "b'(n;n-2)");
    for (int i = 1; i <= n - 2; ++i) L.set(i, n - 1, pr.cell(i, n - 1) + binom(n - 3, i), "b(n;i)");
    for (int i = n - 2; i >= 3; --i)
      for (int j = 1; j < i - 1; ++j) L.set(i, j, L.get(i + 1, j) - wv(i - 3, j - 1), "a(n;i,j)+w=a(n;i+1,j)");
    return L.finish({{1, binom(n - 1, 2) + 1}});
  });
}

CountTable case131_counts(int n_max) { return totals(case131_tables(n_max)); }
CountTable case164_counts(int n_max) { return totals(case164_tables(n_max)); }
CountTable case194_counts(int n_max) { return totals(case194_tables(n_max)); }
CountTable case199_counts(int n_max) { return totals(case199_tables(n_max)); }

std::vector<std::vector<BigInt>> first_letter_123_triangle(int n_max) {
  std::vector<std::vector<BigInt>> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) c[n].assign(n + 1, 0);
  if (n_max >= 1) c[1][1] = 1;
  for (int n = 2; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= std::min(i, n - 1); ++k) c[n][i] += c[n - 1][k];
  return c;
}

CountTable case232_counts(int n_max) {
  if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");
  const auto c = first_letter_123_triangle(n_max);
  auto tables = seed_tables("1234,1342,2341", n_max);
  std::vector<std::vector<BigInt>> rows;
  for (const auto& t : tables) rows.push_back(t.rows);
  std::vector<BigInt> total;
  for (const auto& t : tables) total.push_back(t.total);
  for (int n = kSeedDepth + 1; n <= n_max; ++n) {
    std::vector<BigInt> r(n + 1, 0);
    for (int i = 1; i <= n - 2; ++i) {
      for (int j = 1; j < i; ++j) r[i] += rows[n - 1][j];
      for (int j = i + 1; j <= n - 1; ++j) r[i] += c[j - 1][i];
      r[i] += rows[n - 1][i];
    }
    r[n - 1] = r[n] = total[n - 1];
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += r[i];
    rows.push_back(r);
    total.push_back(sum);
  }
  CountTable out;
  for (int n = 0; n <= n_max; ++n) out.counts[n] = total[n];
  return out;
}

std::string Label::to_string() const {
  switch (family) {
    case Family::Plain: return std::to_string(k);
    case Family::Bar: return std::to_string(k) + "'";
    case Family::DoubleBar: return std::to_string(k) + "''";
  }
  return "?";
}

BigInt LabelVector::total() const {
  BigInt s = 0;
  for (const auto& [l, c] : counts) s += c;
  return s;
}

std::vector<Label> successors(const Label& l) {
  using F = Label::Family;
  std::vector<Label> out;
  switch (l.family) {
    case F::Plain:
      for (int j = 3; j <= l.k + 1; ++j) out.push_back({F::Plain, j});
      break;
    case F::Bar:
      out.push_back({F::Bar, 3});
      for (int j = 3; j <= l.k; ++j) out.push_back({F::DoubleBar, j});
      break;
    case F::DoubleBar:
      for (int j = 2; j <= l.k; ++j) out.push_back({F::DoubleBar, j});
      break;
  }
  out.push_back({F::Bar, l.k + 1});
  return out;
}

std::vector<LabelVector> case222_forest(int n_max) {
  if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");
  std::vector<LabelVector> levels;
  LabelVector root{2, {}};
  root.counts[{Label::Family::Plain, 3}] = 1;
  root.counts[{Label::Family::Bar, 3}] = 1;
  levels.push_back(root);
  for (int n = 3; n <= n_max; ++n) {
    LabelVector next{n, {}};
    for (const auto& [l, c] : levels.back().counts)
      for (const auto& s : successors(l)) next.counts[s] += c;
    levels.push_back(std::move(next));
  }
  return levels;
}

CountTable case222_counts(int n_max) {
  CountTable out;
  out.counts[0] = 1;
  out.counts[1] = 1;
  for (const auto& lv : case222_forest(n_max)) out.counts[lv.n] = lv.total();
  return out;
}

Series case242_fixed_point(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const Series one = Series::from_polynomial(Polynomial{1}, order);
  const Series x = Series::from_polynomial(Polynomial{0, 1}, order);
  Series f = one;
  for (int it = 0; it <= order; ++it) {
    const Series den = sub(one, mul(x, mul(f, f)));
    if (den[0] == 0) throw Error(ErrorCode::Domain, "fixed-point divisor has zero constant term");
    Series next = add(one, div(mul(x, f), den));
    if (next == f) return f;
    f = std::move(next);
  }
  throw Error(ErrorCode::Domain, "fixed-point iteration did not stabilize");
}

BigInt case242_sum(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  Rational s = 0;
  for (int i = 1; i <= n; ++i) s += Rational(binom(n - 1, i - 1) * binom(2 * n - i, i - 1), i);
  s.canonicalize();
  if (s.get_den() != 1) throw Error(ErrorCode::NonIntegral, "sum at n=" + std::to_string(n) + " is " + s.get_str());
  return s.get_num();
}

Series case242_sum_series(int order) {
  Series s(order);
  for (int n = 0; n < order; ++n) s[n] = n == 0 ? BigInt(1) : case242_sum(n);
  return s;
}

Series case118_J1(int order) {
  const Series f = add(Series::from_polynomial(Polynomial{1}, order),
                       rational_expand(Polynomial{0, 1, -4, 7, -5, 2}, one_minus_x_pow(4) * Polynomial{1, -2}, order));
  return mul(Series::from_polynomial(Polynomial{0, 1}, order), f);
}

Series case118_J_recurrence(int order, int m_max) {
  if (m_max < 2) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 2");
  const Polynomial one_m_2x{1, -2};
  Series jm2 = Series::from_polynomial(Polynomial{1}, order);
  Series jm1 = case118_J1(order);
  const Series a = Series::from_polynomial(Polynomial{0, 2, -1}, order);
  const Series x2 = Series::from_polynomial(Polynomial{0, 0, 1}, order);
  Series sum(order);
  for (int m = 2; m <= m_max; ++m) {
    std::vector<Rational> xm2(m + 3), xm3(m + 4);
    xm2[m + 2] = 1;
    xm3[m + 3] = 1;
    const Series lead = rational_expand(Polynomial(std::move(xm2)), one_minus_x_pow(m - 1) * one_m_2x, order);
    const Series tail = rational_expand(Polynomial(std::move(xm3)), one_minus_x_pow(2) * one_m_2x, order);
    Series rhs = add(add(sub(mul(a, jm1), mul(x2, jm2)), lead), tail);
    Series jm = mul(rational_expand(Polynomial{1}, Polynomial{1, -1}, order), rhs);
    sum = add(sum, jm);
    jm2 = std::move(jm1);
    jm1 = std::move(jm);
  }
  return sum;
}

}  // namespace permav
