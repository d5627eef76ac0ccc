#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace permav {

using ojson = nlohmann::ordered_json;

const BigInt& CountTable::at(int n) const {
  auto it = counts.find(n);
  if (it == counts.end()) throw Error(ErrorCode::OutOfRange, "count table has no entry for n=" + std::to_string(n));
  return it->second;
}

std::string CountTable::to_json() const {
  ojson j = ojson::object();
  for (const auto& [n, c] : counts) j[std::to_string(n)] = c.get_str();
  return j.dump();
}

std::string CountTable::to_csv() const {
  std::string s = "n,count\n";
  for (const auto& [n, c] : counts) s += std::to_string(n) + "," + c.get_str() + "\n";
  return s;
}

CountTable CountTable::from_json(const std::string& text) {
  const ojson j = ojson::parse(text, nullptr, false);
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "count table JSON must be an object of decimal strings");
  CountTable t;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, "count for n=" + k + " is not a string");
    try {
      size_t used = 0;
      const int n = std::stoi(k, &used);
      if (used != k.size() || n < 0) throw std::invalid_argument(k);
      t.counts[n] = BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "malformed count table entry \"" + k + "\"");
    }
  }
  return t;
}

Target Target::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "malformed target '" + text + "' (expected k, n, n-k or n+k)"); };
  auto digits = [](const std::string& d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (s.empty()) throw bad();
  if (s[0] == 'n') {
    if (s.size() == 1) return {1, 0};
    const std::string rest = s.substr(2);
    if ((s[1] != '-' && s[1] != '+') || !digits(rest)) throw bad();
    const int v = std::stoi(rest);
    return {1, s[1] == '-' ? -v : v};
  }
  if (s[0] == '-' && digits(s.substr(1))) return {0, -std::stoi(s.substr(1))};
  if (!digits(s)) throw bad();
  return {0, std::stoi(s)};
}

std::string Target::to_string() const {
  if (n_coeff == 0) return std::to_string(offset);
  if (offset == 0) return "n";
  return offset < 0 ? "n-" + std::to_string(-offset) : "n+" + std::to_string(offset);
}

Clause Clause::parse(const std::string& text) {
  size_t pos;
  Clause c;
  if ((pos = text.find("<=")) != std::string::npos) {
    c.cmp = Cmp::Le;
    c.stat = Statistic::parse(text.substr(0, pos));
    c.target = Target::parse(text.substr(pos + 2));
  } else if ((pos = text.find(">=")) != std::string::npos) {
    c.cmp = Cmp::Ge;
    c.stat = Statistic::parse(text.substr(0, pos));
    c.target = Target::parse(text.substr(pos + 2));
  } else if ((pos = text.find("==")) != std::string::npos) {
    c.stat = Statistic::parse(text.substr(0, pos));
    c.target = Target::parse(text.substr(pos + 2));
  } else if ((pos = text.find('=')) != std::string::npos) {
    c.stat = Statistic::parse(text.substr(0, pos));
    c.target = Target::parse(text.substr(pos + 1));
  } else {
    throw Error(ErrorCode::InvalidArgument, "malformed filter clause '" + text + "' (expected name=value)");
  }
  return c;
}

bool Clause::holds(std::span<const int> p) const {
  const int v = eval_statistic(p, stat);
  const int t = target.resolve(static_cast<int>(p.size()));
  switch (cmp) {
    case Cmp::Eq: return v == t;
    case Cmp::Le: return v <= t;
    case Cmp::Ge: return v >= t;
  }
  return false;
}

std::string Clause::to_string() const {
  const char* op = cmp == Cmp::Eq ? "==" : cmp == Cmp::Le ? "<=" : ">=";
  return stat.name() + op + target.to_string();
}

FilterSpec FilterSpec::parse(const std::string& text) {
  FilterSpec f;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) f.clauses.push_back(Clause::parse(tok));
  return f;
}

int FilterSpec::min_length() const {
  int m = 0;
  for (const auto& c : clauses) m = std::max(m, c.stat.min_length());
  return m;
}

bool FilterSpec::holds(std::span<const int> p) const {
  for (const auto& c : clauses)
    if (!c.holds(p)) return false;
  return true;
}

std::string FilterSpec::to_string() const {
  std::string s;
  for (size_t i = 0; i < clauses.size(); ++i) s += (i ? ";" : "") + clauses[i].to_string();
  return s;
}

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

namespace {

struct Walker {
  const std::vector<Matcher>& matchers;
  int n_max;
  const AvoiderVisitor& visit;

  // Children of p insert the new maximum into each site.
  template <class F>
  void children(const std::vector<int>& p, std::vector<int>& child, F&& on_child) const {
    const int n = static_cast<int>(p.size());
    child.resize(n + 1);
    for (int s = 0; s <= n; ++s) {
      std::copy(p.begin(), p.begin() + s, child.begin());
      child[s] = n + 1;
      std::copy(p.begin() + s, p.end(), child.begin() + s + 1);
      bool ok = true;
      for (const auto& m : matchers)
        if (m.occurs_through(child, s)) {
          ok = false;
          break;
        }
      if (ok) on_child(child);
    }
  }

  void dfs(const std::vector<int>& p, int worker, std::vector<std::vector<int>>& bufs) const {
    const int n = static_cast<int>(p.size());
    if (n >= n_max) return;
    children(p, bufs[n + 1], [&](const std::vector<int>& c) {
      visit(c, worker);
      dfs(c, worker, bufs);
    });
  }
};

}  // namespace

int for_each_avoider(const PatternSet& t, int n_max, int threads, const AvoiderVisitor& visit) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  if (n_max > 30) throw Error(ErrorCode::InvalidArgument, "n_max above 30 is not supported by the enumerator");
  if (threads <= 0) threads = default_threads();
  std::vector<Matcher> matchers;
  for (const auto& q : t.patterns()) matchers.emplace_back(q);
  Walker w{matchers, n_max, visit};

  std::vector<std::vector<int>> frontier{{}};
  visit(std::span<const int>(), 0);
  int depth = 0;
  std::vector<int> child;
  while (depth < n_max && static_cast<int>(frontier.size()) < 8 * threads && depth < 6) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      w.children(p, child, [&](const std::vector<int>& c) {
        visit(c, 0);
        next.push_back(c);
      });
    frontier = std::move(next);
    ++depth;
  }
  if (depth >= n_max || frontier.empty()) return threads;

  std::atomic<size_t> cursor{0};
  auto run = [&](int worker) {
    std::vector<std::vector<int>> bufs(n_max + 2);
    for (size_t i; (i = cursor.fetch_add(1)) < frontier.size();) w.dfs(frontier[i], worker, bufs);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(run, k);
    for (auto& th : pool) th.join();
  }
  return threads;
}

CountTable count_avoiders(const PatternSet& t, int n_max, int threads) {
  if (threads <= 0) threads = default_threads();
  std::vector<std::vector<std::uint64_t>> per(threads, std::vector<std::uint64_t>(n_max + 1, 0));
  for_each_avoider(t, n_max, threads, [&](std::span<const int> p, int w) { ++per[w][p.size()]; });
  CountTable out;
  for (int n = 0; n <= n_max; ++n) {
    BigInt c = 0;
    for (const auto& v : per) c += BigInt(std::to_string(v[n]));
    out.counts[n] = c;
  }
  return out;
}

CountTable count_filtered(const PatternSet& t, int n_max, const FilterSpec& f, int n_min, int threads) {
  for (const auto& c : f.clauses)
    if (c.stat.min_length() > n_min && c.stat.min_length() <= n_max)
      throw Error(ErrorCode::OutOfRange, "filter clause " + c.to_string() + " is unevaluable at n=" +
                                             std::to_string(n_min) + " (needs n >= " +
                                             std::to_string(c.stat.min_length()) + ")");
  for (const auto& c : f.clauses)
    if (c.stat.min_length() > n_max)
      throw Error(ErrorCode::OutOfRange, "filter clause " + c.to_string() + " is unevaluable for every n <= " +
                                             std::to_string(n_max));
  if (threads <= 0) threads = default_threads();
  std::vector<std::vector<std::uint64_t>> per(threads, std::vector<std::uint64_t>(n_max + 1, 0));
  for_each_avoider(t, n_max, threads, [&](std::span<const int> p, int w) {
    if (static_cast<int>(p.size()) >= n_min && f.holds(p)) ++per[w][p.size()];
  });
  CountTable out;
  for (int n = std::max(0, n_min); n <= n_max; ++n) {
    BigInt c = 0;
    for (const auto& v : per) c += BigInt(std::to_string(v[n]));
    out.counts[n] = c;
  }
  return out;
}

std::map<int, CountTable> count_by_statistic(const PatternSet& t, int n_max, const Statistic& s, int threads) {
  if (threads <= 0) threads = default_threads();
  const int n_min = s.min_length();
  std::vector<std::map<std::pair<int, int>, std::uint64_t>> per(threads);
  for_each_avoider(t, n_max, threads, [&](std::span<const int> p, int w) {
    if (static_cast<int>(p.size()) >= n_min) ++per[w][{eval_statistic(p, s), static_cast<int>(p.size())}];
  });
  std::map<int, CountTable> out;
  for (const auto& m : per)
    for (const auto& [key, c] : m) out[key.first];
  for (auto& [value, table] : out)
    for (int n = n_min; n <= n_max; ++n) table.counts[n] = 0;
  for (const auto& m : per)
    for (const auto& [key, c] : m) out[key.first].counts[key.second] += BigInt(std::to_string(c));
  return out;
}

}  // namespace permav
