#include "perm.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace permav {

namespace {

bool is_bijection(const std::vector<int>& v) {
  std::vector<char> seen(v.size() + 1, 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int parse_int(const std::string& tok, const std::string& whole) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::InvalidArgument, "malformed permutation token '" + tok + "' in '" + whole + "'");
  return std::stoi(tok);
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  if (!is_bijection(v_)) {
    std::string s;
    for (size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
    throw Error(ErrorCode::InvalidArgument, "not a permutation of 1..n: " + s);
  }
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_int(tok, text));
  } else {
    for (char c : text) v.push_back(parse_int(std::string(1, c), text));
  }
  return Permutation(std::move(v));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::standardize(std::span<const int> word) {
  std::vector<int> idx(word.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> v(word.size());
  for (size_t r = 0; r < idx.size(); ++r) v[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool digits = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : p_(std::move(patterns)) {
  if (p_.empty()) throw Error(ErrorCode::InvalidArgument, "pattern set must be nonempty");
  for (const auto& q : p_)
    if (q.empty()) throw Error(ErrorCode::InvalidArgument, "patterns must have length >= 1");
  std::sort(p_.begin(), p_.end());
  p_.erase(std::unique(p_.begin(), p_.end()), p_.end());
}

PatternSet PatternSet::parse(const std::string& text) {
  std::vector<Permutation> ps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw Error(ErrorCode::InvalidArgument, "empty pattern in '" + text + "'");
    ps.push_back(Permutation::parse(tok));
  }
  return PatternSet(std::move(ps));
}

std::string PatternSet::to_string() const {
  std::string s;
  for (size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + p_[i].to_string();
  return s;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  std::vector<int> v(p.values());
  for (int& x : v) x = p.size() + 1 - x;
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[p[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

Matcher::Matcher(const Permutation& q) : k_(q.size()), q_(q.values()), lo_(k_, -1), hi_(k_, -1) {
  for (int t = 0; t < k_; ++t) {
    if (q_[t] == k_) max_index_ = t;
    for (int s = 0; s < t; ++s) {
      if (q_[s] < q_[t] && (lo_[t] < 0 || q_[s] > q_[lo_[t]])) lo_[t] = s;
      if (q_[s] > q_[t] && (hi_[t] < 0 || q_[s] < q_[hi_[t]])) hi_[t] = s;
    }
  }
}

bool Matcher::extend(std::span<const int> p, int t, int from, int* chosen, int forced_pos) const {
  if (t == k_) return true;
  const int n = static_cast<int>(p.size());
  int first = from;
  int last = n - (k_ - t);
  if (forced_pos >= 0) {
    if (t == max_index_) {
      if (forced_pos < first || forced_pos > last) return false;
      first = last = forced_pos;
    } else if (t < max_index_) {
      last = std::min(last, forced_pos - (max_index_ - t));
    }
  }
  const int lo = lo_[t] >= 0 ? p[chosen[lo_[t]]] : 0;
  const int hi = hi_[t] >= 0 ? p[chosen[hi_[t]]] : n + 1;
  for (int pos = first; pos <= last; ++pos) {
    const int v = p[pos];
    if (v <= lo || v >= hi) continue;
    chosen[t] = pos;
    if (extend(p, t + 1, pos + 1, chosen, forced_pos)) return true;
  }
  return false;
}

bool Matcher::occurs_in(std::span<const int> p) const {
  if (k_ > static_cast<int>(p.size())) return false;
  std::array<int, 32> chosen{};
  if (k_ > static_cast<int>(chosen.size()))
    throw Error(ErrorCode::InvalidArgument, "pattern too long");
  return extend(p, 0, 0, chosen.data(), -1);
}

bool Matcher::occurs_through(std::span<const int> p, int pos) const {
  if (k_ > static_cast<int>(p.size()) || k_ == 0) return false;
  std::array<int, 32> chosen{};
  if (k_ > static_cast<int>(chosen.size()))
    throw Error(ErrorCode::InvalidArgument, "pattern too long");
  return extend(p, 0, 0, chosen.data(), pos);
}

bool contains(const Permutation& p, const Permutation& q) { return Matcher(q).occurs_in(p.span()); }

bool avoids(const Permutation& p, const PatternSet& t) {
  for (const auto& q : t.patterns())
    if (contains(p, q)) return false;
  return true;
}

bool avoids(std::span<const int> p, const std::vector<Matcher>& t) {
  for (const auto& m : t)
    if (m.occurs_in(p)) return false;
  return true;
}

std::vector<PatternSet> symmetry_class(const PatternSet& t) {
  using Op = Permutation (*)(const Permutation&);
  const std::array<Op, 3> gens{&reverse, &complement, &inverse};
  std::set<PatternSet> orbit{t};
  std::vector<PatternSet> frontier{t};
  while (!frontier.empty()) {
    PatternSet cur = frontier.back();
    frontier.pop_back();
    for (Op g : gens) {
      std::vector<Permutation> img;
      for (const auto& q : cur.patterns()) img.push_back(g(q));
      PatternSet next(std::move(img));
      if (orbit.insert(next).second) frontier.push_back(next);
    }
  }
  return {orbit.begin(), orbit.end()};
}

Statistic Statistic::parse(const std::string& name) {
  auto suffix_k = [&](const std::string& prefix) {
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorCode::InvalidArgument, "statistic '" + name + "' needs a position, e.g. " + prefix + "2");
    const int k = std::stoi(rest);
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "positions are 1-based: '" + name + "'");
    return k;
  };
  if (name == "lrmax") return {Kind::LRMaxCount, 0};
  if (name == "rlmax") return {Kind::RLMaxCount, 0};
  if (name == "lrtop") return {Kind::LRMaxValuesAreTopInterval, 0};
  if (name == "lastmax") return {Kind::LastPositionHoldsMax, 0};
  if (name == "rlsuffix") return {Kind::RLMaxSuffix, 0};
  if (name.rfind("start", 0) == 0) return {Kind::ValueAtFromStart, suffix_k("start")};
  if (name.rfind("end", 0) == 0) return {Kind::ValueAtFromEnd, suffix_k("end")};
  throw Error(ErrorCode::InvalidArgument,
              "unknown statistic '" + name + "' (lrmax, rlmax, start<k>, end<k>, lrtop, lastmax, rlsuffix)");
}

std::string Statistic::name() const {
  switch (kind) {
    case Kind::LRMaxCount: return "lrmax";
    case Kind::RLMaxCount: return "rlmax";
    case Kind::ValueAtFromStart: return "start" + std::to_string(k);
    case Kind::ValueAtFromEnd: return "end" + std::to_string(k);
    case Kind::LRMaxValuesAreTopInterval: return "lrtop";
    case Kind::LastPositionHoldsMax: return "lastmax";
    case Kind::RLMaxSuffix: return "rlsuffix";
  }
  return "?";
}

int Statistic::min_length() const {
  return (kind == Kind::ValueAtFromStart || kind == Kind::ValueAtFromEnd) ? k : 0;
}

int eval_statistic(std::span<const int> p, const Statistic& s) {
  const int n = static_cast<int>(p.size());
  switch (s.kind) {
    case Statistic::Kind::LRMaxCount: {
      int m = 0, best = 0;
      for (int v : p)
        if (v > best) best = v, ++m;
      return m;
    }
    case Statistic::Kind::RLMaxCount: {
      int m = 0, best = 0;
      for (int i = n - 1; i >= 0; --i)
        if (p[i] > best) best = p[i], ++m;
      return m;
    }
    case Statistic::Kind::ValueAtFromStart:
    case Statistic::Kind::ValueAtFromEnd: {
      if (s.k < 1 || s.k > n)
        throw Error(ErrorCode::OutOfRange,
                    "statistic " + s.name() + " is undefined on a permutation of length " + std::to_string(n));
      return s.kind == Statistic::Kind::ValueAtFromStart ? p[s.k - 1] : p[n - s.k];
    }
    case Statistic::Kind::LRMaxValuesAreTopInterval: {
      int m = 0, best = 0, lowest = n + 1;
      for (int v : p)
        if (v > best) best = v, ++m, lowest = std::min(lowest, v);
      return m == 0 || lowest == n - m + 1 ? 1 : 0;
    }
    case Statistic::Kind::LastPositionHoldsMax:
      return n > 0 && p[n - 1] == n ? 1 : 0;
    case Statistic::Kind::RLMaxSuffix: {
      int i = n - 1;
      while (i > 0 && p[i - 1] > p[i]) --i;
      return n == 0 || p[i] == n ? 1 : 0;
    }
  }
  return 0;
}

int eval_statistic(const Permutation& p, const Statistic& s) { return eval_statistic(p.span(), s); }

}  // namespace permav
