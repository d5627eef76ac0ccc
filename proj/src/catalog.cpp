#include "catalog.hpp"

#include <cstdint>

namespace permav {

using ojson = nlohmann::ordered_json;

const Auxiliary& CaseSpec::auxiliary(const std::string& name) const {
  std::string known;
  for (const auto& a : auxiliaries) {
    if (a.name == name) return a;
    known += (known.empty() ? "" : ", ") + a.name;
  }
  throw Error(ErrorCode::UnknownCase, "case " + std::to_string(id) + " has no auxiliary '" + name + "'" +
                                          (known.empty() ? std::string(" (it has none)") : " (known: " + known + ")"));
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = [] {
    Catalog c;
    register_builtin_cases(c);
    return c;
  }();
  return catalog;
}

void Catalog::add(CaseSpec spec) {
  const int id = spec.id;
  if (!cases_.emplace(id, std::move(spec)).second)
    throw Error(ErrorCode::InvalidArgument, "case " + std::to_string(id) + " registered twice");
}

std::vector<int> Catalog::ids() const {
  std::vector<int> v;
  for (const auto& [id, c] : cases_) v.push_back(id);
  return v;
}

const CaseSpec& Catalog::get(int id) const {
  auto it = cases_.find(id);
  if (it == cases_.end()) {
    std::string list;
    for (const auto& [k, c] : cases_) list += (list.empty() ? "" : ", ") + std::to_string(k);
    throw Error(ErrorCode::UnknownCase, "unknown case " + std::to_string(id) + "; registered cases: " + list);
  }
  return it->second;
}

Series Catalog::evaluate_case(int id, int order) const {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  return get(id).main.evaluate(order);
}

std::pair<Series, FilterSpec> Catalog::evaluate_auxiliary(int id, const std::string& name, int order) const {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const Auxiliary& a = get(id).auxiliary(name);
  return {a.expr.evaluate(order), a.filter};
}

Catalog Catalog::with_mutation(int id, int leaf, int coeff, const Rational& delta) const {
  Catalog copy = *this;
  CaseSpec& spec = copy.cases_.at(get(id).id);
  spec.main = spec.main.clone();
  spec.main.mutate(leaf, coeff, delta);
  return copy;
}

namespace {

std::string show(const Rational& q) { return q.get_str(); }

bool equals(const Rational& q, const BigInt& z) { return q.get_den() == 1 && q.get_num() == z; }

struct Oracle {
  std::vector<BigInt> main;
  std::vector<std::vector<BigInt>> aux;
};

Oracle run_oracle(const CaseSpec& cs, int n_max, int threads) {
  if (threads <= 0) threads = default_threads();
  const size_t parts = cs.auxiliaries.size() + 1;
  std::vector<std::vector<std::vector<std::uint64_t>>> per(
      threads, std::vector<std::vector<std::uint64_t>>(parts, std::vector<std::uint64_t>(n_max + 1, 0)));
  std::vector<int> min_len;
  for (const auto& a : cs.auxiliaries) min_len.push_back(a.filter.min_length());
  for_each_avoider(cs.patterns, n_max, threads, [&](std::span<const int> p, int w) {
    const int n = static_cast<int>(p.size());
    auto& mine = per[w];
    ++mine[0][n];
    for (size_t a = 0; a < cs.auxiliaries.size(); ++a)
      if (n >= min_len[a] && cs.auxiliaries[a].filter.holds(p)) ++mine[a + 1][n];
  });
  std::vector<std::vector<BigInt>> merged(parts, std::vector<BigInt>(n_max + 1, 0));
  for (const auto& w : per)
    for (size_t a = 0; a < parts; ++a)
      for (int n = 0; n <= n_max; ++n) merged[a][n] += BigInt(std::to_string(w[a][n]));
  Oracle o;
  o.main = merged[0];
  o.aux.assign(merged.begin() + 1, merged.end());
  return o;
}

}  // namespace

ojson Catalog::verify_case(int id, int n_max, int threads) const {
  const CaseSpec& cs = get(id);
  ojson r;
  r["case_id"] = id;
  r["patterns"] = cs.patterns.to_string();
  r["n_max"] = n_max;
  ojson first = nullptr;
  bool pass = true;
  auto fail = [&](const std::string& part, int n, const std::string& detail) {
    pass = false;
    if (first.is_null()) {
      first = ojson::object();
      first["part"] = part;
      if (n >= 0) {
        first["n"] = n;
      } else {
        first["n"] = nullptr;
      }
      first["detail"] = detail;
    }
  };
  if (n_max < 0) {
    fail("main", -1, "n_max must be >= 0");
    r["verdict"] = "fail";
    r["first_divergence"] = first;
    return r;
  }
  const int order = n_max + 1;
  const Oracle oracle = run_oracle(cs, n_max, threads);

  Series main_series;
  bool main_ok = true;
  ojson main = ojson::array();
  try {
    main_series = cs.main.evaluate(order);
  } catch (const std::exception& e) {
    main_ok = false;
    r["main_error"] = e.what();
    fail("main", -1, e.what());
  }
  if (main_ok)
    for (int n = 0; n <= n_max; ++n) {
      const bool ok = equals(main_series[n], oracle.main[n]);
      main.push_back({{"n", n}, {"expected", oracle.main[n].get_str()}, {"got", show(main_series[n])}, {"ok", ok}});
      if (!ok) fail("main", n, "coefficient differs from the oracle count");
    }
  r["main"] = main;

  std::map<std::string, Series> aux_series;
  ojson aux = ojson::object();
  for (size_t a = 0; a < cs.auxiliaries.size(); ++a) {
    const Auxiliary& ax = cs.auxiliaries[a];
    const std::string part = "auxiliary " + ax.name;
    ojson e;
    e["filter"] = ax.filter.to_string();
    ojson rows = ojson::array();
    bool ok_all = true;
    try {
      const Series s = ax.expr.evaluate(order);
      aux_series[ax.name] = s;
      const int lo = ax.filter.min_length();
      for (int n = 0; n < std::min(lo, order); ++n)
        if (s[n] != 0) {
          ok_all = false;
          fail(part, n, "nonzero coefficient below the filter's minimum length");
        }
      for (int n = lo; n <= n_max; ++n) {
        const bool ok = equals(s[n], oracle.aux[a][n]);
        rows.push_back({{"n", n}, {"expected", oracle.aux[a][n].get_str()}, {"got", show(s[n])}, {"ok", ok}});
        if (!ok) {
          ok_all = false;
          fail(part, n, "coefficient differs from the filtered oracle count");
        }
      }
    } catch (const std::exception& ex) {
      ok_all = false;
      e["error"] = ex.what();
      fail(part, -1, ex.what());
    }
    e["rows"] = rows;
    e["ok"] = ok_all;
    aux[ax.name] = e;
  }
  r["auxiliaries"] = aux;

  ojson engines = ojson::object();
  for (const auto& en : cs.engines) {
    const std::string part = "engine " + en.name;
    ojson e;
    e["target"] = en.target;
    ojson rows = ojson::array();
    bool ok_all = true;
    try {
      const std::vector<BigInt>* expected = &oracle.main;
      const Series* catalog = main_ok ? &main_series : nullptr;
      int lo = 0;
      if (en.target != "main") {
        for (size_t a = 0; a < cs.auxiliaries.size(); ++a)
          if (cs.auxiliaries[a].name == en.target) {
            expected = &oracle.aux[a];
            lo = cs.auxiliaries[a].filter.min_length();
          }
        auto it = aux_series.find(en.target);
        catalog = it == aux_series.end() ? nullptr : &it->second;
      }
      const Series s = en.series(order);
      for (int n = lo; n <= n_max; ++n) {
        const bool agree_oracle = equals(s[n], (*expected)[n]);
        const bool agree_catalog = catalog != nullptr && (*catalog)[n] == s[n];
        const bool ok = agree_oracle && agree_catalog;
        rows.push_back({{"n", n},
                        {"expected", (*expected)[n].get_str()},
                        {"got", show(s[n])},
                        {"catalog", catalog ? show((*catalog)[n]) : std::string("unavailable")},
                        {"ok", ok}});
        if (!ok) {
          ok_all = false;
          fail(part, n, agree_oracle ? "engine differs from the catalog series" : "engine differs from the oracle");
        }
      }
    } catch (const std::exception& ex) {
      ok_all = false;
      e["error"] = ex.what();
      fail(part, -1, ex.what());
    }
    e["rows"] = rows;
    e["ok"] = ok_all;
    engines[en.name] = e;
  }
  r["engines"] = engines;
  r["first_divergence"] = first;
  r["verdict"] = pass ? "pass" : "fail";
  return r;
}

}  // namespace permav
