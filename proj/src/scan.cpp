#include "scan.hpp"

#include <algorithm>
#include <map>

namespace permav {

std::optional<PatternSet> representative_containing(const PatternSet& t, const Permutation& q) {
  for (const auto& member : symmetry_class(t)) {
    const auto& ps = member.patterns();
    if (std::find(ps.begin(), ps.end(), q) != ps.end()) return member;
  }
  return std::nullopt;
}

WilfScan wilf_scan(int n, const Catalog& catalog, int threads, int series_order) {
  if (n < 5) throw Error(ErrorCode::InvalidArgument, "wilf-scan needs n >= 5");
  if (series_order <= n) series_order = n + 1;
  const Permutation anchor = Permutation::parse("1342");
  std::vector<Permutation> others;
  std::vector<int> v{1, 2, 3, 4};
  do {
    Permutation q(v);
    if (q != anchor) others.push_back(q);
  } while (std::next_permutation(v.begin(), v.end()));

  std::map<std::vector<BigInt>, std::vector<PatternSet>> groups;
  for (size_t a = 0; a < others.size(); ++a)
    for (size_t b = a + 1; b < others.size(); ++b) {
      PatternSet t({anchor, others[a], others[b]});
      const CountTable c = count_avoiders(t, n, threads);
      std::vector<BigInt> key;
      for (int m = 5; m <= n; ++m) key.push_back(c.at(m));
      groups[key].push_back(t);
    }

  WilfScan scan;
  scan.n = n;
  scan.series_order = series_order;
  std::map<PatternSet, size_t> class_of;
  for (auto& [key, triples] : groups) {
    WilfClass wc;
    wc.counts = key;
    std::sort(triples.begin(), triples.end());
    wc.triples = triples;
    std::vector<PatternSet> orbits;
    for (const auto& t : triples) orbits.push_back(symmetry_class(t).front());
    std::sort(orbits.begin(), orbits.end());
    wc.symmetry_classes = static_cast<int>(std::unique(orbits.begin(), orbits.end()) - orbits.begin());
    for (const auto& t : triples) class_of[t] = scan.classes.size();
    scan.classes.push_back(std::move(wc));
  }

  std::map<size_t, std::vector<int>> cases_in_class;
  for (int id : catalog.ids()) {
    const CaseSpec& cs = catalog.get(id);
    auto rep = representative_containing(cs.patterns, anchor);
    if (!rep) {
      scan.flags.push_back("case " + std::to_string(id) + " has no symmetric image containing 1342");
      continue;
    }
    scan.representatives.emplace_back(id, *rep);
    const size_t k = class_of.at(*rep);
    scan.classes[k].registered_cases.push_back(id);
    cases_in_class[k].push_back(id);
  }

  for (const auto& [k, ids] : cases_in_class) {
    std::vector<std::pair<int, Series>> series;
    for (int id : ids) {
      try {
        series.emplace_back(id, catalog.evaluate_case(id, series_order));
      } catch (const std::exception& e) {
        scan.flags.push_back("case " + std::to_string(id) + " could not be evaluated: " + e.what());
        continue;
      }
      const Series& s = series.back().second;
      for (int m = 5; m <= n; ++m)
        if (s[m] != Rational(scan.classes[k].counts[m - 5]))
          scan.flags.push_back("case " + std::to_string(id) + " series differs from its scan class at n=" +
                               std::to_string(m));
    }
    for (size_t i = 1; i < series.size(); ++i)
      for (int m = 0; m <= n; ++m)
        if (series[i].second[m] != series[0].second[m]) {
          scan.flags.push_back("cases " + std::to_string(series[0].first) + " and " + std::to_string(series[i].first) +
                               " share a scan class but their series differ at n=" + std::to_string(m));
          break;
        }
  }
  return scan;
}

nlohmann::ordered_json to_json(const WilfScan& scan) {
  nlohmann::ordered_json j;
  j["n"] = scan.n;
  j["triples"] = 0;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  size_t triples = 0;
  for (const auto& wc : scan.classes) {
    nlohmann::ordered_json c;
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const auto& v : wc.counts) counts.push_back(v.get_str());
    c["counts"] = counts;
    c["size"] = wc.triples.size();
    c["symmetry_classes"] = wc.symmetry_classes;
    nlohmann::ordered_json ts = nlohmann::ordered_json::array();
    for (const auto& t : wc.triples) ts.push_back(t.to_string());
    c["triples"] = ts;
    c["registered_cases"] = wc.registered_cases;
    classes.push_back(c);
    triples += wc.triples.size();
  }
  j["triples"] = triples;
  j["classes"] = classes;
  nlohmann::ordered_json reps = nlohmann::ordered_json::object();
  for (const auto& [id, t] : scan.representatives) reps[std::to_string(id)] = t.to_string();
  j["representatives"] = reps;
  j["flags"] = scan.flags;
  return j;
}

}  // namespace permav
