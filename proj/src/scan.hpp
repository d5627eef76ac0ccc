#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace permav {

struct WilfClass {
  std::vector<BigInt> counts;  // |S_5|, ..., |S_n|
  std::vector<PatternSet> triples;
  int symmetry_classes = 0;
  std::vector<int> registered_cases;
};

struct WilfScan {
  int n = 0;
  int series_order = 0;
  std::vector<WilfClass> classes;
  std::vector<std::pair<int, PatternSet>> representatives;  // registered case -> orbit member containing 1342
  std::vector<std::string> flags;
};

// Smallest member of t's symmetry class in which some pattern equals q.
std::optional<PatternSet> representative_containing(const PatternSet& t, const Permutation& q);

// Groups all triples of distinct 4-letter patterns containing 1342 by (|S_5|, ..., |S_n|).
WilfScan wilf_scan(int n, const Catalog& catalog, int threads = 0, int series_order = 16);

nlohmann::ordered_json to_json(const WilfScan& scan);

}  // namespace permav
