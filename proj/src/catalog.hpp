#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "expr.hpp"
#include "json.hpp"

namespace permav {

struct Auxiliary {
  std::string name;
  Expr expr;
  FilterSpec filter;
};

// Independent count source checked against the oracle and against the catalog series it targets.
struct Engine {
  std::string name;
  std::string target;  // "main" or an auxiliary name
  std::function<Series(int order)> series;
};

struct CaseSpec {
  int id = 0;
  PatternSet patterns;
  Expr main;
  std::vector<Auxiliary> auxiliaries;
  std::vector<Engine> engines;

  const Auxiliary& auxiliary(const std::string& name) const;
};

class Catalog {
 public:
  // The registry of all solved cases.
  static const Catalog& builtin();

  std::vector<int> ids() const;
  const CaseSpec& get(int id) const;

  Series evaluate_case(int id, int order) const;
  std::pair<Series, FilterSpec> evaluate_auxiliary(int id, const std::string& name, int order) const;

  // Copy in which one coefficient of one polynomial leaf of a case's main builder is shifted by delta.
  Catalog with_mutation(int id, int leaf, int coeff, const Rational& delta) const;

  nlohmann::ordered_json verify_case(int id, int n_max, int threads = 1) const;

  void add(CaseSpec spec);

 private:
  std::map<int, CaseSpec> cases_;
};

void register_builtin_cases(Catalog& catalog);

}  // namespace permav
