#include "permav/permav.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "catalog.hpp"
#include "recurrences.hpp"
#include "scan.hpp"

using namespace permav;

struct pa_patternset {
  PatternSet value;
};
struct pa_table {
  CountTable value;
};
struct pa_series {
  Series value;
};
struct pa_catalog {
  Catalog value;
};

namespace {

thread_local std::string last_error;

pa_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return PA_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return PA_OUT_OF_RANGE;
    case ErrorCode::UnknownCase: return PA_UNKNOWN_CASE;
    case ErrorCode::Domain: return PA_DOMAIN;
    case ErrorCode::NonIntegral: return PA_NON_INTEGRAL;
  }
  return PA_INTERNAL;
}

pa_status guard(const std::function<void()>& body) {
  try {
    body();
    last_error.clear();
    return PA_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return PA_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PA_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

CountTable run_engine(const std::string& name, int n_max) {
  if (name == "case131") return case131_counts(n_max);
  if (name == "case164") return case164_counts(n_max);
  if (name == "case194") return case194_counts(n_max);
  if (name == "case199") return case199_counts(n_max);
  if (name == "case232") return case232_counts(n_max);
  if (name == "case222") return case222_counts(n_max);
  throw Error(ErrorCode::InvalidArgument,
              "unknown engine '" + name + "' (case131, case164, case194, case199, case232, case222)");
}

}  // namespace

extern "C" {

const char* pa_last_error(void) { return last_error.c_str(); }

void pa_string_free(char* s) { std::free(s); }

pa_status pa_patternset_parse(const char* text, pa_patternset** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new pa_patternset{PatternSet::parse(text)};
  });
}

void pa_patternset_free(pa_patternset* t) { delete t; }

pa_status pa_patternset_to_string(const pa_patternset* t, char** out) {
  return guard([&] {
    need(t, "pattern set");
    need(out, "out");
    *out = dup(t->value.to_string());
  });
}

pa_status pa_symmetry_class_json(const pa_patternset* t, char** out) {
  return guard([&] {
    need(t, "pattern set");
    need(out, "out");
    nlohmann::json j = nlohmann::json::array();
    for (const auto& m : symmetry_class(t->value)) j.push_back(m.to_string());
    *out = dup(j.dump());
  });
}

pa_status pa_contains(const char* perm, const char* pattern, int* out) {
  return guard([&] {
    need(perm, "perm");
    need(pattern, "pattern");
    need(out, "out");
    const std::string q = pattern;
    *out = q.empty() ? 1 : contains(Permutation::parse(perm), Permutation::parse(q)) ? 1 : 0;
  });
}

pa_status pa_avoids(const char* perm, const pa_patternset* t, int* out) {
  return guard([&] {
    need(perm, "perm");
    need(t, "pattern set");
    need(out, "out");
    *out = avoids(Permutation::parse(perm), t->value) ? 1 : 0;
  });
}

pa_status pa_statistic(const char* perm, const char* statistic, int* out) {
  return guard([&] {
    need(perm, "perm");
    need(statistic, "statistic");
    need(out, "out");
    *out = eval_statistic(Permutation::parse(perm), Statistic::parse(statistic));
  });
}

pa_status pa_count_avoiders(const pa_patternset* t, int n_max, int threads, pa_table** out) {
  return guard([&] {
    need(t, "pattern set");
    need(out, "out");
    *out = new pa_table{count_avoiders(t->value, n_max, threads)};
  });
}

pa_status pa_count_filtered(const pa_patternset* t, int n_max, const char* filter, int n_min, int threads,
                            pa_table** out) {
  return guard([&] {
    need(t, "pattern set");
    need(filter, "filter");
    need(out, "out");
    *out = new pa_table{count_filtered(t->value, n_max, FilterSpec::parse(filter), n_min, threads)};
  });
}

pa_status pa_filter_min_length(const char* filter, int* out) {
  return guard([&] {
    need(filter, "filter");
    need(out, "out");
    *out = FilterSpec::parse(filter).min_length();
  });
}

pa_status pa_count_by_statistic_json(const pa_patternset* t, int n_max, const char* statistic, int threads,
                                     char** out) {
  return guard([&] {
    need(t, "pattern set");
    need(statistic, "statistic");
    need(out, "out");
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [v, table] : count_by_statistic(t->value, n_max, Statistic::parse(statistic), threads))
      j[std::to_string(v)] = nlohmann::ordered_json::parse(table.to_json());
    *out = dup(j.dump());
  });
}

void pa_table_free(pa_table* table) { delete table; }

pa_status pa_table_range(const pa_table* table, int* n_min, int* n_max) {
  return guard([&] {
    need(table, "table");
    if (n_min) *n_min = table->value.n_min();
    if (n_max) *n_max = table->value.n_max();
  });
}

pa_status pa_table_count(const pa_table* table, int n, char** decimal) {
  return guard([&] {
    need(table, "table");
    need(decimal, "out");
    *decimal = dup(table->value.at(n).get_str());
  });
}

pa_status pa_table_json(const pa_table* table, char** out) {
  return guard([&] {
    need(table, "table");
    need(out, "out");
    *out = dup(table->value.to_json());
  });
}

pa_status pa_table_csv(const pa_table* table, char** out) {
  return guard([&] {
    need(table, "table");
    need(out, "out");
    *out = dup(table->value.to_csv());
  });
}

void pa_series_free(pa_series* s) { delete s; }

int pa_series_order(const pa_series* s) { return s ? s->value.order() : 0; }

pa_status pa_series_coefficient(const pa_series* s, int i, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    if (i < 0 || i >= s->value.order())
      throw Error(ErrorCode::OutOfRange, "coefficient " + std::to_string(i) + " is beyond the series order " +
                                             std::to_string(s->value.order()));
    *out = dup(s->value[i].get_str());
  });
}

pa_status pa_series_json(const pa_series* s, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(s->value.to_json());
  });
}

pa_status pa_series_first_non_integral(const pa_series* s, int* index) {
  return guard([&] {
    need(s, "series");
    need(index, "out");
    *index = s->value.first_non_integral();
  });
}

pa_status pa_catalog_open(pa_catalog** out) {
  return guard([&] {
    need(out, "out");
    *out = new pa_catalog{Catalog::builtin()};
  });
}

void pa_catalog_free(pa_catalog* c) { delete c; }

pa_status pa_catalog_ids(const pa_catalog* c, int* ids, int capacity, int* count) {
  return guard([&] {
    need(c, "catalog");
    need(count, "count");
    const auto v = c->value.ids();
    *count = static_cast<int>(v.size());
    for (int i = 0; ids != nullptr && i < capacity && i < static_cast<int>(v.size()); ++i) ids[i] = v[i];
  });
}

pa_status pa_catalog_patterns(const pa_catalog* c, int case_id, char** out) {
  return guard([&] {
    need(c, "catalog");
    need(out, "out");
    *out = dup(c->value.get(case_id).patterns.to_string());
  });
}

pa_status pa_catalog_builder(const pa_catalog* c, int case_id, char** out) {
  return guard([&] {
    need(c, "catalog");
    need(out, "out");
    *out = dup(c->value.get(case_id).main.to_string());
  });
}

pa_status pa_catalog_auxiliaries_json(const pa_catalog* c, int case_id, char** out) {
  return guard([&] {
    need(c, "catalog");
    need(out, "out");
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& a : c->value.get(case_id).auxiliaries)
      j.push_back({{"name", a.name}, {"filter", a.filter.to_string()}});
    *out = dup(j.dump());
  });
}

pa_status pa_catalog_evaluate(const pa_catalog* c, int case_id, int order, pa_series** out) {
  return guard([&] {
    need(c, "catalog");
    need(out, "out");
    *out = new pa_series{c->value.evaluate_case(case_id, order)};
  });
}

pa_status pa_catalog_evaluate_auxiliary(const pa_catalog* c, int case_id, const char* name, int order,
                                        pa_series** out, char** filter) {
  return guard([&] {
    need(c, "catalog");
    need(name, "name");
    need(out, "out");
    auto [s, f] = c->value.evaluate_auxiliary(case_id, name, order);
    if (filter) *filter = dup(f.to_string());
    *out = new pa_series{std::move(s)};
  });
}

pa_status pa_catalog_verify(const pa_catalog* c, int case_id, int n_max, int threads, char** report_json,
                            int* passed) {
  return guard([&] {
    need(c, "catalog");
    const auto r = c->value.verify_case(case_id, n_max, threads);
    if (passed) *passed = r["verdict"] == "pass" ? 1 : 0;
    if (report_json) *report_json = dup(r.dump());
  });
}

pa_status pa_catalog_leaf_count(const pa_catalog* c, int case_id, int* out) {
  return guard([&] {
    need(c, "catalog");
    need(out, "out");
    *out = c->value.get(case_id).main.poly_leaf_count();
  });
}

pa_status pa_catalog_mutate(pa_catalog* c, int case_id, int leaf, int coeff, const char* delta) {
  return guard([&] {
    need(c, "catalog");
    need(delta, "delta");
    Rational d;
    if (d.set_str(delta, 10) != 0) throw Error(ErrorCode::InvalidArgument, std::string("malformed rational '") + delta + "'");
    d.canonicalize();
    c->value = c->value.with_mutation(case_id, leaf, coeff, d);
  });
}

pa_status pa_engine_counts(const char* engine, int n_max, pa_table** out) {
  return guard([&] {
    need(engine, "engine");
    need(out, "out");
    *out = new pa_table{run_engine(engine, n_max)};
  });
}

pa_status pa_case222_forest_json(int n_max, char** out) {
  return guard([&] {
    need(out, "out");
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& lv : case222_forest(n_max)) {
      nlohmann::ordered_json labels = nlohmann::ordered_json::object();
      for (const auto& [l, c] : lv.counts) labels[l.to_string()] = c.get_str();
      j.push_back({{"n", lv.n}, {"total", lv.total().get_str()}, {"labels", labels}});
    }
    *out = dup(j.dump());
  });
}

pa_status pa_case242_fixed_point(int order, pa_series** out) {
  return guard([&] {
    need(out, "out");
    *out = new pa_series{case242_fixed_point(order)};
  });
}

pa_status pa_case242_sum(int n, char** decimal) {
  return guard([&] {
    need(decimal, "out");
    *decimal = dup(case242_sum(n).get_str());
  });
}

pa_status pa_case118_j_recurrence(int order, int m_max, pa_series** out) {
  return guard([&] {
    need(out, "out");
    *out = new pa_series{case118_J_recurrence(order, m_max)};
  });
}

pa_status pa_wilf_scan_json(int n, int threads, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(to_json(wilf_scan(n, Catalog::builtin(), threads)).dump());
  });
}

}  // extern "C"
