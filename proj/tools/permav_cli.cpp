#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permav/permav.h"

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Failure {
  pa_status status;
  std::string message;
};

void check(pa_status s) {
  if (s != PA_OK) throw Failure{s, pa_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pa_string_free(s);
  return out;
}

struct Patterns {
  pa_patternset* h = nullptr;
  explicit Patterns(const std::string& text) { check(pa_patternset_parse(text.c_str(), &h)); }
  ~Patterns() { pa_patternset_free(h); }
  Patterns(const Patterns&) = delete;
  Patterns& operator=(const Patterns&) = delete;
};

struct Table {
  pa_table* h = nullptr;
  ~Table() { pa_table_free(h); }
};

struct SeriesHandle {
  pa_series* h = nullptr;
  ~SeriesHandle() { pa_series_free(h); }
};

struct CatalogHandle {
  pa_catalog* h = nullptr;
  CatalogHandle() { check(pa_catalog_open(&h)); }
  ~CatalogHandle() { pa_catalog_free(h); }
  CatalogHandle(const CatalogHandle&) = delete;
  CatalogHandle& operator=(const CatalogHandle&) = delete;
};

struct Options {
  std::string patterns;
  int case_id = 0;
  bool all = false;
  int n = 9;
  int terms = 10;
  int threads = 0;
  std::string format = "text";
  std::vector<std::string> filters;
  std::vector<std::string> mutations;
  std::string aux;
};

struct Report {
  std::string command;
  ojson inputs = ojson::object();
  ojson results;
  bool pass = true;
  std::string text;
  std::string csv;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{PA_INVALID_ARGUMENT, "malformed " + what + " '" + s + "'"};
}

void apply_mutations(CatalogHandle& cat, const std::vector<std::string>& specs, ojson& inputs) {
  if (specs.empty()) return;
  ojson list = ojson::array();
  for (const auto& m : specs) {
    const auto parts = split(m, ':');
    if (parts.size() != 4) throw Failure{PA_INVALID_ARGUMENT, "mutation must be case:leaf:coeff:delta, got '" + m + "'"};
    check(pa_catalog_mutate(cat.h, parse_int(parts[0], "case"), parse_int(parts[1], "leaf"),
                            parse_int(parts[2], "coefficient index"), parts[3].c_str()));
    list.push_back(m);
  }
  inputs["mutations"] = list;
}

Report cmd_count(const Options& o) {
  Report r;
  r.command = "count";
  r.inputs["patterns"] = o.patterns;
  r.inputs["n"] = o.n;
  Patterns t(o.patterns);
  Table table;
  std::string filter;
  for (const auto& f : o.filters) filter += (filter.empty() ? "" : ";") + f;
  if (filter.empty()) {
    check(pa_count_avoiders(t.h, o.n, o.threads, &table.h));
  } else {
    r.inputs["filter"] = filter;
    int n_min = 0;
    check(pa_filter_min_length(filter.c_str(), &n_min));
    check(pa_count_filtered(t.h, o.n, filter.c_str(), n_min, o.threads, &table.h));
  }
  char* s = nullptr;
  check(pa_table_json(table.h, &s));
  r.results = ojson::parse(take(s));
  check(pa_table_csv(table.h, &s));
  r.csv = take(s);
  std::ostringstream text;
  text << "patterns " << o.patterns << (filter.empty() ? "" : "  filter " + filter) << "\n";
  for (auto it = r.results.begin(); it != r.results.end(); ++it)
    text << "  n=" << it.key() << "  " << it.value().get<std::string>() << "\n";
  r.text = text.str();
  return r;
}

ojson verify_one(const pa_catalog* cat, int id, int n, bool* passed) {
  char* s = nullptr;
  int ok = 0;
  check(pa_catalog_verify(cat, id, n, 1, &s, &ok));
  *passed = ok != 0;
  return ojson::parse(take(s));
}

Report cmd_verify(const Options& o) {
  Report r;
  r.command = "verify";
  CatalogHandle cat;
  std::vector<int> ids;
  if (o.all) {
    int count = 0;
    check(pa_catalog_ids(cat.h, nullptr, 0, &count));
    ids.resize(count);
    check(pa_catalog_ids(cat.h, ids.data(), count, &count));
    r.inputs["case"] = "all";
  } else {
    ids.push_back(o.case_id);
    r.inputs["case"] = o.case_id;
  }
  r.inputs["n"] = o.n;
  apply_mutations(cat, o.mutations, r.inputs);

  std::vector<ojson> reports(ids.size());
  std::vector<char> ok(ids.size(), 0);
  std::vector<std::optional<Failure>> errors(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < ids.size();) {
      try {
        bool passed = false;
        reports[i] = verify_one(cat.h, ids[i], o.n, &passed);
        ok[i] = passed;
      } catch (const Failure& f) {
        errors[i] = f;
      }
    }
  };
  int threads = o.threads > 0 ? o.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(ids.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) throw *e;

  r.results = ojson::array();
  std::ostringstream text;
  int passed = 0;
  for (size_t i = 0; i < ids.size(); ++i) {
    r.results.push_back(reports[i]);
    passed += ok[i];
    text << "case " << ids[i] << "  " << reports[i]["patterns"].get<std::string>() << "  "
         << (ok[i] ? "pass" : "FAIL");
    const auto& d = reports[i]["first_divergence"];
    if (!d.is_null())
      text << "  first divergence: " << d["part"].get<std::string>() << " at n=" << d["n"].dump() << " ("
           << d["detail"].get<std::string>() << ")";
    text << "\n";
  }
  text << passed << "/" << ids.size() << " cases pass\n";
  r.text = text.str();
  r.pass = passed == static_cast<int>(ids.size());
  return r;
}

Report cmd_series(const Options& o) {
  Report r;
  r.command = "series";
  r.inputs["case"] = o.case_id;
  r.inputs["terms"] = o.terms;
  if (!o.aux.empty()) r.inputs["auxiliary"] = o.aux;
  if (o.terms < 1) throw Failure{PA_INVALID_ARGUMENT, "--terms must be at least 1"};
  CatalogHandle cat;
  apply_mutations(cat, o.mutations, r.inputs);
  SeriesHandle s;
  if (o.aux.empty()) {
    check(pa_catalog_evaluate(cat.h, o.case_id, o.terms, &s.h));
  } else {
    char* filter = nullptr;
    check(pa_catalog_evaluate_auxiliary(cat.h, o.case_id, o.aux.c_str(), o.terms, &s.h, &filter));
    r.inputs["filter"] = take(filter);
  }
  int bad = -1;
  check(pa_series_first_non_integral(s.h, &bad));
  ojson coeffs = ojson::array();
  std::ostringstream text, csv;
  csv << "n,coefficient\n";
  for (int i = 0; i < pa_series_order(s.h); ++i) {
    char* c = nullptr;
    check(pa_series_coefficient(s.h, i, &c));
    const std::string v = take(c);
    coeffs.push_back(v);
    text << (i ? " " : "") << v;
    csv << i << "," << v << "\n";
  }
  text << "\n";
  r.results = {{"coefficients", coeffs}, {"first_non_integral", bad < 0 ? ojson() : ojson(bad)}};
  if (bad >= 0) text << "non-integer coefficient at n=" << bad << "\n";
  r.pass = bad < 0;
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Report cmd_symmetry(const Options& o) {
  Report r;
  r.command = "symmetry";
  r.inputs["patterns"] = o.patterns;
  Patterns t(o.patterns);
  char* s = nullptr;
  check(pa_symmetry_class_json(t.h, &s));
  const ojson orbit = ojson::parse(take(s));
  r.results = {{"orbit", orbit}, {"size", orbit.size()}};
  std::ostringstream text, csv;
  csv << "member\n";
  for (const auto& m : orbit) {
    text << m.get<std::string>() << "\n";
    csv << '"' << m.get<std::string>() << "\"\n";
  }
  text << "orbit size " << orbit.size() << "\n";
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Report cmd_wilf_scan(const Options& o) {
  Report r;
  r.command = "wilf-scan";
  r.inputs["n"] = o.n;
  char* s = nullptr;
  check(pa_wilf_scan_json(o.n, o.threads, &s));
  r.results = ojson::parse(take(s));
  r.pass = r.results["flags"].empty();
  std::ostringstream text, csv;
  csv << "class,size,symmetry_classes,counts,registered_cases\n";
  int k = 0;
  for (const auto& c : r.results["classes"]) {
    std::string counts;
    for (const auto& v : c["counts"]) counts += (counts.empty() ? "" : " ") + v.get<std::string>();
    std::string cases;
    for (const auto& v : c["registered_cases"]) cases += (cases.empty() ? "" : " ") + v.dump();
    text << "class " << k << "  triples " << c["size"].dump() << "  symmetry classes "
         << c["symmetry_classes"].dump() << "  counts " << counts << (cases.empty() ? "" : "  cases " + cases)
         << "\n";
    csv << k << "," << c["size"].dump() << "," << c["symmetry_classes"].dump() << "," << counts << "," << cases
        << "\n";
    ++k;
  }
  text << r.results["triples"].dump() << " triples in " << k << " classes\n";
  for (const auto& f : r.results["flags"]) text << "flag: " << f.get<std::string>() << "\n";
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

void emit(const Report& r, const std::string& format, double ms) {
  if (format == "json") {
    ojson doc;
    doc["command"] = r.command;
    doc["inputs"] = r.inputs;
    doc["results"] = r.results;
    doc["verdict"] = r.pass ? "pass" : "fail";
    doc["duration_ms"] = ms;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << r.csv;
  } else {
    std::cout << r.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoidance enumeration and generating-function verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
  };

  auto* count = app.add_subcommand("count", "Count avoiders of a pattern set by length");
  count->add_option("--patterns", o.patterns, "Comma-separated patterns")->required();
  count->add_option("--n", o.n, "Maximum length")->check(CLI::Range(0, 30));
  count->add_option("--filter", o.filters, "Statistic clause such as start2=n or lrmax==2 (repeatable)");
  add_common(count);

  auto* verify = app.add_subcommand("verify", "Check registered generating functions against the oracle");
  auto* vcase = verify->add_option("--case", o.case_id, "Case ID");
  auto* vall = verify->add_flag("--all", o.all, "Verify every registered case");
  vcase->excludes(vall);
  verify->add_option("--n", o.n, "Maximum length")->check(CLI::Range(0, 30));
  verify->add_option("--mutate", o.mutations, "Perturb a builder: case:leaf:coeff:delta (repeatable)");
  add_common(verify);

  auto* series = app.add_subcommand("series", "Print coefficients of a registered generating function");
  series->add_option("--case", o.case_id, "Case ID")->required();
  series->add_option("--terms", o.terms, "Number of coefficients");
  series->add_option("--aux", o.aux, "Auxiliary series name");
  series->add_option("--mutate", o.mutations, "Perturb a builder: case:leaf:coeff:delta (repeatable)");
  add_common(series);

  auto* symmetry = app.add_subcommand("symmetry", "Print the symmetry class of a pattern set");
  symmetry->add_option("--patterns", o.patterns, "Comma-separated patterns")->required();
  add_common(symmetry);

  auto* wilf = app.add_subcommand("wilf-scan", "Group triples containing 1342 by avoider counts");
  wilf->add_option("--n", o.n, "Maximum length")->check(CLI::Range(5, 12));
  add_common(wilf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (verify->parsed() && !o.all && vcase->count() == 0) {
    std::cerr << "verify: one of --case or --all is required\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (count->parsed()) r = cmd_count(o);
    else if (verify->parsed()) r = cmd_verify(o);
    else if (series->parsed()) r = cmd_series(o);
    else if (symmetry->parsed()) r = cmd_symmetry(o);
    else r = cmd_wilf_scan(o);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(r, o.format, ms);
    return r.pass ? kPass : kMismatch;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    switch (f.status) {
      case PA_INVALID_ARGUMENT:
      case PA_OUT_OF_RANGE:
      case PA_UNKNOWN_CASE: return kUsage;
      default: return kMismatch;
    }
  }
}
