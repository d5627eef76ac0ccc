#ifndef PERMAV_PERMAV_H
#define PERMAV_PERMAV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PERMAV_BUILDING)
#define PA_API __attribute__((visibility("default")))
#else
#define PA_API
#endif

typedef enum pa_status {
  PA_OK = 0,
  PA_INVALID_ARGUMENT = 1,
  PA_OUT_OF_RANGE = 2,
  PA_UNKNOWN_CASE = 3,
  PA_DOMAIN = 4,
  PA_NON_INTEGRAL = 5,
  PA_INTERNAL = 99
} pa_status;

typedef struct pa_patternset pa_patternset;
typedef struct pa_table pa_table;
typedef struct pa_series pa_series;
typedef struct pa_catalog pa_catalog;

/* Message for the last failing call on this thread; empty after success. */
PA_API const char* pa_last_error(void);
/* Every char** result is heap-allocated and must be released with pa_string_free. */
PA_API void pa_string_free(char* s);

/* Permutations and pattern sets */
PA_API pa_status pa_patternset_parse(const char* text, pa_patternset** out);
PA_API void pa_patternset_free(pa_patternset* t);
PA_API pa_status pa_patternset_to_string(const pa_patternset* t, char** out);
PA_API pa_status pa_symmetry_class_json(const pa_patternset* t, char** out);
PA_API pa_status pa_contains(const char* perm, const char* pattern, int* out);
PA_API pa_status pa_avoids(const char* perm, const pa_patternset* t, int* out);
PA_API pa_status pa_statistic(const char* perm, const char* statistic, int* out);

/* Enumeration; threads <= 0 selects the hardware concurrency. */
PA_API pa_status pa_count_avoiders(const pa_patternset* t, int n_max, int threads, pa_table** out);
PA_API pa_status pa_count_filtered(const pa_patternset* t, int n_max, const char* filter, int n_min, int threads,
                                   pa_table** out);
/* Smallest length at which every clause of the filter is evaluable. */
PA_API pa_status pa_filter_min_length(const char* filter, int* out);
PA_API pa_status pa_count_by_statistic_json(const pa_patternset* t, int n_max, const char* statistic, int threads,
                                            char** out);

PA_API void pa_table_free(pa_table* table);
PA_API pa_status pa_table_range(const pa_table* table, int* n_min, int* n_max);
PA_API pa_status pa_table_count(const pa_table* table, int n, char** decimal);
PA_API pa_status pa_table_json(const pa_table* table, char** out);
PA_API pa_status pa_table_csv(const pa_table* table, char** out);

/* Series */
PA_API void pa_series_free(pa_series* s);
PA_API int pa_series_order(const pa_series* s);
PA_API pa_status pa_series_coefficient(const pa_series* s, int i, char** out);
PA_API pa_status pa_series_json(const pa_series* s, char** out);
PA_API pa_status pa_series_first_non_integral(const pa_series* s, int* index);

/* Case registry; each handle owns an independent, mutable copy of the built-in registry. */
PA_API pa_status pa_catalog_open(pa_catalog** out);
PA_API void pa_catalog_free(pa_catalog* c);
PA_API pa_status pa_catalog_ids(const pa_catalog* c, int* ids, int capacity, int* count);
PA_API pa_status pa_catalog_patterns(const pa_catalog* c, int case_id, char** out);
PA_API pa_status pa_catalog_builder(const pa_catalog* c, int case_id, char** out);
PA_API pa_status pa_catalog_auxiliaries_json(const pa_catalog* c, int case_id, char** out);
PA_API pa_status pa_catalog_evaluate(const pa_catalog* c, int case_id, int order, pa_series** out);
PA_API pa_status pa_catalog_evaluate_auxiliary(const pa_catalog* c, int case_id, const char* name, int order,
                                               pa_series** out, char** filter);
PA_API pa_status pa_catalog_verify(const pa_catalog* c, int case_id, int n_max, int threads, char** report_json,
                                   int* passed);
PA_API pa_status pa_catalog_leaf_count(const pa_catalog* c, int case_id, int* out);
/* Adds the rational delta ("p" or "p/q") to one coefficient of one polynomial leaf of a case's main builder. */
PA_API pa_status pa_catalog_mutate(pa_catalog* c, int case_id, int leaf, int coeff, const char* delta);

/* Independent engines: "case131", "case164", "case194", "case199", "case232", "case222". */
PA_API pa_status pa_engine_counts(const char* engine, int n_max, pa_table** out);
PA_API pa_status pa_case222_forest_json(int n_max, char** out);
PA_API pa_status pa_case242_fixed_point(int order, pa_series** out);
PA_API pa_status pa_case242_sum(int n, char** decimal);
PA_API pa_status pa_case118_j_recurrence(int order, int m_max, pa_series** out);

/* Wilf scan over triples of distinct 4-letter patterns containing 1342. */
PA_API pa_status pa_wilf_scan_json(int n, int threads, char** out);

#ifdef __cplusplus
}
#endif

#endif
