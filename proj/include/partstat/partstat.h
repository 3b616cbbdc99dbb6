/*
 * partstat C API.
 *
 * Every object is an opaque handle created by a psx_*_create/load/run call
 * and released with the matching psx_*_free. Functions return a psx_status;
 * on failure psx_last_error() describes what went wrong (thread-local,
 * valid until the next failing call on the same thread).
 *
 * Strings returned through `char** out` are heap allocated and must be
 * released with psx_string_free. Counts cross the boundary as decimal
 * strings because they are unbounded.
 */
#ifndef PARTSTAT_H
#define PARTSTAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PSX_API __declspec(dllexport)
#else
#  define PSX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psx_status {
  PSX_OK = 0,
  PSX_ERR_INVALID_ARGUMENT = 1,
  PSX_ERR_UNKNOWN_NAME = 2,
  PSX_ERR_PARSE = 3,
  PSX_ERR_INVARIANT = 4,
  PSX_ERR_IO = 5,
  PSX_ERR_INTERNAL = 6
} psx_status;

typedef enum psx_format { PSX_FORMAT_TABLE = 0, PSX_FORMAT_CSV = 1, PSX_FORMAT_JSON = 2 } psx_format;
typedef enum psx_side { PSX_SIDE_X = 0, PSX_SIDE_Y = 1 } psx_side;
typedef enum psx_theorem { PSX_THEOREM_B = 0, PSX_THEOREM_C = 1 } psx_theorem;
typedef enum psx_verdict {
  PSX_HOLDS = 0,
  PSX_VIOLATED = 1,
  PSX_INCONCLUSIVE = 2
} psx_verdict;

typedef struct psx_pair psx_pair;
typedef struct psx_statistic psx_statistic;
typedef struct psx_table psx_table;
typedef struct psx_comparison psx_comparison;
typedef struct psx_sieve_result psx_sieve_result;
typedef struct psx_report psx_report;

/* Optional parameters for built-in pairs and native statistics. Unused
 * fields are ignored; has_d / m1 == NULL mean "not given". */
typedef struct psx_params {
  int has_d;
  int64_t d;
  const int64_t* m1;
  size_t m1_len;
  int has_bound;
  int64_t bound;
} psx_params;

PSX_API const char* psx_version(void);
PSX_API const char* psx_last_error(void);
PSX_API void psx_string_free(char* s);

/* Worker threads for enumeration and sieve runs. 0 (the default) reads
 * PARTITION_SIEVE_THREADS. Results never depend on this value. */
PSX_API psx_status psx_set_threads(unsigned threads);

PSX_API psx_status psx_catalog_render(psx_format format, char** out);

/* Pairs */
PSX_API psx_status psx_pair_builtin(const char* name, const psx_params* params, psx_pair** out);
PSX_API psx_status psx_pair_parse(const char* json_text, psx_pair** out);
PSX_API psx_status psx_pair_load(const char* path, psx_pair** out);
PSX_API psx_status psx_pair_render(const psx_pair* pair, char** out);
PSX_API const char* psx_pair_name(const psx_pair* pair);
PSX_API void psx_pair_free(psx_pair* pair);

/* Reads an M1 list (one integer per line). *out is malloc'd; release with
 * psx_int_array_free. */
PSX_API psx_status psx_m1_load(const char* path, int64_t** out, size_t* len);
PSX_API void psx_int_array_free(int64_t* values);

/* Statistics */
PSX_API psx_status psx_statistic_from_pair(const psx_pair* pair, psx_side side, psx_statistic** out);
PSX_API psx_status psx_statistic_native(const char* name, const psx_params* params,
                                        psx_statistic** out);
PSX_API const char* psx_statistic_label(const psx_statistic* stat);
/* Evaluates on the partition given as a list of parts (any order). */
PSX_API psx_status psx_statistic_evaluate(const psx_statistic* stat, const int64_t* parts,
                                          size_t len, int64_t* value);
PSX_API void psx_statistic_free(psx_statistic* stat);

/* Distribution tables */
PSX_API psx_status psx_distribution(const psx_statistic* stat, int64_t n, psx_table** out);
PSX_API int64_t psx_table_n(const psx_table* table);
PSX_API psx_status psx_table_count(const psx_table* table, int64_t j, char** out);
PSX_API psx_status psx_table_total(const psx_table* table, char** out);
PSX_API int psx_table_equal(const psx_table* a, const psx_table* b);
PSX_API psx_status psx_table_render(const psx_table* table, psx_format format, char** out);
PSX_API void psx_table_free(psx_table* table);

/* p(n) as a decimal string. */
PSX_API psx_status psx_count_partitions(int64_t n, char** out);

/* Comparison of two statistics over n in [n_from, n_to] */
PSX_API psx_status psx_compare(const psx_statistic* x, const psx_statistic* y, int64_t n_from,
                               int64_t n_to, psx_comparison** out);
PSX_API int psx_comparison_identical(const psx_comparison* cmp);
/* n of the first divergent row, or -1 when identical everywhere. */
PSX_API int64_t psx_comparison_first_divergence(const psx_comparison* cmp);
PSX_API psx_status psx_comparison_render(const psx_comparison* cmp, psx_format format, char** out);
PSX_API void psx_comparison_free(psx_comparison* cmp);

/* Inclusion-exclusion sieve on one side of a pair. When the run is not
 * truncated it is also checked against full enumeration. */
PSX_API psx_status psx_sieve(const psx_pair* pair, psx_side side, int64_t n, uint64_t subset_cap,
                             psx_sieve_result** out);
PSX_API int psx_sieve_truncated(const psx_sieve_result* res);
/* 1 pass, 0 fail, -1 not run (truncated). */
PSX_API int psx_sieve_crosscheck(const psx_sieve_result* res);
PSX_API uint64_t psx_sieve_subsets_explored(const psx_sieve_result* res);
/* Borrowed; NULL when truncated. */
PSX_API const psx_table* psx_sieve_table(const psx_sieve_result* res);
PSX_API psx_status psx_sieve_render(const psx_sieve_result* res, psx_format format, char** out);
PSX_API void psx_sieve_free(psx_sieve_result* res);

/* Hypothesis checks */
PSX_API psx_status psx_check(const psx_pair* pair, psx_theorem theorem, int64_t n_max,
                             uint64_t subset_cap, psx_report** out);
PSX_API psx_verdict psx_report_verdict(const psx_report* report);
/* 1 when a witness is present and re-validates from the pair, 0 otherwise. */
PSX_API int psx_report_witness_valid(const psx_report* report);
/* Shared element of a support witness, 0 if not applicable. */
PSX_API int64_t psx_report_shared_element(const psx_report* report);
PSX_API psx_status psx_report_render(const psx_report* report, psx_format format, char** out);
PSX_API void psx_report_free(psx_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PARTSTAT_H */
