/*
 * qrz: quotient-realizability of multisets in finite groups.
 *
 * C interface over opaque handles. Every function that can fail returns a
 * qrz_status; on failure qrz_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap allocated and must
 * be released with qrz_string_free.
 */
#ifndef QRZ_QRZ_H
#define QRZ_QRZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QRZ_BUILDING_LIBRARY)
#    define QRZ_API __declspec(dllexport)
#  else
#    define QRZ_API __declspec(dllimport)
#  endif
#else
#  define QRZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qrz_status {
  QRZ_OK = 0,
  QRZ_ERR_PARSE = 1,         /* malformed spec, literal or file */
  QRZ_ERR_INVALID_GROUP = 2, /* table violates a group axiom */
  QRZ_ERR_PRECONDITION = 3,  /* e.g. |A| != |G|, support outside H */
  QRZ_ERR_BUDGET = 4,        /* search or enumeration budget exceeded */
  QRZ_ERR_IO = 5,
  QRZ_ERR_ARGUMENT = 6,      /* null handle or invalid enum value */
  QRZ_ERR_INTERNAL = 7
} qrz_status;

typedef enum qrz_format { QRZ_FORMAT_TEXT = 0, QRZ_FORMAT_JSON = 1 } qrz_format;

typedef enum qrz_decider {
  QRZ_DECIDER_MATCHING = 0,
  QRZ_DECIDER_TILING = 1,
  QRZ_DECIDER_REDUCTION = 2
} qrz_decider;

typedef enum qrz_realizability {
  QRZ_REALIZABLE = 0,
  QRZ_NOT_REALIZABLE = 1,
  QRZ_OBSTRUCTION_FAILED = 2
} qrz_realizability;

typedef struct qrz_group qrz_group;
typedef struct qrz_multiset qrz_multiset;
typedef struct qrz_verdict qrz_verdict;

typedef struct qrz_decide_options {
  qrz_decider decider;
  /* Comma-separated generator names of H; required for the reduction decider. */
  const char* subgroup_generators;
  /* Nonzero: search even when the abelianization obstruction fails. */
  int skip_obstruction;
  /* Abort with QRZ_ERR_BUDGET after this many search nodes; 0 = unlimited. */
  uint64_t node_limit;
} qrz_decide_options;

QRZ_API const char* qrz_version(void);
QRZ_API const char* qrz_last_error(void);
QRZ_API void qrz_string_free(char* s);

/* Groups. `spec` uses the group spec syntax, e.g. "product(symmetric:3,cyclic:2)". */
QRZ_API qrz_status qrz_group_create(const char* spec, qrz_group** out);
QRZ_API void qrz_group_destroy(qrz_group* g);
QRZ_API size_t qrz_group_order(const qrz_group* g);
/* Borrowed pointer valid for the group's lifetime; NULL when out of range. */
QRZ_API const char* qrz_group_element_name(const qrz_group* g, size_t index);
QRZ_API size_t qrz_group_abelianization_order(const qrz_group* g);
/* Order, elements, abelianization and (for order <= 24) the subgroup lattice. */
QRZ_API qrz_status qrz_group_describe(const qrz_group* g, qrz_format f, char** out);

/* Multisets, e.g. "(12)*2,(23)*4". */
QRZ_API qrz_status qrz_multiset_parse(const qrz_group* g, const char* literal, qrz_multiset** out);
QRZ_API void qrz_multiset_destroy(qrz_multiset* a);
QRZ_API size_t qrz_multiset_total(const qrz_multiset* a);

/* Decision. `opts` may be NULL for the matching decider with defaults. */
QRZ_API qrz_status qrz_decide(const qrz_group* g, const qrz_multiset* a, const qrz_decide_options* opts,
                              qrz_verdict** out);
QRZ_API void qrz_verdict_destroy(qrz_verdict* v);
QRZ_API qrz_realizability qrz_verdict_status(const qrz_verdict* v);
QRZ_API uint64_t qrz_verdict_nodes(const qrz_verdict* v);
QRZ_API int qrz_verdict_exhausted(const qrz_verdict* v);
/* 1 pass, 0 fail, -1 not checked. */
QRZ_API int qrz_verdict_obstruction_pass(const qrz_verdict* v);
/* Number of cycles in the certificate; 0 when there is none. */
QRZ_API size_t qrz_verdict_cycle_count(const qrz_verdict* v);
/* A nonzero `ordering_states` also searches for a product-one ordering of A,
   visiting at most that many search states. */
QRZ_API qrz_status qrz_verdict_render(const qrz_verdict* v, qrz_format f, uint64_t ordering_states, char** out);
/* Certificate file text; QRZ_ERR_PRECONDITION when the verdict has none. */
QRZ_API qrz_status qrz_verdict_certificate(const qrz_verdict* v, char** out);

/* Product-one ordering a1..aN with aN...a1 = 1. *found is 1 (found), 0 (none
   exists) or -1 (state budget exceeded). `ordering` may be NULL. */
QRZ_API qrz_status qrz_product_one_ordering(const qrz_group* g, const qrz_multiset* a, uint64_t max_states,
                                            int* found, char** ordering);

/* Independent certificate check of `certificate_text` against A. *pass is 1 or 0. */
QRZ_API qrz_status qrz_verify_certificate(const qrz_group* g, const qrz_multiset* a, const char* certificate_text,
                                          qrz_format f, int* pass, char** report);

/* Simple product-one words within a budget multiset; max_len 0 = default. */
QRZ_API qrz_status qrz_words(const qrz_group* g, const char* budget, size_t max_len, qrz_format f, char** out);

/* Full classification. max_multisets 0 = default (QRZ_CLASSIFY_BUDGET or 10^6). */
QRZ_API qrz_status qrz_classify(const qrz_group* g, size_t max_multisets, unsigned workers, qrz_format f,
                                char** table, char** summary, size_t* realizable);

/* Experiments by id (NULL or "all" for every experiment). */
QRZ_API qrz_status qrz_experiment_ids(char** out); /* newline separated */
QRZ_API qrz_status qrz_run_experiments(const char* id, qrz_format f, int* all_pass, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QRZ_QRZ_H */
