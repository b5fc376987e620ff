#ifndef INDTURAN_INDTURAN_H
#define INDTURAN_INDTURAN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define IT_API __attribute__((visibility("default")))
#else
#define IT_API
#endif

/* Status codes. IT_OK is zero; every domain error has its own code. */
typedef enum it_status {
  IT_OK = 0,
  IT_INVALID_ARGUMENT,
  IT_PARSE_ERROR,
  IT_EMPTY_QUERY,
  IT_INVALID_PARTITION,
  IT_EMPTY_GRAPH,
  IT_DEGENERATE_ROOT,
  IT_MULTIGRAPH,
  IT_NOT_BIPARTITE,
  IT_EMPTY_BLOWUP,
  IT_NOT_QUALIFIED,
  IT_CERTIFICATE_INVALID,
  IT_TOO_LARGE,
  IT_NO_PARTITION,
  IT_NOT_KSS_FREE,
  IT_HYPOTHESIS_UNMET,
  IT_BAD_BLOWUP,
  IT_NOT_SEMI_INDUCED,
  IT_INTERNAL
} it_status;

/* A graph with optional roots and bipartition. */
typedef struct it_graph it_graph;

/* Strings returned through char** are owned by the caller; release them with
   it_string_free. */
IT_API void it_string_free(char* s);

/* Message of the last failed call on this thread ("" if none). */
IT_API const char* it_last_error(void);

/* Name of a status code, e.g. "NotQualified". */
IT_API const char* it_status_name(it_status status);

IT_API it_status it_graph_from_json(const char* json, it_graph** out);
IT_API it_status it_family_build(const char* descriptor, it_graph** out);
IT_API void it_graph_free(it_graph* g);

IT_API int it_graph_order(const it_graph* g);
IT_API int it_graph_size(const it_graph* g);

IT_API it_status it_graph_to_json(const it_graph* g, char** out);
IT_API it_status it_graph_to_dot(const it_graph* g, char** out);

/* rho of a rooted graph as "p/q". */
IT_API it_status it_rho(const it_graph* g, char** out);

/* Balancedness report as JSON: rho, balanced, exponent, witness. */
IT_API it_status it_balanced(const it_graph* g, char** out);

/* Certificate JSON for 2 - a/b with power parameter l. */
IT_API it_status it_realize(int64_t a, int64_t b, int l, char** out);

/* JSON array of certificates for every qualifying reduced a/b. */
IT_API it_status it_sweep(int a_max, int b_max, int threads, char** out);

/* mode is "star", "plain" or "bip"; max_n <= 0 keeps the default budget. */
IT_API it_status it_extremal(int n, const it_graph* h, int s, const char* mode, int threads, int max_n, char** out);

/* kind is "tree", "keylemma", "asym" or "extract"; trace may be NULL. */
IT_API it_status it_embed(const char* kind, const char* request_json, uint64_t seed, char** out, char** trace);

/* kind is "badset", "rich" or "kst". */
IT_API it_status it_check(const char* kind, int trials, uint64_t seed, int threads, char** out);

#ifdef __cplusplus
}
#endif

#endif
