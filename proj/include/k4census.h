/*
 * k4census C API.
 *
 * Opaque graph handles plus JSON/CSV producing entry points for every
 * workbench operation. All functions return a k4c_status; on failure the
 * message is available from k4c_last_error() on the same thread. Strings
 * returned through `char**` out-parameters are heap allocated and must be
 * released with k4c_string_free().
 */
#ifndef K4CENSUS_H
#define K4CENSUS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef K4CENSUS_BUILDING
#    define K4C_API __declspec(dllexport)
#  else
#    define K4C_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define K4C_API __attribute__((visibility("default")))
#else
#  define K4C_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k4c_status {
    K4C_OK = 0,
    K4C_ERR_PARSE = 1,            /* malformed graph6 or argument text */
    K4C_ERR_DOMAIN = 2,           /* argument outside the operation's domain */
    K4C_ERR_CAPABILITY = 3,       /* configured size limit exceeded */
    K4C_ERR_OVERFLOW = 4,         /* checked counter overflow */
    K4C_ERR_INVALID_ARGUMENT = 5, /* null pointer, unknown identity name */
    K4C_ERR_INTERNAL = 6
} k4c_status;

typedef struct k4c_graph k4c_graph;

K4C_API const char* k4c_version(void);
K4C_API const char* k4c_status_name(k4c_status status);
/* Message of the last failed call on this thread; "" if none. */
K4C_API const char* k4c_last_error(void);
K4C_API void k4c_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* One graph6 line; a single trailing newline is accepted. */
K4C_API k4c_status k4c_graph_from_graph6(const char* text, size_t length, k4c_graph** out);
K4C_API k4c_status k4c_graph_to_graph6(const k4c_graph* g, char** out);
K4C_API void k4c_graph_free(k4c_graph* g);

K4C_API k4c_status k4c_graph_order(const k4c_graph* g, size_t* n);
K4C_API k4c_status k4c_graph_size(const k4c_graph* g, uint64_t* m);
K4C_API k4c_status k4c_graph_complement(const k4c_graph* g, k4c_graph** out);
K4C_API k4c_status k4c_graph_is_triangle_free(const k4c_graph* g, int* out);
K4C_API k4c_status k4c_graph_has_independence_at_most_2(const k4c_graph* g, int* out);

/* Pentagon blow-up with the given part sizes, block-major vertex order. */
K4C_API k4c_status k4c_graph_blowup(const uint32_t parts[5], k4c_graph** out);
/* Complement of a seeded maximal triangle-free graph; density num/den. */
K4C_API k4c_status k4c_graph_random_complement_triangle_free(size_t n, uint64_t seed, uint64_t density_num,
                                                             uint64_t density_den, k4c_graph** out);

/* ---- census and identities -------------------------------------------- */

K4C_API k4c_status k4c_census_json(const k4c_graph* g, unsigned threads, char** out_json);

/*
 * `identity` is "all" or one identity name (case-insensitive, e.g. "eq1").
 * Writes a JSON array of certificates. *falsified (optional) is set to 1 if
 * any certificate fails on a graph that satisfies its hypothesis.
 */
K4C_API k4c_status k4c_verify_json(const k4c_graph* g, const char* identity, unsigned threads, char** out_json,
                                   int* falsified);

/* ---- constructions, search, bounds ------------------------------------- */

K4C_API k4c_status k4c_construct_json(const uint32_t parts[5], char** out_json);
K4C_API k4c_status k4c_blowup_optimize_json(size_t n, char** out_json);

/* elapsed_ms is reported as "0" unless `timing` is nonzero. */
K4C_API k4c_status k4c_search_exact_json(size_t n, unsigned threads, int timing, char** out_json);
K4C_API k4c_status k4c_search_local_json(size_t n, uint64_t seed, uint64_t steps, uint32_t restarts, int timing,
                                         char** out_json);

/* g may be NULL; when given, its order must equal n. */
K4C_API k4c_status k4c_bound_json(size_t n, const k4c_graph* g, unsigned threads, char** out_json);
K4C_API k4c_status k4c_bound_csv(size_t n, char** out_csv);
K4C_API k4c_status k4c_ratio_csv(uint64_t p_max, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* K4CENSUS_H */
