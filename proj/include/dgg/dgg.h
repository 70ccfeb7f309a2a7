/*
 * C interface to the dual graded graph / group tower library.
 *
 * Objects are opaque handles created by dgg_*_create/from functions and
 * released with the matching dgg_*_free. Every fallible call returns a
 * dgg_status; on failure dgg_last_error() describes the problem for the
 * calling thread. Strings returned through char** out-parameters are
 * heap-allocated and must be released with dgg_string_free.
 *
 * "Check" style calls report the mathematical verdict through an int*
 * out-parameter (1 = holds, 0 = violated) and still return DGG_OK; a
 * non-OK status always means the call itself could not be carried out.
 */
#ifndef DGG_DGG_H
#define DGG_DGG_H

#include <stddef.h>
#include <stdint.h>

#if defined(DGG_BUILDING_LIBRARY)
#define DGG_API __attribute__((visibility("default")))
#else
#define DGG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dgg_status {
  DGG_OK = 0,
  DGG_ERR_INVALID_ARGUMENT = 1,
  DGG_ERR_OUT_OF_RANGE = 2,
  DGG_ERR_PARSE = 3,
  DGG_ERR_UNSUPPORTED = 4,
  DGG_ERR_ENGINE = 5,
  DGG_ERR_NULL_POINTER = 6,
  DGG_ERR_INTERNAL = 7
} dgg_status;

typedef struct dgg_graph dgg_graph;
typedef struct dgg_group dgg_group;
typedef struct dgg_tower dgg_tower;

DGG_API const char* dgg_version(void);
DGG_API const char* dgg_last_error(void);
DGG_API const char* dgg_status_name(dgg_status status);
DGG_API void dgg_string_free(char* s);

/* ---- graded graphs ---------------------------------------------------- */

/* name: "young", "young-power:R", "scaled:D" or "wreath:d1,d2,...". */
DGG_API dgg_status dgg_graph_builtin(const char* name, int max_rank, dgg_graph** out);
/* {"vertices":[{"id":str,"rank":int}],"edges":[{"a":str,"b":str,"m":int}]} */
DGG_API dgg_status dgg_graph_from_json(const char* json, dgg_graph** out);
DGG_API dgg_status dgg_graph_product(const dgg_graph* p, const dgg_graph* q, dgg_graph** out);
DGG_API dgg_status dgg_graph_scale(const dgg_graph* p, uint64_t d, dgg_graph** out);
DGG_API dgg_status dgg_graph_truncate(const dgg_graph* p, int max_rank, dgg_graph** out);
DGG_API void dgg_graph_free(dgg_graph* g);

DGG_API dgg_status dgg_graph_max_rank(const dgg_graph* g, int* out);
DGG_API dgg_status dgg_graph_rank_size(const dgg_graph* g, int rank, size_t* out);
DGG_API dgg_status dgg_graph_to_json(const dgg_graph* g, char** out);
DGG_API dgg_status dgg_graph_to_dot(const dgg_graph* g, char** out);
DGG_API dgg_status dgg_graph_equal(const dgg_graph* p, const dgg_graph* q, int* equal);

/* Checks DU - UD = rI on ranks [first, last]; report is JSON. */
DGG_API dgg_status dgg_graph_check_duality(const dgg_graph* g, uint64_t r, int first, int last, int* holds,
                                           char** report_json);
/* Decimal strings (values can exceed 64 bits). */
DGG_API dgg_status dgg_graph_path_count(const dgg_graph* g, const char* label, char** decimal);
DGG_API dgg_status dgg_graph_sum_of_squares(const dgg_graph* g, int rank, char** decimal);
DGG_API dgg_status dgg_graph_lemma_checks(const dgg_graph* g, int rank, int* holds, char** report_json);
/* found = 1 and mapping_json = {"label": "label", ...} when isomorphic. */
DGG_API dgg_status dgg_graph_isomorphic(const dgg_graph* p, const dgg_graph* q, int* found, char** mapping_json);

/* ---- bijections ------------------------------------------------------- */

/* One-line permutation of 1..n; returns {"P":[[...]],"Q":[[...]]}. */
DGG_API dgg_status dgg_rsk(const int* sigma, size_t n, char** json);
/* Growth-diagram shape chains {"p_path":[...],"q_path":[...]}. */
DGG_API dgg_status dgg_rsk_growth(const int* sigma, size_t n, char** json);
/* word: "3^0 1^1 2^0"; returns {"p_path":[...],"q_path":[...]}. */
DGG_API dgg_status dgg_colored_rsk(const char* word, int r, char** json);
/* Inverse: path-pair JSON in, colored word out. */
DGG_API dgg_status dgg_colored_rsk_inverse(const char* path_pair_json, int r, char** word);

/* ---- groups ----------------------------------------------------------- */

/* Catalog names: C<n>, D<n>, Q8, S<n>, GenDih(...), <name>wrS<n>, products with 'x'. */
DGG_API dgg_status dgg_group_by_name(const char* name, dgg_group** out);
/* {"cayley":[[int]]} or {"permutations":[[int]]}, optional "name". */
DGG_API dgg_status dgg_group_from_json(const char* json, dgg_group** out);
DGG_API void dgg_group_free(dgg_group* g);
DGG_API dgg_status dgg_group_order(const dgg_group* g, size_t* out);
DGG_API dgg_status dgg_group_name(const dgg_group* g, char** out);
/* JSON list of the isomorphism classes of order 2r^2 by name. */
DGG_API dgg_status dgg_group_catalog_2r2(int r, char** names_json);
DGG_API dgg_status dgg_group_character_table(const dgg_group* g, char** json);

/* ---- towers ----------------------------------------------------------- */

/* {"levels":[group-ref,...],"embeddings":[[int,...],...]} */
DGG_API dgg_status dgg_tower_from_json(const char* json, dgg_tower** out);
/* {e} < H < H wr S_2 < ... < H wr S_max_level */
DGG_API dgg_status dgg_tower_wreath(const dgg_group* h, int max_level, dgg_tower** out);
DGG_API void dgg_tower_free(dgg_tower* t);
DGG_API dgg_status dgg_tower_levels(const dgg_tower* t, size_t* out);
DGG_API dgg_status dgg_tower_bratteli(const dgg_tower* t, dgg_graph** out);
DGG_API dgg_status dgg_tower_check(const dgg_tower* t, uint64_t r, int* passed, char** report_json);

DGG_API dgg_status dgg_classify_rank2(int r, unsigned threads, size_t* survivors, char** report_json);
DGG_API dgg_status dgg_verify_wreath(const dgg_group* h, int max_level, int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DGG_DGG_H */
