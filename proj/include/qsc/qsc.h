#ifndef QSC_QSC_H
#define QSC_QSC_H

/*
 * C interface to libqsc. Objects are opaque handles released with their
 * _free function. Every call returning qsc_status leaves a message for
 * qsc_last_error() on failure (per thread). Strings returned through char**
 * are owned by the caller and released with qsc_string_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QSC_BUILDING_LIBRARY)
#define QSC_API __attribute__((visibility("default")))
#else
#define QSC_API
#endif

typedef enum qsc_status {
  QSC_OK = 0,
  QSC_ERR_INVALID_ARGUMENT = 1,
  QSC_ERR_PARSE = 2,
  QSC_ERR_IO = 3,
  QSC_ERR_VERIFICATION = 4,
  QSC_ERR_GUARD = 5,
  QSC_ERR_INTERNAL = 6
} qsc_status;

typedef struct qsc_design qsc_design;
typedef struct qsc_code qsc_code;
typedef struct qsc_perm qsc_perm;
typedef struct qsc_orbit_matrix qsc_orbit_matrix;
typedef struct qsc_involutions qsc_involutions;
typedef struct qsc_graph qsc_graph;

typedef struct qsc_design_params {
  int t, v, k, lambda, b, r;
} qsc_design_params;

typedef struct qsc_srg_params {
  long long v, k, lambda, mu;
} qsc_srg_params;

typedef enum qsc_axis { QSC_AXIS_COLUMNS = 0, QSC_AXIS_ROWS = 1 } qsc_axis;

QSC_API const char* qsc_version(void);
QSC_API const char* qsc_last_error(void);
QSC_API const char* qsc_status_name(qsc_status s);
QSC_API void qsc_string_free(char* s);
QSC_API qsc_status qsc_sha256_file(const char* path, char** hex);
QSC_API qsc_status qsc_write_file(const char* path, const char* content);

/* designs */
QSC_API qsc_status qsc_design_blokhuis_haemers(int q, int threads, qsc_design** out);
QSC_API qsc_status qsc_design_read(const char* path, qsc_design** out);
QSC_API qsc_status qsc_design_parse(const char* text, qsc_design** out);
QSC_API qsc_status qsc_design_to_text(const qsc_design* d, char** text);
QSC_API qsc_status qsc_design_write(const qsc_design* d, const char* path);
QSC_API void qsc_design_free(qsc_design* d);
QSC_API int qsc_design_points(const qsc_design* d);
QSC_API int qsc_design_blocks(const qsc_design* d);
QSC_API qsc_status qsc_design_verify(const qsc_design* d, int t, qsc_design_params* out);
/* Ascending intersection numbers; *count receives the full count even when it exceeds capacity. */
QSC_API qsc_status qsc_design_intersections(const qsc_design* d, int threads, int* numbers, size_t capacity,
                                            size_t* count);
QSC_API qsc_status qsc_design_complement(const qsc_design* d, qsc_design** out);
QSC_API qsc_status qsc_design_equal(const qsc_design* a, const qsc_design* b, int* equal);
/* Parameters, intersection numbers, repeated blocks and self-dual containment conditions. */
QSC_API qsc_status qsc_design_report_json(const qsc_design* d, int threads, char** json);

/* codes */
QSC_API qsc_status qsc_code_from_incidence(const qsc_design* d, int transpose, qsc_code** out);
/* rows: k x n row-major entries, reduced mod p. */
QSC_API qsc_status qsc_code_span(const int* rows, int k, int n, int p, qsc_code** out);
QSC_API qsc_status qsc_code_read(const char* path, qsc_code** out);
QSC_API qsc_status qsc_code_parse(const char* text, qsc_code** out);
QSC_API qsc_status qsc_code_to_text(const qsc_code* c, char** text);
QSC_API qsc_status qsc_code_write(const qsc_code* c, const char* path);
QSC_API void qsc_code_free(qsc_code* c);
QSC_API qsc_status qsc_code_info(const qsc_code* c, int* p, int* n, int* k);
QSC_API qsc_status qsc_code_dual(const qsc_code* c, qsc_code** out);
QSC_API qsc_status qsc_code_equal(const qsc_code* a, const qsc_code* b, int* equal);
QSC_API qsc_status qsc_code_self_orthogonal(const qsc_code* c, int* result);
/* counts must hold n + 1 entries. */
QSC_API qsc_status qsc_code_weight_distribution(const qsc_code* c, int max_enum_dim, int threads,
                                                unsigned long long* counts, size_t capacity);
/* Full report; QSC_ERR_GUARD when k exceeds max_enum_dim. */
QSC_API qsc_status qsc_code_report_json(const qsc_code* c, int max_enum_dim, int threads, char** json);
/* Report without codeword enumeration. */
QSC_API qsc_status qsc_code_structure_json(const qsc_code* c, char** json);
QSC_API int qsc_rains_bound(int n);
/* "optimal", "not optimal", "optimal (equal to best known)" or "unknown". */
QSC_API const char* qsc_optimality(int n, int k, int d);

/* permutations and orbit matrices */
QSC_API qsc_status qsc_perm_create(const int* images, int n, qsc_perm** out);
QSC_API qsc_status qsc_perm_read(const char* path, qsc_perm** out);
QSC_API qsc_status qsc_perm_to_text(const qsc_perm* p, char** text);
QSC_API qsc_status qsc_perm_write(const qsc_perm* p, const char* path);
QSC_API int qsc_perm_size(const qsc_perm* p);
QSC_API int qsc_perm_image(const qsc_perm* p, int i);
QSC_API void qsc_perm_free(qsc_perm* p);

QSC_API qsc_status qsc_involutions_find(const qsc_design* d, int q, int threads, qsc_involutions** out);
QSC_API size_t qsc_involutions_count(const qsc_involutions* l);
/* Point permutation and (f, h) of the i-th involution; *point_perm may be NULL. */
QSC_API qsc_status qsc_involutions_get(const qsc_involutions* l, size_t i, int* f, int* h, int* frobenius,
                                       qsc_perm** point_perm);
/* One line per involution: index, f, h, sigma, A, t. */
QSC_API qsc_status qsc_involutions_json(const qsc_involutions* l, char** json);
QSC_API void qsc_involutions_free(qsc_involutions* l);

/* Orbit matrix of the group generated by the point permutations. */
QSC_API qsc_status qsc_orbit_matrix_compute(const qsc_design* d, const qsc_perm* const* generators, size_t count,
                                            qsc_orbit_matrix** out);
QSC_API qsc_status qsc_orbit_matrix_read(const char* path, qsc_orbit_matrix** out);
QSC_API qsc_status qsc_orbit_matrix_to_text(const qsc_orbit_matrix* om, char** text);
QSC_API qsc_status qsc_orbit_matrix_write(const qsc_orbit_matrix* om, const char* path);
QSC_API qsc_status qsc_orbit_matrix_dims(const qsc_orbit_matrix* om, int* m, int* n);
QSC_API int qsc_orbit_matrix_entry(const qsc_orbit_matrix* om, int i, int j);
QSC_API void qsc_orbit_matrix_free(qsc_orbit_matrix* om);
/*
 * Verifies the orbit-matrix equations against the design parameters; when the
 * matrix carries its orbit partitions and the design is quasi-symmetric, also
 * the block-graph quotient equations and the coupling of gamma with them. *violations receives the
 * total violation count; the JSON lists every violation.
 */
QSC_API qsc_status qsc_orbit_matrix_verify(const qsc_orbit_matrix* om, const qsc_design* d, int threads,
                                           long long* violations, char** json);
/* Code of the non-fixed part; info_json (may be NULL) holds lengths, guarantees and warnings. */
QSC_API qsc_status qsc_orbit_matrix_code(const qsc_orbit_matrix* om, const qsc_design* d, qsc_axis axis, int p,
                                         int drop_zero, qsc_code** out, char** info_json);
QSC_API qsc_status qsc_orbit_matrix_equal_orbit_code(const qsc_orbit_matrix* om, const qsc_design* d, int p,
                                                     qsc_code** out);

/* strongly regular graphs */
QSC_API qsc_status qsc_tw_srg_params(long long n, long long k, long long q, long long w1, long long w2,
                                     qsc_srg_params* out);
QSC_API qsc_status qsc_srg_from_code(const qsc_code* c, qsc_graph** graph, qsc_srg_params* params);
QSC_API qsc_status qsc_graph_srg_params(const qsc_graph* g, qsc_srg_params* out, int* strongly_regular);
QSC_API qsc_status qsc_graph_to_text(const qsc_graph* g, char** text);
QSC_API qsc_status qsc_graph_write(const qsc_graph* g, const char* path);
QSC_API int qsc_graph_vertices(const qsc_graph* g);
QSC_API void qsc_graph_free(qsc_graph* g);
QSC_API qsc_status qsc_graph_to_symmetric_design(const qsc_graph* g, const qsc_srg_params* params,
                                                 qsc_design** out);

/*
 * Reproduction workflows. report_dir may be NULL; otherwise the report files
 * are written there and their names (relative to report_dir) are returned
 * one per line in *outputs.
 */
QSC_API qsc_status qsc_example13(int q, int threads, int max_enum_dim, const char* report_dir, char** summary,
                                 char** outputs);
/* *ok is 0 when any equation check fails; the call itself still succeeds. */
QSC_API qsc_status qsc_example14(const qsc_design* d, int q, int threads, int max_enum_dim, const char* report_dir,
                                 char** summary, char** outputs, int* ok);

#ifdef __cplusplus
}
#endif

#endif
