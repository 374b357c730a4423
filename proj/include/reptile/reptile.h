/*
 * C interface to the reptile library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call that can fail returns an rt_status;
 * on failure rt_last_error() describes the problem for the calling thread.
 */
#ifndef REPTILE_REPTILE_H
#define REPTILE_REPTILE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(REPTILE_BUILDING_LIBRARY)
#    define RT_API __declspec(dllexport)
#  else
#    define RT_API __declspec(dllimport)
#  endif
#else
#  define RT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rt_polycube rt_polycube;
typedef struct rt_arcs rt_arcs;
typedef struct rt_certificate rt_certificate;

typedef enum rt_status {
  RT_OK = 0,
  RT_ERR_EMPTY_POLYCUBE,
  RT_ERR_BAD_SCALE,
  RT_ERR_NOT_MANIFOLD,
  RT_ERR_INVALID_DIAGRAM,
  RT_ERR_NOT_A_BRICK_PAIR,
  RT_ERR_MALFORMED_LINE,
  RT_ERR_BAD_HEADER,
  RT_ERR_BAD_CERTIFICATE,
  RT_ERR_IO,
  RT_ERR_INVALID_ARGUMENT,
  RT_ERR_BUFFER_TOO_SMALL,
  RT_ERR_INTERNAL
} rt_status;

typedef enum rt_mode { RT_MODE_PROPER = 0, RT_MODE_FULL = 1 } rt_mode;

typedef enum rt_outcome {
  RT_FOUND = 0,
  RT_EXHAUSTED,
  RT_NODE_BUDGET_EXCEEDED,
  RT_TIMEOUT
} rt_outcome;

typedef enum rt_verify {
  RT_VERIFY_OK = 0,
  RT_VERIFY_OVERLAP,
  RT_VERIFY_GAP,
  RT_VERIFY_NOT_SCALED,
  RT_VERIFY_BAD_MODE
} rt_verify;

typedef struct rt_limits {
  uint64_t node_budget;
  double time_budget_seconds;
} rt_limits;

typedef struct rt_search_stats {
  rt_outcome outcome;
  uint64_t nodes;
  double seconds;
} rt_search_stats;

typedef struct rt_invariants {
  size_t cells;
  int face_connected;
  int manifold;
  int betti[3];
  /* Boundary data below is only meaningful when manifold != 0. */
  size_t boundary_components;
  int boundary_connected;
  size_t boundary_quads;
} rt_invariants;

typedef struct rt_surface_component {
  size_t quads;
  int euler_characteristic;
  int genus;
} rt_surface_component;

RT_API const char* rt_last_error(void);
RT_API const char* rt_status_name(rt_status status);
RT_API const char* rt_outcome_name(rt_outcome outcome);
RT_API const char* rt_verify_name(rt_verify result);

/* Polycubes. Cells are packed x,y,z triples. When parsing succeeds with
 * warnings (duplicate cells), rt_last_error() holds them one per line. */
RT_API rt_status rt_polycube_create(const int32_t* xyz, size_t n_cells, rt_polycube** out);
RT_API rt_status rt_polycube_parse(const char* text, rt_polycube** out, size_t* n_warnings);
RT_API rt_status rt_polycube_load(const char* path, rt_polycube** out, size_t* n_warnings);
RT_API rt_status rt_polycube_save(const rt_polycube* p, const char* path);
RT_API rt_status rt_polycube_fixture(const char* name, rt_polycube** out);
RT_API size_t rt_polycube_size(const rt_polycube* p);
RT_API rt_status rt_polycube_cells(const rt_polycube* p, int32_t* xyz, size_t capacity_cells);
RT_API int rt_polycube_equal(const rt_polycube* a, const rt_polycube* b);
RT_API void rt_polycube_free(rt_polycube* p);

RT_API rt_status rt_polycube_invariants(const rt_polycube* p, rt_invariants* out);
/* Writes up to `capacity` components; *count receives the total. */
RT_API rt_status rt_polycube_surface_components(const rt_polycube* p, rt_surface_component* out,
                                                size_t capacity, size_t* count);
RT_API rt_status rt_polycube_export_obj(const rt_polycube* p, const char* path);

/* Arc diagrams and the rep-tile construction. */
RT_API rt_status rt_arcs_builtin(const char* name, rt_arcs** out);
RT_API rt_status rt_arcs_load(const char* path, rt_arcs** out);
RT_API rt_status rt_arcs_save(const rt_arcs* d, const char* path);
RT_API int rt_arcs_refinement(const rt_arcs* d);
RT_API size_t rt_arcs_count(const rt_arcs* d);
/* *violations receives the number of violated conditions; the text report
 * (one line per violation) is written to `report` when non-null. */
RT_API rt_status rt_arcs_validate(const rt_arcs* d, size_t* violations, char* report, size_t capacity);
RT_API void rt_arcs_free(rt_arcs* d);

/* x_out receives the rep-tile; cert_out (optional) its 8m^3-piece certificate. */
RT_API rt_status rt_construct(const rt_arcs* d, rt_polycube** x_out, rt_certificate** cert_out);

/* Certificates. */
RT_API rt_status rt_certificate_load(const char* path, rt_certificate** out);
RT_API rt_status rt_certificate_save(const rt_certificate* c, const char* path);
RT_API size_t rt_certificate_placements(const rt_certificate* c);
RT_API int rt_certificate_scale(const rt_certificate* c); /* 0 when not a rep-tile certificate */
RT_API rt_status rt_certificate_piece(const rt_certificate* c, rt_polycube** out);
RT_API rt_status rt_certificate_verify(const rt_certificate* c, rt_verify* result, char* detail,
                                       size_t capacity);
RT_API void rt_certificate_free(rt_certificate* c);

/* Searches. A null limits pointer selects the library defaults. *cert_out is
 * null unless stats->outcome == RT_FOUND. */
RT_API rt_status rt_certify(const rt_polycube* p, int scale, rt_mode mode, const rt_limits* limits,
                            rt_certificate** cert_out, rt_search_stats* stats);
RT_API rt_status rt_tile(const rt_polycube* target, const rt_polycube* piece, rt_mode mode,
                         const rt_limits* limits, rt_certificate** cert_out, rt_search_stats* stats);
RT_API rt_status rt_brick(const rt_polycube* p, const int32_t rot[9], const int32_t trans[3], int scale,
                          rt_certificate** cert_out);

/* Called once per polycube in order; return non-zero to stop early. */
typedef int (*rt_polycube_visitor)(const rt_polycube* p, void* user);
RT_API rt_status rt_enumerate(int n, rt_mode mode, rt_polycube_visitor visit, void* user, size_t* count);

typedef struct rt_search_entry {
  const rt_polycube* piece;
  rt_search_stats stats;
  const rt_certificate* certificate; /* null unless certified */
  int betti[3];
  size_t n_components;
  const int* genera;
} rt_search_entry;

typedef int (*rt_search_visitor)(const rt_search_entry* entry, void* user);
RT_API rt_status rt_search(int n_max, int scale, rt_mode mode, const rt_limits* limits,
                           unsigned threads, rt_search_visitor visit, void* user);

#ifdef __cplusplus
}
#endif

#endif /* REPTILE_REPTILE_H */
