#ifndef KPFERM_H
#define KPFERM_H

/* C interface to the kpferm library. All inputs are JSON text; results are
 * opaque handles or library-allocated strings released with kpf_string_free.
 * On a non-OK status kpf_last_error() describes the failure (per thread). */

#include <stdint.h>

#if defined(_WIN32)
#define KPF_API __declspec(dllexport)
#else
#define KPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kpf_status {
  KPF_OK = 0,
  KPF_USAGE = 1,
  KPF_PARSE = 2,
  KPF_CAP = 3,
  KPF_MISMATCH = 4,
  KPF_INVALID = 5,
  KPF_INTERNAL = 6
} kpf_status;

typedef enum kpf_format { KPF_FORMAT_JSON = 0, KPF_FORMAT_TEXT = 1 } kpf_format;

typedef enum kpf_cocycle_mode {
  KPF_COCYCLE_COUNT = 0,
  KPF_COCYCLE_RESIDUE = 1,
  KPF_COCYCLE_BOTH = 2
} kpf_cocycle_mode;

/* Skip the independent oracle computation. */
#define KPF_FAST 1u

#define KPF_MAX_WEIGHT 16
#define KPF_MAX_NPOINT 6
#define KPF_MAX_ENERGY 8

typedef struct kpf_coords kpf_coords;     /* affine coordinates a_{n,m} */
typedef struct kpf_quad kpf_quad;         /* quadratic fermion element */
typedef struct kpf_loop kpf_loop;         /* gl_n[t, 1/t] element */
typedef struct kpf_series kpf_series;     /* truncated series in T1, T2, ... */
typedef struct kpf_table kpf_table;       /* n-point table */
typedef struct kpf_puncture kpf_puncture; /* puncture data h, E+, E+0 */

KPF_API const char* kpf_last_error(void);
KPF_API const char* kpf_version(void);
KPF_API void kpf_string_free(char* s);

KPF_API kpf_status kpf_coords_parse(const char* json, kpf_coords** out);
KPF_API void kpf_coords_free(kpf_coords* h);
KPF_API kpf_status kpf_quad_parse(const char* json, kpf_quad** out);
KPF_API void kpf_quad_free(kpf_quad* h);
KPF_API kpf_status kpf_loop_parse(const char* json, kpf_loop** out);
KPF_API void kpf_loop_free(kpf_loop* h);
KPF_API kpf_status kpf_series_parse(const char* json, kpf_series** out);
KPF_API void kpf_series_free(kpf_series* h);
KPF_API kpf_status kpf_series_format(const kpf_series* h, kpf_format fmt, char** out);
KPF_API void kpf_table_free(kpf_table* h);
KPF_API kpf_status kpf_table_format(const kpf_table* h, kpf_format fmt, char** out);
KPF_API kpf_status kpf_puncture_parse(const char* json, kpf_puncture** out);
KPF_API void kpf_puncture_free(kpf_puncture* h);

/* Tau function up to total weight `weight`. Unless KPF_FAST, the direct and
 * Schur paths are compared and KPF_MISMATCH returned if they differ. */
KPF_API kpf_status kpf_tau(const kpf_coords* a, int weight, unsigned flags, kpf_series** out);

/* n-point functions for all cells with j1 + ... + jn <= weight. Unless
 * KPF_FAST, compared against differentiation of log tau. */
KPF_API kpf_status kpf_npoint(const kpf_coords* a, int n, int weight, unsigned flags, kpf_table** out);

/* Subalgebra labels of x; l parametrizes the affine families. */
KPF_API kpf_status kpf_classify(const kpf_quad* x, int l, kpf_format fmt, char** out);

/* Cocycle of two loop elements by pair counting on the embedded matrices
 * and/or by residue. In BOTH mode a disagreement yields KPF_MISMATCH with
 * the output still filled in. */
KPF_API kpf_status kpf_cocycle(const kpf_loop* a, const kpf_loop* b, kpf_cocycle_mode mode,
                               kpf_format fmt, char** out);

/* Periodic band matrix of a loop element. */
KPF_API kpf_status kpf_embed(const kpf_loop* a, kpf_format fmt, char** out);

/* Residual of the puncture constraint on tau (zero iff satisfied). */
KPF_API kpf_status kpf_check_puncture(const kpf_series* tau, const kpf_puncture* p, kpf_series** out);

/* Invariant suite at reduced sizes. *passed is 1 iff every suite passed. */
KPF_API kpf_status kpf_selftest(int energy, int mutate_boson_sign, uint64_t seed, char** report,
                                int* passed);

#ifdef __cplusplus
}
#endif

#endif
