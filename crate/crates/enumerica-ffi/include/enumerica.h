#ifndef ENUMERICA_H
#define ENUMERICA_H

/* Generated by cbindgen from the enumerica-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes for every fallible entry point.
typedef enum EnumericaStatus {
  ENUMERICA_STATUS_OK = 0,
  // An argument was out of the documented range.
  ENUMERICA_STATUS_INVALID_ARGUMENT = 1,
  // The computation failed internally (cross-checks disagreed, or a panic
  // was caught).
  ENUMERICA_STATUS_COMPUTE_ERROR = 2,
  // A required pointer was NULL.
  ENUMERICA_STATUS_NULL_POINTER = 3,
} EnumericaStatus;

// Opaque table of rational plane curve counts N_1..N_dmax.
typedef struct EnumericaNdTable EnumericaNdTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *enumerica_version(void);

// Frees a string allocated by this library. NULL is accepted.
//
// # Safety
// `s` must have been returned by an enumerica function and not freed yet.
void enumerica_string_free(char *s);

// Lines on the degree-(2n-5) hypersurface in projective (n-1)-space via
// Schubert calculus. Writes the count as a decimal string.
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_lines_schubert(uint32_t n, char **out);

// Same count via torus localization with `trials` seeded random weight
// vectors (`trials >= 2`).
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_lines_localization(uint32_t n,
                                                  uint32_t trials,
                                                  uint64_t seed,
                                                  char **out);

// Builds the table N_1..N_dmax from the closed recursion.
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_nd_table_new(uint32_t dmax, struct EnumericaNdTable **out);

// Builds the same table by solving the associativity identity order by
// order; slower, independent route.
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_nd_table_new_from_associativity(uint32_t dmax,
                                                               struct EnumericaNdTable **out);

// Number of entries in the table.
//
// # Safety
// `table` must be a live handle from a table constructor.
uint32_t enumerica_nd_table_len(const struct EnumericaNdTable *table);

// The count N_d (1-based) as a decimal string.
//
// # Safety
// `table` must be a live handle and `out` a valid pointer.
enum EnumericaStatus enumerica_nd_table_value(const struct EnumericaNdTable *table,
                                              uint32_t d,
                                              char **out);

// Releases a table handle. NULL is accepted.
//
// # Safety
// `table` must have come from a table constructor and not be freed twice.
void enumerica_nd_table_free(struct EnumericaNdTable *table);

// Even Betti numbers of the Grassmannian of k-planes in n-space. Writes up
// to `buf_len` entries into `buf` and the true count into `written`; fails
// with `INVALID_ARGUMENT` when the buffer is too small (the required length
// is `k(n-k) + 1`).
//
// # Safety
// `buf` must point to at least `buf_len` writable u64 slots, `written` must
// be valid.
enum EnumericaStatus enumerica_betti(uint32_t k,
                                     uint32_t n,
                                     uint64_t *buf,
                                     size_t buf_len,
                                     size_t *written);

// Euler characteristic of projective n-space.
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_euler_projective(uint32_t n, int64_t *out);

// Euler characteristic of the Grassmannian of k-planes in n-space.
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_euler_grassmannian(uint32_t k, uint32_t n, int64_t *out);

// Euler characteristic of the complete flag variety (n <= 20).
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_euler_flag(uint32_t n, int64_t *out);

// Euler characteristic of a closed orientable genus-g surface from Morse
// cell counts: 2 - 2g.
//
// # Safety
// `out` must be a valid pointer.
enum EnumericaStatus enumerica_euler_surface(uint32_t genus, int64_t *out);

// Euler characteristic of the 2-torus (no fixed points).
int64_t enumerica_euler_torus(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ENUMERICA_H */
