#ifndef ORBIKIT_H
#define ORBIKIT_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum OrbikitStatus {
  ORBIKIT_STATUS_OK = 0,
  ORBIKIT_STATUS_NULL_POINTER = 1,
  ORBIKIT_STATUS_INVALID_UTF8 = 2,
  ORBIKIT_STATUS_PARSE = 3,
  ORBIKIT_STATUS_VALIDATION = 4,
  ORBIKIT_STATUS_DIMENSION_MISMATCH = 5,
  ORBIKIT_STATUS_UNSUPPORTED = 6,
  ORBIKIT_STATUS_INCONSISTENT = 7,
  ORBIKIT_STATUS_PARITY = 8,
  ORBIKIT_STATUS_BUFFER_TOO_SMALL = 9,
  ORBIKIT_STATUS_IO = 10,
  ORBIKIT_STATUS_PANIC = 11,
} OrbikitStatus;

typedef enum OrbikitVerdict {
  ORBIKIT_VERDICT_COMPATIBLE_SO_FAR = 0,
  ORBIKIT_VERDICT_INCOMPATIBLE = 1,
} OrbikitVerdict;

// Opaque handle to a Hodge diamond.
typedef struct OrbikitDiamond OrbikitDiamond;

// Opaque handle to validated inertia data.
typedef struct OrbikitPresentation OrbikitPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread, or NULL.
//
// The pointer stays valid until the next orbikit call on the same thread.
const char *orbikit_last_error_message(void);

// Parses an orbifold or generator JSON document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum OrbikitStatus orbikit_presentation_from_json(const char *json,
                                                  struct OrbikitPresentation **out);

// Loads a catalog entry by name.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a writable pointer.
enum OrbikitStatus orbikit_presentation_from_catalog(const char *name,
                                                     struct OrbikitPresentation **out);

// Inertia data of the Kummer quotient of an `n`-dimensional torus.
//
// # Safety
// `out` must be a writable pointer.
enum OrbikitStatus orbikit_build_kummer(uint32_t n, struct OrbikitPresentation **out);

// Inertia data of `P^n / G` for `G = Z/orders[0] x ... x Z/orders[k-1]`
// acting diagonally. `weights` is row-major with `k` rows of `n + 1` entries.
//
// # Safety
// `orders` must point to `k` values and `weights` to `k * (n + 1)` values
// (either may be NULL when `k == 0`); `out` must be writable.
enum OrbikitStatus orbikit_build_projective_quotient(uint32_t n,
                                                     const uint32_t *orders,
                                                     uintptr_t k,
                                                     const uint32_t *weights,
                                                     struct OrbikitPresentation **out);

// # Safety
// `p` must be NULL or a handle returned by this library and not yet freed.
void orbikit_presentation_free(struct OrbikitPresentation *p);

// Ambient dimension, or 0 for a NULL handle.
//
// # Safety
// `p` must be NULL or a live handle.
uint32_t orbikit_presentation_dim(const struct OrbikitPresentation *p);

// Number of inertia sectors, or 0 for a NULL handle.
//
// # Safety
// `p` must be NULL or a live handle.
uintptr_t orbikit_presentation_sector_count(const struct OrbikitPresentation *p);

// # Safety
// `p` must be a live handle and `out` writable.
enum OrbikitStatus orbikit_presentation_is_gorenstein(const struct OrbikitPresentation *p,
                                                      bool *out);

// `h^{0,q}` of the orbifold, read from the untwisted sector.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum OrbikitStatus orbikit_presentation_h0q(const struct OrbikitPresentation *p,
                                            uint32_t q,
                                            uint64_t *out);

// Writes the `2n + 1` sector-summed column values (index `-n` first).
//
// # Safety
// `p` must be a live handle and `buf` must hold `len` values.
enum OrbikitStatus orbikit_presentation_hochschild(const struct OrbikitPresentation *p,
                                                   uint64_t *buf,
                                                   uintptr_t len);

// # Safety
// `p` must be a live handle and `out` writable.
enum OrbikitStatus orbikit_assemble_diamond(const struct OrbikitPresentation *p,
                                            struct OrbikitDiamond **out);

// Parses a diamond JSON document (`{"name", "dim", "entries"}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum OrbikitStatus orbikit_diamond_from_json(const char *json, struct OrbikitDiamond **out);

// Serializes a diamond as JSON. Free the result with [`orbikit_string_free`].
//
// # Safety
// `d` must be a live handle, `name` NULL or a NUL-terminated string, `out` writable.
enum OrbikitStatus orbikit_diamond_to_json(const struct OrbikitDiamond *d,
                                           const char *name,
                                           char **out);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void orbikit_string_free(char *s);

// # Safety
// `d` must be NULL or a handle returned by this library and not yet freed.
void orbikit_diamond_free(struct OrbikitDiamond *d);

// # Safety
// `d` must be NULL or a live handle.
uint32_t orbikit_diamond_dim(const struct OrbikitDiamond *d);

// # Safety
// `d` must be NULL or a live handle.
uint64_t orbikit_diamond_level(const struct OrbikitDiamond *d);

// Entry at `(p_num / p_den, q_num / q_den)`.
//
// # Safety
// `d` must be a live handle and `out` writable.
enum OrbikitStatus orbikit_diamond_get(const struct OrbikitDiamond *d,
                                       int64_t p_num,
                                       int64_t p_den,
                                       int64_t q_num,
                                       int64_t q_den,
                                       uint64_t *out);

// Writes the `2n + 1` column sums (index `-n` first).
//
// # Safety
// `d` must be a live handle and `buf` must hold `len` values.
enum OrbikitStatus orbikit_diamond_columns(const struct OrbikitDiamond *d,
                                           uint64_t *buf,
                                           uintptr_t len);

// # Safety
// `d` must be a live handle; `serre` and `hodge` must be writable.
enum OrbikitStatus orbikit_diamond_check_symmetries(const struct OrbikitDiamond *d,
                                                    bool *serre,
                                                    bool *hodge);

// # Safety
// `a` and `b` must be live handles and `verdict` writable.
enum OrbikitStatus orbikit_check_partners(const struct OrbikitDiamond *a,
                                          const struct OrbikitDiamond *b,
                                          bool strict_dim3,
                                          enum OrbikitVerdict *verdict);

// Solves for the Gorenstein diamond of dimension `n <= 3` from its `2n + 1`
// column sums (index `-n` first). `h01` is used only when `has_h01` is true.
//
// # Safety
// `cols` must hold `len` values and `out` must be writable.
enum OrbikitStatus orbikit_reconstruct_gorenstein(uint32_t n,
                                                  const uint64_t *cols,
                                                  uintptr_t len,
                                                  uint64_t h01,
                                                  bool has_h01,
                                                  struct OrbikitDiamond **out);

// `h^{n,0}` from `2n + 1` column sums.
//
// # Safety
// `cols` must hold `len` values and `out` must be writable.
enum OrbikitStatus orbikit_extract_hn0(uint32_t n,
                                       const uint64_t *cols,
                                       uintptr_t len,
                                       uint64_t *out);

// `h^{n-1,0}` from `2n + 1` column sums; fails with `Parity` on odd input.
//
// # Safety
// `cols` must hold `len` values and `out` must be writable.
enum OrbikitStatus orbikit_extract_hn10(uint32_t n,
                                        const uint64_t *cols,
                                        uintptr_t len,
                                        uint64_t *out);

// # Safety
// `orb` and `resolution` must be live handles and `equal` writable.
enum OrbikitStatus orbikit_mckay_compare(const struct OrbikitDiamond *orb,
                                         const struct OrbikitDiamond *resolution,
                                         bool *equal);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBIKIT_H */
