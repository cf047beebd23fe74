#ifndef INVCAYLEY_H
#define INVCAYLEY_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum IcGenusClass {
  IC_GENUS_CLASS_PLANAR = 0,
  IC_GENUS_CLASS_TOROIDAL = 1,
  IC_GENUS_CLASS_HIGHER = 2,
} IcGenusClass;

typedef enum IcStatus {
  IC_STATUS_OK = 0,
  IC_STATUS_NULL_POINTER = 1,
  IC_STATUS_INVALID_UTF8 = 2,
  IC_STATUS_PARSE_ERROR = 3,
  IC_STATUS_RING_ERROR = 4,
  IC_STATUS_NO_CONSTRUCTION = 5,
  /**
   * The search ran out of budget; the JSON output carries bounds.
   */
  IC_STATUS_INDETERMINATE = 6,
  IC_STATUS_INVALID_ARGUMENT = 7,
  IC_STATUS_PANIC = 8,
} IcStatus;

/**
 * A ring together with its involutory Cayley graph.
 */
typedef struct IcRing IcRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread; empty after a
 * success. Owned by the library and valid until the next call.
 */
const char *ic_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ic_version(void);

/**
 * Parses a ring spec such as `"Z9 x Z4"` and builds the ring and its graph.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum IcStatus ic_ring_parse(const char *spec, struct IcRing **out);

/**
 * # Safety
 * `ring` must come from `ic_ring_parse` and not be freed twice. Null is a no-op.
 */
void ic_ring_free(struct IcRing *ring);

/**
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_order(const struct IcRing *ring, size_t *out);

/**
 * Degree of the (regular) graph.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_degree(const struct IcRing *ring, size_t *out);

/**
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_is_connected(const struct IcRing *ring, bool *out);

/**
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_genus_class(const struct IcRing *ring, enum IcGenusClass *out);

/**
 * Canonical spelling of the ring spec.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_spec(const struct IcRing *ring, char **out);

/**
 * Invariants and genus verdict as JSON.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_analyze_json(const struct IcRing *ring, char **out);

/**
 * Genus certificate as JSON. Returns `Indeterminate` (with the bounds
 * written to `out`) when the budget runs out.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_genus_json(const struct IcRing *ring, uint64_t budget, char **out);

/**
 * Explicit genus-1 embedding as JSON, or `NoConstruction`.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_embed_json(const struct IcRing *ring, char **out);

/**
 * The graph in DOT, vertices labelled by ring elements.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum IcStatus ic_ring_export_dot(const struct IcRing *ring, char **out);

/**
 * Theorem suite report as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum IcStatus ic_verify_json(size_t max_order, uint64_t budget, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ic_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INVCAYLEY_H */
