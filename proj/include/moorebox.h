/* moorebox - exact cubical homological algebra over finitely generated
 * abelian groups: normalization complexes, projective precubical
 * resolutions, cubical derived functors, and finite cubical homotopy.
 *
 * All functions return MBX_OK on success. On failure they return a status
 * code and leave a message retrievable with mbx_last_error() (thread
 * local). Out-parameters are written only on success. Handles are opaque
 * and freed with the matching *_free function; strings returned through
 * char** are freed with mbx_string_free.
 */
#ifndef MOOREBOX_H
#define MOOREBOX_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbx_status {
    MBX_OK = 0,
    MBX_ERROR_INVALID_ARGUMENT = 1, /* mathematical precondition violated */
    MBX_ERROR_PARSE = 2,            /* malformed input */
    MBX_ERROR_INTERNAL = 3
} mbx_status;

/* finitely generated abelian group */
typedef struct mbx_group mbx_group;
/* any typed value: chain complex, cubical object, finite cubical set or
 * group, poset, hom, ... (JSON-backed, dispatched on its "kind") */
typedef struct mbx_object mbx_object;
/* outcome of a verification or computation, serializable to JSON */
typedef struct mbx_report mbx_report;

const char* mbx_version(void);
const char* mbx_last_error(void);
void mbx_string_free(char* s);

/* ---- groups ------------------------------------------------------- */

/* Shorthand ("0", "Z", "Z^2 + Z/4") or JSON ({"generators":..,
 * "relations":[[..]..]} / {"free_rank":..,"torsion":[..]}). */
mbx_status mbx_group_parse(const char* text, mbx_group** out);
mbx_status mbx_group_to_json(const mbx_group* g, char** out_json);
mbx_status mbx_group_canonical_name(const mbx_group* g, char** out);
void mbx_group_free(mbx_group* g);

/* ---- typed objects ------------------------------------------------ */

/* kind may be NULL to use the object's "kind" field. */
mbx_status mbx_object_parse(const char* json_text, const char* kind, mbx_object** out);
mbx_status mbx_object_to_json(const mbx_object* o, char** out_json);
void mbx_object_free(mbx_object* o);

/* ---- reports ------------------------------------------------------ */

int mbx_report_passed(const mbx_report* r);
mbx_status mbx_report_to_json(const mbx_report* r, char** out_json);
void mbx_report_free(mbx_report* r);

/* ---- operations ---------------------------------------------------- */

/* Validates any typed object against the identities of its declared
 * structure level. */
mbx_status mbx_verify(const mbx_object* o, mbx_report** out);

/* Normalization complex (variant "N", "M", "C" or "F") of a cubical
 * object, with homology in every degree (top degree flagged uncertified). */
mbx_status mbx_homology(const mbx_object* cubical_object, const char* variant, mbx_report** out);

/* Projective precubical resolution of a with synthesized
 * pseudodegeneracies and pseudoconnections; the report carries the full
 * resolution JSON and its validation. */
mbx_status mbx_resolve(const mbx_group* a, int dim_bound, mbx_report** out);

/* Cubical derived functors of an additive functor ("identity",
 * "tensor:<group>", "hom:<group>") via variant "N", "M" or "C". */
mbx_status mbx_derive(const mbx_group* a, const char* functor, const char* variant, int dim_bound,
                      mbx_report** out);

/* Classical Tor_n(a, b) from the canonical two-term free resolution. */
mbx_status mbx_tor(const mbx_group* a, const mbx_group* b, int degree, mbx_group** out);

/* Cubical derived functors of -⊗b against the classical oracle. */
mbx_status mbx_compare_classical(const mbx_group* a, const mbx_group* b, int dim_bound,
                                 mbx_report** out);

/* Kan condition for a finite cubical set or group, all open boxes
 * enumerated up to the given degree. */
mbx_status mbx_kan_check(const mbx_object* set_or_group, int up_to, mbx_report** out);

/* Homotopy group of a pointed finite cubical set or group (Kan up to
 * degree+1 is checked first). */
mbx_status mbx_homotopy_group(const mbx_object* set_or_group, int degree, mbx_report** out);

/* Cubical set of monotone maps from Boolean cubes into a finite poset. */
mbx_status mbx_poset_cubical_set(const char* poset_json, int dim_bound, mbx_object** out);

/* Degreewise coeff-span of a finite cubical set: as a cubical object over
 * f.g. abelian groups, or as a finite cubical group (finite coeff only). */
mbx_status mbx_linearize(const mbx_object* set, const mbx_group* coeff, mbx_object** out);
mbx_status mbx_linearize_group(const mbx_object* set, const mbx_group* coeff, mbx_object** out);

/* The acceptance battery; one entry per criterion, deterministic in the
 * seed. */
mbx_status mbx_suite(uint64_t seed, mbx_report** out);

#ifdef __cplusplus
}
#endif

#endif /* MOOREBOX_H */
