/* modrep - exact invariants of SL(2,p) modular curves: character tables,
 * representation-ring decompositions, orbifold Picard lattices, triangle
 * group unitary moduli, and symbolic identity checks.
 *
 * C API: opaque handles, integer status codes, JSON string results.
 * Strings returned through out-parameters are heap-allocated; release them
 * with mr_string_free.  All functions are thread-safe for concurrent reads
 * of distinct handles.
 */
#ifndef MODREP_H
#define MODREP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int mr_status;

#define MR_OK 0
#define MR_EUSAGE (-1)    /* invalid arguments, labels, or domain preconditions */
#define MR_EMISMATCH (-2) /* mathematical mismatch (census or golden failure) */
#define MR_ENOMEM (-3)
#define MR_EINTERNAL (-4)

#define MR_GROUP_SL2 0
#define MR_GROUP_PSL2 1

typedef struct mr_table mr_table;

const char* mr_version(void);
const char* mr_status_message(mr_status s);
/* detail for the most recent failure on this thread ("" if none) */
const char* mr_last_error(void);

void mr_string_free(char* s);

/* ---- character tables --------------------------------------------------- */
mr_status mr_table_create(long p, int group_kind, mr_table** out);
void mr_table_free(mr_table* t);
mr_status mr_table_json(const mr_table* t, char** out_json);
mr_status mr_table_tsv(const mr_table* t, char** out_tsv);
/* exact row/column orthogonality report */
mr_status mr_table_verify_json(const mr_table* t, char** out_json);
/* order of the Schur multiplier of PSL(2,p), p >= 5 */
mr_status mr_schur_constant(long p, long* out);

/* ---- representation ring ------------------------------------------------ */
mr_status mr_tensor_json(const mr_table* t, const char* a, const char* b, char** out_json);
mr_status mr_sympow_json(const mr_table* t, const char* label, long n, int exterior,
                         char** out_json);
mr_status mr_molien_json(const mr_table* t, const char* target, const char* source, long N,
                         char** out_json);

/* ---- orbifold Picard groups and section decompositions ------------------- */
mr_status mr_picard_json(const long* signature, size_t len, char** out_json);
/* exponents may be NULL/0; when given, the result carries a
 * "decompositions" object keyed by exponent with section labels */
mr_status mr_modular_json(long p, const long* exponents, size_t n_exponents, char** out_json);
mr_status mr_sections_json(long p, long a, char** out_json);

/* ---- flat unitary moduli -------------------------------------------------*/
mr_status mr_su2_census_json(long p, char** out_json);
mr_status mr_exponents_json(long p, char** out_json);
mr_status mr_su3_json(long p, char** out_json);
mr_status mr_solve_json(long p, long k, int rank, unsigned seed, char** out_json);

/* ---- symbolic identity checks --------------------------------------------*/
mr_status mr_verify_identities_json(char** out_json);

/* ---- golden reference tables ---------------------------------------------*/
/* regenerates the bundled reference tables and diffs them cell by cell;
 * returns MR_EMISMATCH when any undocumented cell disagrees */
mr_status mr_reproduce_json(const char* fixture_dir, long N, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MODREP_H */
