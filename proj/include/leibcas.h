/*
 * C API for the leibcas library: exact computer algebra for right Leibniz
 * algebras (structure-constant analyses, derivation solvers, free Leibniz and
 * dialgebra normal forms, stable-letter extension presentations with a
 * degree-truncated quotient engine, and equation solving over finite fields).
 *
 * All functions are thread-compatible: distinct sessions may be used from
 * distinct threads without locking. A session stores run options and the last
 * error message; handles are opaque and must be released with the matching
 * free function. Report strings are UTF-8, owned by the caller, released with
 * lbz_string_free.
 */
#ifndef LEIBCAS_H
#define LEIBCAS_H

#include <stddef.h>

#if defined(_WIN32)
#define LBZ_API __declspec(dllexport)
#else
#define LBZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lbz_status {
  LBZ_OK = 0,
  LBZ_USAGE_ERROR = 1,  /* malformed input, bad options, precondition broken */
  LBZ_MATH_REJECT = 2   /* well-formed request refused for mathematical
                           reasons; details in the report or last error */
} lbz_status;

typedef struct lbz_session lbz_session;
typedef struct lbz_algebra lbz_algebra;

/* options_json (all keys optional):
 *   {"degree": 4, "field": "Q" | "gfp:5", "budget": 1000000,
 *    "format": "json" | "text", "seed": 42, "force": false, "samples": 100}
 * NULL or "" means defaults. */
LBZ_API lbz_status lbz_session_new(const char* options_json, lbz_session** out);
LBZ_API void lbz_session_free(lbz_session* session);

/* Message for the most recent failure on this session; empty string when the
 * last call succeeded. Owned by the session. */
LBZ_API const char* lbz_session_last_error(const lbz_session* session);

/* Algebra schema:
 *   {"dim": n, "field": "Q" | {"gfp": p},
 *    "brackets": [{"left": i, "right": j, "out": [{"k": k, "c": "num/den"}]}]}
 * The session's field override, when set, reinterprets the constants. */
LBZ_API lbz_status lbz_algebra_from_json(lbz_session* session,
                                         const char* algebra_json,
                                         lbz_algebra** out);
LBZ_API void lbz_algebra_free(lbz_algebra* algebra);
LBZ_API int lbz_algebra_dim(const lbz_algebra* algebra);

/* Commands. Each writes a report (format per session options) to *out_report
 * on LBZ_OK and LBZ_MATH_REJECT; *out_report is NULL on LBZ_USAGE_ERROR. */

/* Defining-identity check over all basis triples, plus seeded random spot
 * checks. LBZ_MATH_REJECT when the identity fails. */
LBZ_API lbz_status lbz_cmd_verify(lbz_session* session, const lbz_algebra* algebra,
                                  char** out_report);

/* Derived series, solvability, simplicity; request_json may be NULL or
 * {"subspaces": [[...vectors...], ...]} to add centralizer/normalizer
 * sections. */
LBZ_API lbz_status lbz_cmd_analyze(lbz_session* session, const lbz_algebra* algebra,
                                   const char* request_json, char** out_report);

/* kind: "derivation" | "anti" | "bider". */
LBZ_API lbz_status lbz_cmd_derivations(lbz_session* session,
                                       const lbz_algebra* algebra,
                                       const char* kind, char** out_report);

/* Stable-letter extension and the truncated-quotient independence check.
 * request_json: {"subalgebra": [[...]...], "images": [[...]...],
 *                "kind": "derivation" | "anti", "degree"?: N}
 * LBZ_MATH_REJECT on a collapse verdict. */
LBZ_API lbz_status lbz_cmd_hnn(lbz_session* session, const lbz_algebra* algebra,
                               const char* request_json, char** out_report);

/* request_json:
 *   {"mode": "solve", "system": {...}}
 *   {"mode": "check", "system": {...}, "assignment": {"x": [...], ...}}
 *   {"mode": "witness", "a": [...], "b": [...], "side": "left" | "right"}
 * System schema: {"vars": [...], "eqs": [term...], "neqs": [term...]} with
 * terms ["br",t1,t2] | ["add",...] | ["smul","c",t] | ["var","x"]
 * | ["const",[coords]]. */
LBZ_API lbz_status lbz_cmd_solve(lbz_session* session, const lbz_algebra* algebra,
                                 const char* request_json, char** out_report);

/* Normal form of a free Leibniz or free dialgebra expression, e.g.
 * "[x1,[x2,x3]]" or "x1 |- x2 -| x3". dialgebra != 0 forces dialgebra mode. */
LBZ_API lbz_status lbz_cmd_free_expr(lbz_session* session, const char* expr,
                                     int dialgebra, char** out_report);

LBZ_API void lbz_string_free(char* s);
LBZ_API const char* lbz_version(void);

#ifdef __cplusplus
}
#endif

#endif /* LEIBCAS_H */
