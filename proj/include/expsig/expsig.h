/*
Copyright 2026 The expsig Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/*
 * expsig C API.
 *
 * Expected signature of planar Brownian motion stopped on the unit circle:
 * exact PDE hierarchy, hyperbolic development, ball-arithmetic Bessel closed
 * form, certified pole localization and a Monte Carlo cross-check.
 *
 * Conventions:
 *  - every fallible call returns expsig_status; EXPSIG_OK is 0;
 *  - on failure, expsig_last_error() returns a message for the calling thread;
 *  - strings returned through char** are owned by the caller and must be
 *    released with expsig_free();
 *  - rationals cross the boundary as "num/den" (decimals such as "2.82" are
 *    accepted on input and converted exactly).
 */

#ifndef EXPSIG_EXPSIG_H
#define EXPSIG_EXPSIG_H

#include <stdint.h>

#if defined(EXPSIG_BUILDING_LIBRARY)
#define EXPSIG_API __attribute__((visibility("default")))
#else
#define EXPSIG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum expsig_status {
  EXPSIG_OK = 0,
  EXPSIG_ERR_INVALID_ARGUMENT = 1,
  EXPSIG_ERR_CAP_EXCEEDED = 2,
  EXPSIG_ERR_DOMAIN = 3,
  EXPSIG_ERR_POLE_PROXIMITY = 4,
  EXPSIG_ERR_INCONCLUSIVE = 5,
  EXPSIG_ERR_PRECISION_CEILING = 6,
  EXPSIG_ERR_CANNOT_CERTIFY = 7,
  EXPSIG_ERR_INSUFFICIENT_DATA = 8,
  EXPSIG_ERR_CHECK_FAILED = 9,
  EXPSIG_ERR_IO = 10,
  EXPSIG_ERR_INTERNAL = 11
} expsig_status;

typedef enum expsig_mode { EXPSIG_MODE_TENSOR = 0, EXPSIG_MODE_DEVELOPED = 1 } expsig_mode;

/* Level caps enforced by the API. */
#define EXPSIG_TENSOR_LEVEL_CAP 16
#define EXPSIG_DEVELOPED_LEVEL_CAP 200

EXPSIG_API const char* expsig_version(void);
EXPSIG_API const char* expsig_status_name(expsig_status s);
EXPSIG_API const char* expsig_last_error(void);
EXPSIG_API void expsig_free(char* p);

/* ---- Exact hierarchy -------------------------------------------------- */

/* Opaque, memoizing solver state. Not safe for concurrent mutation. */
typedef struct expsig_hierarchy expsig_hierarchy;

EXPSIG_API expsig_status expsig_hierarchy_create(expsig_hierarchy** out);
EXPSIG_API void expsig_hierarchy_destroy(expsig_hierarchy* h);

/* Computes levels 0..n of the given hierarchy. */
EXPSIG_API expsig_status expsig_hierarchy_extend(expsig_hierarchy* h, expsig_mode mode, int n);

/* a_n = third component of V_n(0), as "num/den". */
EXPSIG_API expsig_status expsig_hierarchy_coefficient(expsig_hierarchy* h, int n, char** out);

/* Level report JSON (schema "expsig.hierarchy/1"): per level
 * {"n", "a_n", "l1", "l2sq"} plus the exactness checks. Returns
 * EXPSIG_ERR_CHECK_FAILED (with *out_json still filled) when a check fails. */
EXPSIG_API expsig_status expsig_hierarchy_report(expsig_hierarchy* h, expsig_mode mode, int levels,
                                                 int dump_polys, char** out_json);

/* Partial sums of F_lambda(z) for N = 0..levels at rational lambda and z,
 * exact, as JSON (schema "expsig.develop/1"). */
EXPSIG_API expsig_status expsig_develop(expsig_hierarchy* h, const char* lambda, const char* x, const char* y,
                                        int levels, char** out_json);

/* Ratio estimates sqrt(a_2k / a_2k+2) over a_0..a_levels as CSV
 * (k,lambda_hat). EXPSIG_ERR_INSUFFICIENT_DATA when levels < 4. */
EXPSIG_API expsig_status expsig_radius(expsig_hierarchy* h, int levels, char** out_csv);

/* ---- Ball arithmetic and the closed form ------------------------------ */

/* J_nu(re + i im) in ball arithmetic, JSON (schema "expsig.bessel/1"). */
EXPSIG_API expsig_status expsig_bessel_j(int nu, const char* re, const char* im, long precision, char** out_json);

/* Constants, conj(alpha) J0(l zeta) J1(l conj zeta), d(l), the C(0)
 * numerator and, if d excludes 0, C_l(r) and A_l(r); JSON
 * (schema "expsig.closed-form/1"). r may be NULL (defaults to 0). */
EXPSIG_API expsig_status expsig_closed_form(const char* lambda, const char* r, long precision, char** out_json);

/* ---- Pole certificate -------------------------------------------------- */

/* Certified bracket of the sign change of d in (5/2, 3) with width <= width,
 * as certificate JSON (schema "expsig.pole-certificate/1"). */
EXPSIG_API expsig_status expsig_pole_locate(const char* width, long precision, char** out_json);

/* Offline re-check of certificate JSON from its stored balls only. */
EXPSIG_API expsig_status expsig_pole_verify(const char* certificate_json);

/* Partial sums sum_{n<=k} lambda^n a_n for k = 0..levels against the closed
 * form C_lambda(0), CSV. Refuses lambda at or above the certified bracket
 * (EXPSIG_ERR_POLE_PROXIMITY). */
EXPSIG_API expsig_status expsig_compare(expsig_hierarchy* h, const char* lambda, int levels, long precision,
                                        char** out_csv);

/* ---- Monte Carlo -------------------------------------------------------- */

typedef struct expsig_mc_config {
  double x0;
  double y0;
  double h;
  int level;
  long paths;
  uint64_t seed;
  int bridge_correction;
  unsigned threads; /* 0 = hardware concurrency; results do not depend on it */
} expsig_mc_config;

EXPSIG_API void expsig_mc_config_init(expsig_mc_config* cfg);

/* CSV: "# {config json}" header line, then word,mean,stderr per component of
 * levels 1..level, then a final "tau" row for the exit time. */
EXPSIG_API expsig_status expsig_mc_run(const expsig_mc_config* cfg, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* EXPSIG_EXPSIG_H */
