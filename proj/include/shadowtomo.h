/* Copyright 2026 The shadowtomo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API for the shadowtomo library: classical shadow estimation with
 * generalised measurements, shadow-norm evaluation, outcome simulation, and
 * simulated-annealing optimization of measurements.
 *
 * Conventions:
 *   - Objects are opaque handles created by sht_*_create/compute functions
 *     and released with the matching sht_*_free. Handles are immutable and
 *     may be shared across threads.
 *   - Functions return SHT_OK (0) on success. On failure they return a
 *     nonzero status; sht_last_error_message() gives a human-readable detail
 *     for the last failure on the calling thread.
 *   - Matrices pass through the API as row-major real/imaginary arrays.
 *   - Strings returned through char** are heap-allocated; release them with
 *     sht_string_free.
 */

#ifndef SHADOWTOMO_H
#define SHADOWTOMO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SHT_API __declspec(dllexport)
#else
#define SHT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sht_status {
    SHT_OK = 0,
    SHT_ERROR_DIMENSION = 1,
    SHT_ERROR_NOT_HERMITIAN = 2,
    SHT_ERROR_SIZE_LIMIT = 3,
    SHT_ERROR_POSITIVITY = 4,
    SHT_ERROR_NORMALIZATION = 5,
    SHT_ERROR_UNKNOWN_SOLID = 6,
    SHT_ERROR_NON_UNITARY = 7,
    SHT_ERROR_RANGE = 8,
    SHT_ERROR_APPROXIMATION = 9,
    SHT_ERROR_NOT_UNIFORM = 10,
    SHT_ERROR_DEGENERATE = 11,
    SHT_ERROR_NOT_INFORMATIONALLY_COMPLETE = 12,
    SHT_ERROR_NOT_RIGIDLY_SYMMETRIC = 13,
    SHT_ERROR_SINGULAR_H = 14,
    SHT_ERROR_INVALID_STATE = 15,
    SHT_ERROR_EMPTY_DATA = 16,
    SHT_ERROR_NOT_FACTORIZED = 17,
    SHT_ERROR_CONFIG = 18,
    SHT_ERROR_PARSE = 19,
    SHT_ERROR_IO = 20,
    SHT_ERROR_USAGE = 21,
    SHT_ERROR_INVALID_ARGUMENT = 22,
    SHT_ERROR_INTERNAL = 23
} sht_status;

/* Stable identifier for a status, e.g. "NormalizationError". */
SHT_API const char *sht_status_name(sht_status status);

/* Detail for the most recent failure on this thread; empty string if none. */
SHT_API const char *sht_last_error_message(void);

SHT_API const char *sht_version(void);

SHT_API void sht_string_free(char *text);

/* ---- Hermitian operators ---------------------------------------------- */

typedef struct sht_operator sht_operator;

/* Row-major dim x dim entries; im may be NULL for a real matrix. The input
 * is symmetrized; deviations from Hermiticity beyond 1e-9 are rejected. */
SHT_API sht_status sht_operator_create(int32_t dim, const double *re, const double *im,
                                       sht_operator **out);
SHT_API sht_status sht_operator_from_json(const char *json, sht_operator **out);
SHT_API sht_status sht_operator_to_json(const sht_operator *op, char **json_out);
SHT_API void sht_operator_free(sht_operator *op);

SHT_API int32_t sht_operator_dim(const sht_operator *op);
/* Copies entries into caller arrays of dim*dim; either may be NULL. */
SHT_API sht_status sht_operator_entries(const sht_operator *op, double *re, double *im);
SHT_API sht_status sht_operator_trace(const sht_operator *op, double *out);
SHT_API sht_status sht_operator_max_eigenvalue(const sht_operator *op, double *out);
/* Qubit only: bloch_out = (x0, rx, ry, rz) with x_i = tr(X sigma_i). */
SHT_API sht_status sht_operator_to_bloch(const sht_operator *op, double bloch_out[4]);
SHT_API sht_status sht_operator_from_bloch(const double bloch[4], sht_operator **out);
SHT_API sht_status sht_operator_tensor(const sht_operator *a, const sht_operator *b,
                                       sht_operator **out);
/* sigma_0 = identity, then sigma_x, sigma_y, sigma_z. */
SHT_API sht_status sht_pauli(int32_t index, sht_operator **out);
/* Rank-1 projector onto a Haar-random pure state; deterministic per seed. */
SHT_API sht_status sht_haar_random_projection(uint64_t seed, int32_t dim, sht_operator **out);

/* ---- Generalised measurements ------------------------------------------ */

typedef struct sht_povm sht_povm;

/* Validates positivity of every effect and normalization of their sum. */
SHT_API sht_status sht_povm_create(const sht_operator *const *effects, size_t count,
                                   sht_povm **out);
SHT_API sht_status sht_povm_from_json(const char *json, sht_povm **out);
SHT_API sht_status sht_povm_to_json(const sht_povm *povm, char **json_out);
/* Named measurements: octahedron, tetrahedron, cube, cuboctahedron,
 * icosahedron, dodecahedron, icosidodecahedron, sic, inverted-tetrahedron. */
SHT_API sht_status sht_povm_builtin(const char *name, sht_povm **out);
SHT_API void sht_povm_free(sht_povm *povm);

SHT_API int32_t sht_povm_dim(const sht_povm *povm);
SHT_API size_t sht_povm_outcomes(const sht_povm *povm);
SHT_API sht_status sht_povm_effect(const sht_povm *povm, size_t index, sht_operator **out);
/* 1 when the effects span the full operator space, else 0. */
SHT_API int32_t sht_povm_is_informationally_complete(const sht_povm *povm);

SHT_API sht_status sht_povm_inverted(const sht_povm *povm, sht_povm **out);
/* E_k -> (1-p) tr(E_k) 1/D + p E_k for p in [0, 1]. */
SHT_API sht_status sht_povm_depolarize(const sht_povm *povm, double p, sht_povm **out);
/* Splits effects into identical copies so all traces agree; the traces must
 * be rationals with a common denominator at most denominator_cap. */
SHT_API sht_status sht_povm_uniform_trace_split(const sht_povm *povm, uint64_t denominator_cap,
                                                sht_povm **out);
/* count unitaries packed row-major (each dim*dim); effects are
 * (1/count) U^dagger |b><b| U over all U and basis states b. */
SHT_API sht_status sht_povm_from_unitary_ensemble(int32_t dim, size_t count, const double *re,
                                                  const double *im, int32_t merge_duplicates,
                                                  sht_povm **out);
/* Joint measurement of the given sites (small systems only). */
SHT_API sht_status sht_povm_tensor(const sht_povm *const *sites, size_t count, sht_povm **out);
/* Trace moments and the closed-form shadow coefficients of a uniform
 * measurement: rho_k = a E_k + b 1. Any output pointer may be NULL. */
SHT_API sht_status sht_povm_symmetry_coefficients(const sht_povm *povm, double *alpha,
                                                  double *beta, double *gamma, double *a,
                                                  double *b);

/* ---- Classical shadows -------------------------------------------------- */

typedef struct sht_shadows sht_shadows;

typedef enum sht_shadow_method {
    SHT_SHADOW_GENERAL = 0,   /* direct frame inversion */
    SHT_SHADOW_SYMMETRIC = 1, /* a E_k + b 1, verified against inversion */
    SHT_SHADOW_BLOCH = 2      /* qubit H-matrix formula, uniform weights */
} sht_shadow_method;

SHT_API sht_status sht_shadows_compute(const sht_povm *povm, sht_shadow_method method,
                                       sht_shadows **out);
SHT_API void sht_shadows_free(sht_shadows *shadows);
SHT_API size_t sht_shadows_count(const sht_shadows *shadows);
SHT_API sht_status sht_shadows_get(const sht_shadows *shadows, size_t index, sht_operator **out);
/* (a, b) when the set came from the symmetric method. */
SHT_API sht_status sht_shadows_symmetric_ab(const sht_shadows *shadows, double *a, double *b);

/* Least-square state estimate for an outcome distribution (length = outcome
 * count). Linear; exact statistics reproduce the state exactly. */
SHT_API sht_status sht_least_squares_estimate(const sht_povm *povm, const double *distribution,
                                              size_t count, sht_operator **out);
/* h_out: the 3x3 second-moment matrix H, row-major. columns_out (optional):
 * 4 entries per outcome, each column (1, H^{-1} r_k). */
SHT_API sht_status sht_bloch_least_squares(const sht_povm *povm, double h_out[9],
                                           double *columns_out);

/* ---- Shadow norms -------------------------------------------------------- */

/* Worst-case squared shadow norm of x; worst_state_out (optional) receives
 * the maximizing density operator. */
SHT_API sht_status sht_squared_shadow_norm(const sht_povm *povm, const sht_operator *x,
                                           double *norm_out, sht_operator **worst_state_out);
SHT_API sht_status sht_estimator_variance(const sht_povm *povm, const sht_operator *x,
                                          const sht_operator *rho, double *out);
/* Haar-average comparison figure; x must be traceless with tr(x^2) = 1. */
SHT_API sht_status sht_average_squared_norm(const sht_povm *povm, const sht_operator *x,
                                            double *out);
/* Product of per-site squared norms of a factorized observable. */
SHT_API sht_status sht_factorized_squared_norm(const sht_povm *const *povms,
                                               const sht_operator *const *factors, size_t count,
                                               double *out);
/* (9 + tr H^{-1})/12 >= 3/2 for uniform-trace qubit measurements. */
SHT_API sht_status sht_octahedron_bound(const sht_povm *povm, double *out);
/* Max squared norm over ~resolution^2 projection directions (resolution >= 8;
 * smaller values are clamped). */
SHT_API sht_status sht_max_projection_norm_grid(const sht_povm *povm, int32_t resolution,
                                                double *out);

/* ---- Outcome simulation and estimation ---------------------------------- */

/* Independent per-site sampling of a product state: outcomes_out receives
 * shots * sites indices, site-major within each shot. Deterministic per
 * (seed, shot, site). */
SHT_API sht_status sht_sample_outcomes(const sht_povm *const *povms,
                                       const sht_operator *const *states, size_t sites,
                                       uint64_t shots, uint64_t seed, uint32_t *outcomes_out);
/* Product over sites of tr(shadow[outcome_s] x_s). */
SHT_API sht_status sht_single_shot_estimate(const sht_shadows *const *shadow_sets,
                                            const uint32_t *outcomes,
                                            const sht_operator *const *factors, size_t sites,
                                            double *out);
/* Plain mean (median_groups <= 1) or median of consecutive group means. */
SHT_API sht_status sht_estimate_mean(const double *estimates, size_t count,
                                     uint32_t median_groups, double *out);
/* Sample + estimate + aggregate; variance_out (optional) receives the
 * empirical variance of the single-shot estimates. */
SHT_API sht_status sht_simulate_estimate(const sht_povm *const *povms,
                                         const sht_operator *const *states,
                                         const sht_operator *const *factors, size_t sites,
                                         uint64_t shots, uint32_t median_groups, uint64_t seed,
                                         double *estimate_out, double *variance_out);

/* ---- Measurement optimization ------------------------------------------- */

typedef struct sht_anneal_config {
    uint32_t outcomes;          /* >= 4 */
    uint64_t iterations;        /* per restart */
    double initial_temperature; /* 0 = auto */
    double cooling_ratio;       /* in (0.9, 1) */
    double move_scale;
    uint32_t restarts; /* >= 1 */
    uint64_t seed;
} sht_anneal_config;

/* Fills in the defaults: 6 outcomes, 20000 iterations, auto temperature,
 * ratio 0.995, move scale 0.1, 8 restarts, seed 0. */
SHT_API void sht_anneal_config_init(sht_anneal_config *config);

typedef struct sht_anneal_result sht_anneal_result;

/* max_i squared shadow norm of the targets. */
SHT_API sht_status sht_objective(const sht_povm *povm, const sht_operator *const *observables,
                                 size_t count, double *out);
SHT_API sht_status sht_anneal_single_qubit(const sht_operator *const *observables, size_t count,
                                           const sht_anneal_config *config,
                                           sht_anneal_result **out);
/* factors holds count * sites qubit operators, observable-major: the factor
 * of observable i on site s is factors[i * sites + s]. */
SHT_API sht_status sht_anneal_factorized(size_t sites, const sht_operator *const *factors,
                                         size_t count, const sht_anneal_config *config,
                                         sht_anneal_result **out);
SHT_API void sht_anneal_result_free(sht_anneal_result *result);

SHT_API double sht_anneal_result_best_objective(const sht_anneal_result *result);
SHT_API sht_status sht_anneal_result_best_povm(const sht_anneal_result *result, sht_povm **out);
SHT_API int32_t sht_anneal_result_degenerate_targets(const sht_anneal_result *result);
/* Running-best trace of the winning restart. */
SHT_API size_t sht_anneal_result_trace_count(const sht_anneal_result *result);
SHT_API sht_status sht_anneal_result_trace(const sht_anneal_result *result,
                                           uint64_t *iterations_out, double *objectives_out);
SHT_API size_t sht_anneal_result_restart_count(const sht_anneal_result *result);
/* Per-restart best value and (optionally) measurement. */
SHT_API sht_status sht_anneal_result_restart(const sht_anneal_result *result, size_t index,
                                             double *objective_out, sht_povm **povm_out);

#ifdef __cplusplus
}
#endif

#endif /* SHADOWTOMO_H */
