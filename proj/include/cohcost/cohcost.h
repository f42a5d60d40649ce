// Copyright 2026 The cohcost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef COHCOST_COHCOST_H
#define COHCOST_COHCOST_H

/*
 * C interface to libcohcost.
 *
 * Every fallible call returns a cc_status. On failure the message is available
 * from cc_last_error() until the next failing call on the same thread.
 * Objects are opaque handles released with the matching *_free function
 * (passing NULL is a no-op). Strings returned through char** are allocated by
 * the library and released with cc_string_free.
 *
 * Matrices are passed as row-major arrays of dim*dim doubles for the real and
 * imaginary parts; the imaginary array may be NULL. Tensor products are
 * S-major: (X (x) Y)[i*dE + k, j*dE + l] = X[i,j] Y[k,l].
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#ifdef COHCOST_BUILDING
#define COHCOST_API __declspec(dllexport)
#else
#define COHCOST_API __declspec(dllimport)
#endif
#else
#define COHCOST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
    CC_OK = 0,
    CC_ERR_INVALID_ARGUMENT = 1,
    CC_ERR_VALIDATION = 2,
    CC_ERR_DIMENSION_MISMATCH = 3,
    CC_ERR_OUT_OF_REGIME = 4,
    CC_ERR_SINGULAR_METRIC = 5,
    CC_ERR_CONDITION_NOT_MET = 6,
    CC_ERR_INVARIANT_VIOLATION = 7,
    CC_ERR_NUMERICAL = 8,
    CC_ERR_PARSE = 9,
    CC_ERR_IO = 10,
    CC_ERR_INTERNAL = 11
} cc_status;

typedef struct cc_operator cc_operator;         /* Hermitian operator */
typedef struct cc_state cc_state;               /* density matrix */
typedef struct cc_function cc_function;         /* standard monotone function */
typedef struct cc_impl cc_impl;                 /* implementation set */
typedef struct cc_construction cc_construction; /* Gaussian-pointer construction spec */

typedef struct cc_verdict {
    double lhs;
    double rhs;
    double slack;
    int holds;
} cc_verdict;

typedef struct cc_run_summary {
    int passed;
    uint64_t checks;
    uint64_t violations;
} cc_run_summary;

COHCOST_API const char *cc_version(void);
COHCOST_API const char *cc_last_error(void);
COHCOST_API const char *cc_status_name(cc_status status);
COHCOST_API void cc_string_free(char *s);

/* operators */
COHCOST_API cc_status cc_operator_create(size_t dim, const double *re, const double *im, cc_operator **out);
COHCOST_API cc_status cc_operator_from_json(const char *json, cc_operator **out);
COHCOST_API cc_status cc_operator_load(const char *path, cc_operator **out);
COHCOST_API cc_status cc_operator_random(size_t dim, uint64_t seed, double scale, cc_operator **out);
COHCOST_API cc_status cc_operator_to_json(const cc_operator *op, char **out);
COHCOST_API size_t cc_operator_dim(const cc_operator *op);
COHCOST_API cc_status cc_operator_op_norm(const cc_operator *op, double *out);
/* ||[A, B]|| */
COHCOST_API cc_status cc_commutator_norm(const cc_operator *a, const cc_operator *b, double *out);
COHCOST_API void cc_operator_free(cc_operator *op);

/* states */
COHCOST_API cc_status cc_state_create(size_t dim, const double *re, const double *im, cc_state **out);
COHCOST_API cc_status cc_state_pure(size_t dim, const double *re, const double *im, cc_state **out);
COHCOST_API cc_status cc_state_from_json(const char *json, cc_state **out);
COHCOST_API cc_status cc_state_load(const char *path, cc_state **out);
COHCOST_API cc_status cc_state_random(size_t dim, uint64_t seed, cc_state **out);
COHCOST_API cc_status cc_state_maximally_mixed(size_t dim, cc_state **out);
COHCOST_API size_t cc_state_dim(const cc_state *state);
/* ascending eigenvalues into values[dim] */
COHCOST_API cc_status cc_state_eigenvalues(const cc_state *state, double *values);
COHCOST_API void cc_state_free(cc_state *state);

/* monotone functions: "sld", "wy", "wyd:<alpha>" */
COHCOST_API cc_status cc_function_lookup(const char *name, cc_function **out);
COHCOST_API const char *cc_function_name(const cc_function *f);
COHCOST_API double cc_function_f0(const cc_function *f);
COHCOST_API cc_status cc_function_eval(const cc_function *f, double x, double *out);
COHCOST_API cc_status cc_function_tilde_eval(const cc_function *f, double x, double *out);
COHCOST_API cc_status cc_m_f(const cc_function *f, double x, double y, double *out);
COHCOST_API cc_status cc_check_cond_y(const cc_function *f, int *out);
COHCOST_API void cc_function_free(cc_function *f);

/* information-geometric measures */
COHCOST_API cc_status cc_variance(const cc_state *rho, const cc_operator *a, double *out);
COHCOST_API cc_status cc_f_variance(const cc_state *rho, const cc_operator *a, const cc_function *f, double *out);
COHCOST_API cc_status cc_skew_information(const cc_state *rho, const cc_operator *a, const cc_function *f, double *out);
COHCOST_API cc_status cc_u_quantity(const cc_state *rho, const cc_operator *a, const cc_function *f, double *out);
COHCOST_API cc_status cc_u_quantity_identity(const cc_state *rho, const cc_operator *a, const cc_function *f,
                                             double *out);
COHCOST_API cc_status cc_fisher_information(const cc_state *rho, const cc_operator *a, const cc_function *f,
                                            double *out);
/* {"v", "vf", "skew", "u", "f_name"} */
COHCOST_API cc_status cc_measures_json(const cc_state *rho, const cc_operator *a, const cc_function *f, char **out);

/* relation is one of "robertson", "lemma1", "type1", "type2", "type3";
 * f is ignored (may be NULL) for "robertson". */
COHCOST_API cc_status cc_relation(const char *relation, const cc_state *rho, const cc_operator *a,
                                  const cc_operator *b, const cc_function *f, cc_verdict *out);

/* implementation sets */
COHCOST_API cc_status cc_impl_from_json(const char *json, cc_impl **out);
COHCOST_API cc_status cc_impl_load(const char *path, cc_impl **out);
COHCOST_API cc_status cc_impl_random(size_t dim_s, size_t dim_e, uint64_t seed, cc_impl **out);
/* Negative control: built without the invariant gate. */
COHCOST_API cc_status cc_impl_random_nonconserving(size_t dim_s, size_t dim_e, uint64_t seed, cc_impl **out);
/* CC_OK when every invariant holds, else CC_ERR_INVARIANT_VIOLATION naming it. */
COHCOST_API cc_status cc_impl_validate(const cc_impl *impl);
COHCOST_API size_t cc_impl_dim_s(const cc_impl *impl);
COHCOST_API size_t cc_impl_dim_e(const cc_impl *impl);
COHCOST_API cc_status cc_impl_error(const cc_impl *impl, const cc_operator *b, const cc_state *rho, double *out);
COHCOST_API cc_status cc_impl_worst_error(const cc_impl *impl, const cc_operator *b, double *out);
COHCOST_API cc_status cc_way_ozawa_bound(const cc_impl *impl, const cc_operator *b, const cc_state *rho,
                                         const cc_function *f, double *out);
COHCOST_API cc_status cc_commutator_transfer(const cc_impl *impl, const cc_operator *b, const cc_state *rho,
                                             double *residual, int *holds);
/* f_names: comma-separated list such as "sld,wy" */
COHCOST_API cc_status cc_error_report_json(const cc_impl *impl, const cc_operator *b, const cc_state *rho,
                                           const char *f_names, char **out);
COHCOST_API void cc_impl_free(cc_impl *impl);

/* Gaussian-pointer construction */
COHCOST_API cc_status cc_construction_qubit(double xi, cc_construction **out);
COHCOST_API cc_status cc_construction_from_json(const char *json, cc_construction **out);
COHCOST_API cc_status cc_construction_load(const char *path, cc_construction **out);
COHCOST_API cc_status cc_construction_with_xi(const cc_construction *spec, double xi, cc_construction **out);
COHCOST_API cc_status cc_construction_norms(const cc_construction *spec, double *norm_comm, double *norm_a);
COHCOST_API cc_status cc_construction_exact_worst_error(const cc_construction *spec, double *out);
COHCOST_API cc_status cc_construction_error_bound(const cc_construction *spec, double *out);
/* worst error of the finite-grid model with spacing unit/m on [-L, L] */
COHCOST_API cc_status cc_construction_grid_worst_error(const cc_construction *spec, int m, double half_extent,
                                                       double *out);
COHCOST_API void cc_construction_free(cc_construction *spec);

/* cost bounds */
COHCOST_API cc_status cc_xi_for_epsilon(double norm_comm, double norm_a, double eps, double *out);
COHCOST_API cc_status cc_cost_lower_sqrt(double norm_comm, double norm_a, double eps, const cc_function *f,
                                         double *out);
COHCOST_API cc_status cc_cost_upper_sqrt(double norm_comm, double norm_a, double eps, double *out);

/* Runs a harness command described by a JSON config (see README). output
 * receives the CSV/JSON report, notes (may be NULL) newline-separated remarks. */
COHCOST_API cc_status cc_run(const char *config_json, char **output, char **notes, cc_run_summary *summary);

#ifdef __cplusplus
}
#endif

#endif /* COHCOST_COHCOST_H */
