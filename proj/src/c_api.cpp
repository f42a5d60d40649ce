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


#include "cohcost/cohcost.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "cohcost/construct.hpp"
#include "cohcost/costs.hpp"
#include "cohcost/error.hpp"
#include "cohcost/harness.hpp"
#include "cohcost/io.hpp"
#include "cohcost/measure.hpp"
#include "cohcost/uncertainty.hpp"

struct cc_operator {
    cohcost::HermitianOperator op;
};
struct cc_state {
    cohcost::DensityMatrix rho;
};
struct cc_function {
    cohcost::MonotoneFunction f;
};
struct cc_impl {
    cohcost::ImplementationSet impl;
};
struct cc_construction {
    cohcost::ConstructionSpec spec;
};

namespace {

using cohcost::ErrorKind;

thread_local std::string last_error;

cc_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return CC_ERR_INVALID_ARGUMENT;
    case ErrorKind::Validation: return CC_ERR_VALIDATION;
    case ErrorKind::DimensionMismatch: return CC_ERR_DIMENSION_MISMATCH;
    case ErrorKind::OutOfRegime: return CC_ERR_OUT_OF_REGIME;
    case ErrorKind::SingularMetric: return CC_ERR_SINGULAR_METRIC;
    case ErrorKind::ConditionNotMet: return CC_ERR_CONDITION_NOT_MET;
    case ErrorKind::InvariantViolation: return CC_ERR_INVARIANT_VIOLATION;
    case ErrorKind::Numerical: return CC_ERR_NUMERICAL;
    case ErrorKind::Parse: return CC_ERR_PARSE;
    case ErrorKind::Io: return CC_ERR_IO;
    }
    return CC_ERR_INTERNAL;
}

template <typename Fn>
cc_status guarded(Fn &&fn) {
    try {
        fn();
        return CC_OK;
    } catch (const cohcost::Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return CC_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return CC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return CC_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    if (p == nullptr) cohcost::fail(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

cohcost::Matrix matrix_from(size_t dim, const double *re, const double *im) {
    if (dim == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimension must be positive");
    need(re, "re");
    const auto n = static_cast<Eigen::Index>(dim);
    cohcost::Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            const std::size_t k = static_cast<std::size_t>(r * n + c);
            m(r, c) = cohcost::cplx(re[k], im ? im[k] : 0.0);
        }
    return m;
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<cohcost::MonotoneFunction> functions_from_list(const char *names) {
    std::vector<cohcost::MonotoneFunction> fs;
    if (names == nullptr) return fs;
    std::stringstream ss(names);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) fs.push_back(cohcost::lookup(item));
    return fs;
}

}  // namespace

extern "C" {

const char *cc_version(void) { return "0.1.0"; }

const char *cc_last_error(void) { return last_error.c_str(); }

const char *cc_status_name(cc_status status) {
    switch (status) {
    case CC_OK: return "ok";
    case CC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CC_ERR_VALIDATION: return "validation";
    case CC_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case CC_ERR_OUT_OF_REGIME: return "out_of_regime";
    case CC_ERR_SINGULAR_METRIC: return "singular_metric";
    case CC_ERR_CONDITION_NOT_MET: return "condition_not_met";
    case CC_ERR_INVARIANT_VIOLATION: return "invariant_violation";
    case CC_ERR_NUMERICAL: return "numerical";
    case CC_ERR_PARSE: return "parse";
    case CC_ERR_IO: return "io";
    case CC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void cc_string_free(char *s) { std::free(s); }

// operators

cc_status cc_operator_create(size_t dim, const double *re, const double *im, cc_operator **out) {
    return guarded([&] {
        need(out, "out");
        *out = new cc_operator{cohcost::HermitianOperator(matrix_from(dim, re, im))};
    });
}

cc_status cc_operator_from_json(const char *json, cc_operator **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new cc_operator{cohcost::parse_hermitian(json)};
    });
}

cc_status cc_operator_load(const char *path, cc_operator **out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = new cc_operator{cohcost::parse_hermitian(cohcost::read_text_file(path))};
    });
}

cc_status cc_operator_random(size_t dim, uint64_t seed, double scale, cc_operator **out) {
    return guarded([&] {
        need(out, "out");
        if (dim == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimension must be positive");
        *out = new cc_operator{cohcost::random_hermitian(static_cast<Eigen::Index>(dim), seed, scale)};
    });
}

cc_status cc_operator_to_json(const cc_operator *op, char **out) {
    return guarded([&] {
        need(op, "op");
        need(out, "out");
        *out = dup_string(cohcost::matrix_to_json(op->op.matrix()));
    });
}

size_t cc_operator_dim(const cc_operator *op) { return op ? static_cast<size_t>(op->op.dim()) : 0; }

cc_status cc_operator_op_norm(const cc_operator *op, double *out) {
    return guarded([&] {
        need(op, "op");
        need(out, "out");
        *out = cohcost::op_norm(op->op.matrix());
    });
}

cc_status cc_commutator_norm(const cc_operator *a, const cc_operator *b, double *out) {
    return guarded([&] {
        need(a, "a");
        need(b, "b");
        need(out, "out");
        if (a->op.dim() != b->op.dim()) cohcost::fail(ErrorKind::DimensionMismatch, "operators differ in dimension");
        *out = cohcost::op_norm(cohcost::commutator(a->op, b->op));
    });
}

void cc_operator_free(cc_operator *op) { delete op; }

// states

cc_status cc_state_create(size_t dim, const double *re, const double *im, cc_state **out) {
    return guarded([&] {
        need(out, "out");
        *out = new cc_state{cohcost::DensityMatrix(matrix_from(dim, re, im))};
    });
}

cc_status cc_state_pure(size_t dim, const double *re, const double *im, cc_state **out) {
    return guarded([&] {
        need(out, "out");
        need(re, "re");
        if (dim == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimension must be positive");
        cohcost::Vector v(static_cast<Eigen::Index>(dim));
        for (size_t k = 0; k < dim; ++k) v(static_cast<Eigen::Index>(k)) = cohcost::cplx(re[k], im ? im[k] : 0.0);
        *out = new cc_state{cohcost::DensityMatrix::pure(v)};
    });
}

cc_status cc_state_from_json(const char *json, cc_state **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new cc_state{cohcost::parse_density(json)};
    });
}

cc_status cc_state_load(const char *path, cc_state **out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = new cc_state{cohcost::parse_density(cohcost::read_text_file(path))};
    });
}

cc_status cc_state_random(size_t dim, uint64_t seed, cc_state **out) {
    return guarded([&] {
        need(out, "out");
        if (dim == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimension must be positive");
        *out = new cc_state{cohcost::random_density(static_cast<Eigen::Index>(dim), seed)};
    });
}

cc_status cc_state_maximally_mixed(size_t dim, cc_state **out) {
    return guarded([&] {
        need(out, "out");
        if (dim == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimension must be positive");
        *out = new cc_state{cohcost::DensityMatrix::maximally_mixed(static_cast<Eigen::Index>(dim))};
    });
}

size_t cc_state_dim(const cc_state *state) { return state ? static_cast<size_t>(state->rho.dim()) : 0; }

cc_status cc_state_eigenvalues(const cc_state *state, double *values) {
    return guarded([&] {
        need(state, "state");
        need(values, "values");
        const auto &p = state->rho.eigenvalues();
        for (Eigen::Index k = 0; k < p.size(); ++k) values[k] = p(k);
    });
}

void cc_state_free(cc_state *state) { delete state; }

// monotone functions

cc_status cc_function_lookup(const char *name, cc_function **out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = new cc_function{cohcost::lookup(name)};
    });
}

const char *cc_function_name(const cc_function *f) { return f ? f->f.name().c_str() : ""; }

double cc_function_f0(const cc_function *f) { return f ? f->f.f0() : 0.0; }

cc_status cc_function_eval(const cc_function *f, double x, double *out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        *out = f->f(x);
    });
}

cc_status cc_function_tilde_eval(const cc_function *f, double x, double *out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        *out = cohcost::f_tilde(f->f)(x);
    });
}

cc_status cc_m_f(const cc_function *f, double x, double y, double *out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        *out = cohcost::m_f(f->f, x, y);
    });
}

cc_status cc_check_cond_y(const cc_function *f, int *out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        *out = cohcost::check_cond_Y(f->f) ? 1 : 0;
    });
}

void cc_function_free(cc_function *f) { delete f; }

// measures

#define CC_MEASURE(fn_name, expr)                                                                   \
    cc_status fn_name(const cc_state *rho, const cc_operator *a, const cc_function *f, double *out) { \
        return guarded([&] {                                                                        \
            need(rho, "rho");                                                                       \
            need(a, "a");                                                                           \
            need(f, "f");                                                                           \
            need(out, "out");                                                                       \
            *out = expr;                                                                            \
        });                                                                                         \
    }

CC_MEASURE(cc_f_variance, cohcost::f_variance(rho->rho, a->op, f->f))
CC_MEASURE(cc_skew_information, cohcost::skew_information(rho->rho, a->op, f->f))
CC_MEASURE(cc_u_quantity, cohcost::u_quantity(rho->rho, a->op, f->f))
CC_MEASURE(cc_u_quantity_identity, cohcost::u_quantity_identity(rho->rho, a->op, f->f))
CC_MEASURE(cc_fisher_information, cohcost::fisher_information(rho->rho, a->op, f->f))
#undef CC_MEASURE

cc_status cc_variance(const cc_state *rho, const cc_operator *a, double *out) {
    return guarded([&] {
        need(rho, "rho");
        need(a, "a");
        need(out, "out");
        *out = cohcost::variance(rho->rho, a->op);
    });
}

cc_status cc_measures_json(const cc_state *rho, const cc_operator *a, const cc_function *f, char **out) {
    return guarded([&] {
        need(rho, "rho");
        need(a, "a");
        need(f, "f");
        need(out, "out");
        *out = dup_string(cohcost::measure_report_to_json(cohcost::measure_report(rho->rho, a->op, f->f)));
    });
}

cc_status cc_relation(const char *relation, const cc_state *rho, const cc_operator *a, const cc_operator *b,
                      const cc_function *f, cc_verdict *out) {
    return guarded([&] {
        need(relation, "relation");
        need(rho, "rho");
        need(a, "a");
        need(b, "b");
        need(out, "out");
        const std::string name(relation);
        std::optional<cohcost::RelationVerdict> v;
        if (name == "robertson") {
            v = cohcost::robertson(rho->rho, a->op, b->op);
        } else {
            need(f, "f");
            if (name == "lemma1") v = cohcost::lemma1(rho->rho, a->op, b->op, f->f);
            else if (name == "type1") v = cohcost::type1(rho->rho, a->op, b->op, f->f);
            else if (name == "type2") v = cohcost::type2(rho->rho, a->op, b->op, f->f);
            else if (name == "type3") v = cohcost::type3(rho->rho, a->op, b->op, f->f);
            else cohcost::fail(ErrorKind::InvalidArgument, "unknown relation '" + name + "'");
        }
        *out = cc_verdict{v->lhs, v->rhs, v->slack, v->holds ? 1 : 0};
    });
}

// implementation sets

cc_status cc_impl_from_json(const char *json, cc_impl **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new cc_impl{cohcost::parse_implementation(json)};
    });
}

cc_status cc_impl_load(const char *path, cc_impl **out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = new cc_impl{cohcost::parse_implementation(cohcost::read_text_file(path))};
    });
}

cc_status cc_impl_random(size_t dim_s, size_t dim_e, uint64_t seed, cc_impl **out) {
    return guarded([&] {
        need(out, "out");
        if (dim_s == 0 || dim_e == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimensions must be positive");
        *out = new cc_impl{cohcost::random_implementation(static_cast<Eigen::Index>(dim_s),
                                                          static_cast<Eigen::Index>(dim_e), seed)};
    });
}

cc_status cc_impl_random_nonconserving(size_t dim_s, size_t dim_e, uint64_t seed, cc_impl **out) {
    return guarded([&] {
        need(out, "out");
        if (dim_s == 0 || dim_e == 0) cohcost::fail(ErrorKind::InvalidArgument, "dimensions must be positive");
        *out = new cc_impl{cohcost::random_nonconserving_implementation(static_cast<Eigen::Index>(dim_s),
                                                                        static_cast<Eigen::Index>(dim_e), seed)};
    });
}

cc_status cc_impl_validate(const cc_impl *impl) {
    return guarded([&] {
        need(impl, "impl");
        if (!impl->impl.status().ok())
            cohcost::fail(ErrorKind::InvariantViolation, "implementation set: " + impl->impl.status().describe());
    });
}

size_t cc_impl_dim_s(const cc_impl *impl) { return impl ? static_cast<size_t>(impl->impl.dim_s()) : 0; }
size_t cc_impl_dim_e(const cc_impl *impl) { return impl ? static_cast<size_t>(impl->impl.dim_e()) : 0; }

cc_status cc_impl_error(const cc_impl *impl, const cc_operator *b, const cc_state *rho, double *out) {
    return guarded([&] {
        need(impl, "impl");
        need(b, "b");
        need(rho, "rho");
        need(out, "out");
        *out = cohcost::error(impl->impl, b->op, rho->rho);
    });
}

cc_status cc_impl_worst_error(const cc_impl *impl, const cc_operator *b, double *out) {
    return guarded([&] {
        need(impl, "impl");
        need(b, "b");
        need(out, "out");
        *out = cohcost::worst_error(impl->impl, b->op).epsilon;
    });
}

cc_status cc_way_ozawa_bound(const cc_impl *impl, const cc_operator *b, const cc_state *rho, const cc_function *f,
                             double *out) {
    return guarded([&] {
        need(impl, "impl");
        need(b, "b");
        need(rho, "rho");
        need(f, "f");
        need(out, "out");
        *out = cohcost::way_ozawa_bound(impl->impl, b->op, rho->rho, f->f);
    });
}

cc_status cc_commutator_transfer(const cc_impl *impl, const cc_operator *b, const cc_state *rho, double *residual,
                                 int *holds) {
    return guarded([&] {
        need(impl, "impl");
        need(b, "b");
        need(rho, "rho");
        const cohcost::TransferReport r = cohcost::commutator_transfer_check(impl->impl, b->op, rho->rho);
        if (residual) *residual = r.residual;
        if (holds) *holds = r.holds ? 1 : 0;
        if (!r.invariant_violation.empty() && !r.holds)
            cohcost::fail(ErrorKind::InvariantViolation, "transfer identity not expected: " + r.invariant_violation);
    });
}

cc_status cc_error_report_json(const cc_impl *impl, const cc_operator *b, const cc_state *rho, const char *f_names,
                               char **out) {
    return guarded([&] {
        need(impl, "impl");
        need(b, "b");
        need(rho, "rho");
        need(out, "out");
        const auto fs = functions_from_list(f_names);
        *out = dup_string(cohcost::error_report_to_json(cohcost::error_report(impl->impl, b->op, rho->rho, fs)));
    });
}

void cc_impl_free(cc_impl *impl) { delete impl; }

// construction

cc_status cc_construction_qubit(double xi, cc_construction **out) {
    return guarded([&] {
        need(out, "out");
        *out = new cc_construction{cohcost::qubit_spec(xi)};
    });
}

cc_status cc_construction_from_json(const char *json, cc_construction **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new cc_construction{cohcost::parse_construction_spec(json)};
    });
}

cc_status cc_construction_load(const char *path, cc_construction **out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = new cc_construction{cohcost::parse_construction_spec(cohcost::read_text_file(path))};
    });
}

cc_status cc_construction_with_xi(const cc_construction *spec, double xi, cc_construction **out) {
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        *out = new cc_construction{spec->spec.with_xi(xi)};
    });
}

cc_status cc_construction_norms(const cc_construction *spec, double *norm_comm, double *norm_a) {
    return guarded([&] {
        need(spec, "spec");
        if (norm_comm) *norm_comm = spec->spec.norm_comm();
        if (norm_a) *norm_a = spec->spec.norm_a();
    });
}

cc_status cc_construction_exact_worst_error(const cc_construction *spec, double *out) {
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        *out = cohcost::exact_worst_error(spec->spec);
    });
}

cc_status cc_construction_error_bound(const cc_construction *spec, double *out) {
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        *out = cohcost::error_bound(spec->spec);
    });
}

cc_status cc_construction_grid_worst_error(const cc_construction *spec, int m, double half_extent, double *out) {
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        const cohcost::ImplementationSet impl = cohcost::discretize(spec->spec, cohcost::GridSpec{m, half_extent});
        *out = cohcost::worst_error(impl, spec->spec.b).epsilon;
    });
}

void cc_construction_free(cc_construction *spec) { delete spec; }

// costs

cc_status cc_xi_for_epsilon(double norm_comm, double norm_a, double eps, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = cohcost::xi_for_epsilon(norm_comm, norm_a, eps);
    });
}

cc_status cc_cost_lower_sqrt(double norm_comm, double norm_a, double eps, const cc_function *f, double *out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        *out = cohcost::cost_lower_sqrt(norm_comm, norm_a, eps, f->f);
    });
}

cc_status cc_cost_upper_sqrt(double norm_comm, double norm_a, double eps, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = cohcost::cost_upper_sqrt(norm_comm, norm_a, eps);
    });
}

cc_status cc_run(const char *config_json, char **output, char **notes, cc_run_summary *summary) {
    return guarded([&] {
        need(config_json, "config_json");
        need(output, "output");
        *output = nullptr;
        if (notes) *notes = nullptr;
        const cohcost::RunConfig cfg = cohcost::parse_run_config(config_json);
        const cohcost::RunResult r = cohcost::run(cfg);
        std::string joined;
        for (const auto &n : r.notes) joined += n + "\n";
        char *out_text = dup_string(r.output);
        if (notes) {
            try {
                *notes = dup_string(joined);
            } catch (...) {
                std::free(out_text);
                throw;
            }
        }
        *output = out_text;
        if (summary) *summary = cc_run_summary{r.passed ? 1 : 0, r.checks, r.violations};
    });
}

}  // extern "C"
