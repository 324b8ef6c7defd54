// Copyright 2026 The shadowtomo Authors
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

#include "shadowtomo.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/anneal.hpp"
#include "core/norms.hpp"
#include "core/polytopes.hpp"
#include "core/sampling.hpp"
#include "core/serialize.hpp"

struct sht_operator {
    sht::HermitianOperator value;
};

struct sht_povm {
    sht::Povm value;
};

struct sht_shadows {
    std::shared_ptr<const sht::ClassicalShadowSet> value;
};

struct sht_anneal_result {
    sht::OptimizationResult value;
};

namespace {

thread_local std::string g_last_error;

sht_status map_kind(sht::ErrorKind kind) {
    using sht::ErrorKind;
    switch (kind) {
        case ErrorKind::Dimension: return SHT_ERROR_DIMENSION;
        case ErrorKind::NotHermitian: return SHT_ERROR_NOT_HERMITIAN;
        case ErrorKind::SizeLimit: return SHT_ERROR_SIZE_LIMIT;
        case ErrorKind::Positivity: return SHT_ERROR_POSITIVITY;
        case ErrorKind::Normalization: return SHT_ERROR_NORMALIZATION;
        case ErrorKind::UnknownSolid: return SHT_ERROR_UNKNOWN_SOLID;
        case ErrorKind::NonUnitary: return SHT_ERROR_NON_UNITARY;
        case ErrorKind::Range: return SHT_ERROR_RANGE;
        case ErrorKind::Approximation: return SHT_ERROR_APPROXIMATION;
        case ErrorKind::NotUniform: return SHT_ERROR_NOT_UNIFORM;
        case ErrorKind::Degenerate: return SHT_ERROR_DEGENERATE;
        case ErrorKind::NotInformationallyComplete:
            return SHT_ERROR_NOT_INFORMATIONALLY_COMPLETE;
        case ErrorKind::NotRigidlySymmetric: return SHT_ERROR_NOT_RIGIDLY_SYMMETRIC;
        case ErrorKind::SingularH: return SHT_ERROR_SINGULAR_H;
        case ErrorKind::InvalidState: return SHT_ERROR_INVALID_STATE;
        case ErrorKind::EmptyData: return SHT_ERROR_EMPTY_DATA;
        case ErrorKind::NotFactorized: return SHT_ERROR_NOT_FACTORIZED;
        case ErrorKind::Config: return SHT_ERROR_CONFIG;
        case ErrorKind::Parse: return SHT_ERROR_PARSE;
        case ErrorKind::Io: return SHT_ERROR_IO;
        case ErrorKind::Usage: return SHT_ERROR_USAGE;
        case ErrorKind::Internal: return SHT_ERROR_INTERNAL;
    }
    return SHT_ERROR_INTERNAL;
}

template <typename Fn>
sht_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return SHT_OK;
    } catch (const sht::Error &e) {
        g_last_error = e.what();
        return map_kind(e.kind());
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return SHT_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SHT_ERROR_INTERNAL;
    }
}

sht_status invalid_argument(const char *what) noexcept {
    g_last_error = what;
    return SHT_ERROR_INVALID_ARGUMENT;
}

char *copy_string(const std::string &text) {
    char *out = static_cast<char *>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

std::vector<sht::HermitianOperator> collect_operators(const sht_operator *const *ops,
                                                      size_t count) {
    std::vector<sht::HermitianOperator> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        sht::require(ops[i] != nullptr, sht::ErrorKind::Internal, "null operator handle");
        out.push_back(ops[i]->value);
    }
    return out;
}

std::vector<sht::Povm> collect_povms(const sht_povm *const *povms, size_t count) {
    std::vector<sht::Povm> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        sht::require(povms[i] != nullptr, sht::ErrorKind::Internal, "null measurement handle");
        out.push_back(povms[i]->value);
    }
    return out;
}

sht::AnnealConfig convert_config(const sht_anneal_config *config) {
    sht::AnnealConfig out;
    if (config != nullptr) {
        out.outcomes = config->outcomes;
        out.iterations = config->iterations;
        out.initial_temperature = config->initial_temperature;
        out.cooling_ratio = config->cooling_ratio;
        out.move_scale = config->move_scale;
        out.restarts = config->restarts;
        out.seed = config->seed;
    }
    return out;
}

}  // namespace

extern "C" {

const char *sht_status_name(sht_status status) {
    switch (status) {
        case SHT_OK: return "Ok";
        case SHT_ERROR_DIMENSION: return "DimensionError";
        case SHT_ERROR_NOT_HERMITIAN: return "NotHermitianError";
        case SHT_ERROR_SIZE_LIMIT: return "SizeLimitError";
        case SHT_ERROR_POSITIVITY: return "PositivityError";
        case SHT_ERROR_NORMALIZATION: return "NormalizationError";
        case SHT_ERROR_UNKNOWN_SOLID: return "UnknownSolidError";
        case SHT_ERROR_NON_UNITARY: return "NonUnitaryError";
        case SHT_ERROR_RANGE: return "RangeError";
        case SHT_ERROR_APPROXIMATION: return "ApproximationError";
        case SHT_ERROR_NOT_UNIFORM: return "NotUniformError";
        case SHT_ERROR_DEGENERATE: return "DegenerateError";
        case SHT_ERROR_NOT_INFORMATIONALLY_COMPLETE:
            return "NotInformationallyCompleteError";
        case SHT_ERROR_NOT_RIGIDLY_SYMMETRIC: return "NotRigidlySymmetricError";
        case SHT_ERROR_SINGULAR_H: return "SingularHError";
        case SHT_ERROR_INVALID_STATE: return "InvalidStateError";
        case SHT_ERROR_EMPTY_DATA: return "EmptyDataError";
        case SHT_ERROR_NOT_FACTORIZED: return "NotFactorizedError";
        case SHT_ERROR_CONFIG: return "ConfigError";
        case SHT_ERROR_PARSE: return "ParseError";
        case SHT_ERROR_IO: return "IoError";
        case SHT_ERROR_USAGE: return "UsageError";
        case SHT_ERROR_INVALID_ARGUMENT: return "InvalidArgumentError";
        case SHT_ERROR_INTERNAL: return "InternalError";
    }
    return "InternalError";
}

const char *sht_last_error_message(void) {
    return g_last_error.c_str();
}

const char *sht_version(void) {
    return "0.1.0";
}

void sht_string_free(char *text) {
    std::free(text);
}

/* ---- operators ---------------------------------------------------------- */

sht_status sht_operator_create(int32_t dim, const double *re, const double *im,
                               sht_operator **out) {
    if (out == nullptr || re == nullptr || dim < 1) {
        return invalid_argument("sht_operator_create: bad arguments");
    }
    return guarded([&] {
        sht::Matrix m(dim, dim);
        for (int32_t r = 0; r < dim; ++r) {
            for (int32_t c = 0; c < dim; ++c) {
                double real = re[r * dim + c];
                double imag = im != nullptr ? im[r * dim + c] : 0.0;
                m(r, c) = sht::Complex(real, imag);
            }
        }
        *out = new sht_operator{sht::HermitianOperator(m)};
    });
}

sht_status sht_operator_from_json(const char *json, sht_operator **out) {
    if (out == nullptr || json == nullptr) {
        return invalid_argument("sht_operator_from_json: bad arguments");
    }
    return guarded([&] {
        *out = new sht_operator{sht::operator_from_json(sht::parse_json(json))};
    });
}

sht_status sht_operator_to_json(const sht_operator *op, char **json_out) {
    if (op == nullptr || json_out == nullptr) {
        return invalid_argument("sht_operator_to_json: bad arguments");
    }
    return guarded([&] { *json_out = copy_string(sht::operator_to_json(op->value).dump()); });
}

void sht_operator_free(sht_operator *op) {
    delete op;
}

int32_t sht_operator_dim(const sht_operator *op) {
    return op == nullptr ? 0 : op->value.dim();
}

sht_status sht_operator_entries(const sht_operator *op, double *re, double *im) {
    if (op == nullptr) {
        return invalid_argument("sht_operator_entries: null operator");
    }
    return guarded([&] {
        int dim = op->value.dim();
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                if (re != nullptr) {
                    re[r * dim + c] = op->value.entry(r, c).real();
                }
                if (im != nullptr) {
                    im[r * dim + c] = op->value.entry(r, c).imag();
                }
            }
        }
    });
}

sht_status sht_operator_trace(const sht_operator *op, double *out) {
    if (op == nullptr || out == nullptr) {
        return invalid_argument("sht_operator_trace: bad arguments");
    }
    return guarded([&] { *out = op->value.trace(); });
}

sht_status sht_operator_max_eigenvalue(const sht_operator *op, double *out) {
    if (op == nullptr || out == nullptr) {
        return invalid_argument("sht_operator_max_eigenvalue: bad arguments");
    }
    return guarded([&] { *out = sht::max_eigenvalue(op->value); });
}

sht_status sht_operator_to_bloch(const sht_operator *op, double bloch_out[4]) {
    if (op == nullptr || bloch_out == nullptr) {
        return invalid_argument("sht_operator_to_bloch: bad arguments");
    }
    return guarded([&] {
        sht::BlochVector b = sht::to_bloch(op->value);
        bloch_out[0] = b.x0;
        bloch_out[1] = b.r[0];
        bloch_out[2] = b.r[1];
        bloch_out[3] = b.r[2];
    });
}

sht_status sht_operator_from_bloch(const double bloch[4], sht_operator **out) {
    if (bloch == nullptr || out == nullptr) {
        return invalid_argument("sht_operator_from_bloch: bad arguments");
    }
    return guarded([&] {
        sht::BlochVector b{bloch[0], {bloch[1], bloch[2], bloch[3]}};
        *out = new sht_operator{sht::from_bloch(b)};
    });
}

sht_status sht_operator_tensor(const sht_operator *a, const sht_operator *b, sht_operator **out) {
    if (a == nullptr || b == nullptr || out == nullptr) {
        return invalid_argument("sht_operator_tensor: bad arguments");
    }
    return guarded([&] { *out = new sht_operator{sht::tensor(a->value, b->value)}; });
}

sht_status sht_pauli(int32_t index, sht_operator **out) {
    if (out == nullptr) {
        return invalid_argument("sht_pauli: null output");
    }
    return guarded([&] { *out = new sht_operator{sht::pauli(index)}; });
}

sht_status sht_haar_random_projection(uint64_t seed, int32_t dim, sht_operator **out) {
    if (out == nullptr) {
        return invalid_argument("sht_haar_random_projection: null output");
    }
    return guarded([&] { *out = new sht_operator{sht::haar_random_projection(seed, dim)}; });
}

/* ---- measurements -------------------------------------------------------- */

sht_status sht_povm_create(const sht_operator *const *effects, size_t count, sht_povm **out) {
    if (effects == nullptr || out == nullptr || count == 0) {
        return invalid_argument("sht_povm_create: bad arguments");
    }
    return guarded([&] {
        *out = new sht_povm{sht::Povm::validate(collect_operators(effects, count))};
    });
}

sht_status sht_povm_from_json(const char *json, sht_povm **out) {
    if (json == nullptr || out == nullptr) {
        return invalid_argument("sht_povm_from_json: bad arguments");
    }
    return guarded([&] { *out = new sht_povm{sht::povm_from_json(sht::parse_json(json))}; });
}

sht_status sht_povm_to_json(const sht_povm *povm, char **json_out) {
    if (povm == nullptr || json_out == nullptr) {
        return invalid_argument("sht_povm_to_json: bad arguments");
    }
    return guarded([&] { *json_out = copy_string(sht::povm_to_json(povm->value).dump()); });
}

sht_status sht_povm_builtin(const char *name, sht_povm **out) {
    if (name == nullptr || out == nullptr) {
        return invalid_argument("sht_povm_builtin: bad arguments");
    }
    return guarded([&] { *out = new sht_povm{sht::builtin_povm(name)}; });
}

void sht_povm_free(sht_povm *povm) {
    delete povm;
}

int32_t sht_povm_dim(const sht_povm *povm) {
    return povm == nullptr ? 0 : povm->value.dim();
}

size_t sht_povm_outcomes(const sht_povm *povm) {
    return povm == nullptr ? 0 : povm->value.size();
}

sht_status sht_povm_effect(const sht_povm *povm, size_t index, sht_operator **out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_povm_effect: bad arguments");
    }
    return guarded([&] { *out = new sht_operator{povm->value.effect(index)}; });
}

int32_t sht_povm_is_informationally_complete(const sht_povm *povm) {
    if (povm == nullptr) {
        return 0;
    }
    return povm->value.is_informationally_complete() ? 1 : 0;
}

sht_status sht_povm_inverted(const sht_povm *povm, sht_povm **out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_povm_inverted: bad arguments");
    }
    return guarded([&] { *out = new sht_povm{sht::inverted(povm->value)}; });
}

sht_status sht_povm_depolarize(const sht_povm *povm, double p, sht_povm **out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_povm_depolarize: bad arguments");
    }
    return guarded([&] { *out = new sht_povm{sht::depolarize(povm->value, p)}; });
}

sht_status sht_povm_uniform_trace_split(const sht_povm *povm, uint64_t denominator_cap,
                                        sht_povm **out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_povm_uniform_trace_split: bad arguments");
    }
    return guarded(
        [&] { *out = new sht_povm{sht::uniform_trace_split(povm->value, denominator_cap)}; });
}

sht_status sht_povm_from_unitary_ensemble(int32_t dim, size_t count, const double *re,
                                          const double *im, int32_t merge_duplicates,
                                          sht_povm **out) {
    if (re == nullptr || out == nullptr || dim < 1 || count == 0) {
        return invalid_argument("sht_povm_from_unitary_ensemble: bad arguments");
    }
    return guarded([&] {
        std::vector<sht::Matrix> unitaries;
        unitaries.reserve(count);
        for (size_t u = 0; u < count; ++u) {
            sht::Matrix m(dim, dim);
            const double *re_base = re + u * static_cast<size_t>(dim) * dim;
            const double *im_base =
                im != nullptr ? im + u * static_cast<size_t>(dim) * dim : nullptr;
            for (int32_t r = 0; r < dim; ++r) {
                for (int32_t c = 0; c < dim; ++c) {
                    m(r, c) = sht::Complex(re_base[r * dim + c],
                                           im_base != nullptr ? im_base[r * dim + c] : 0.0);
                }
            }
            unitaries.push_back(std::move(m));
        }
        *out = new sht_povm{sht::from_unitary_ensemble(unitaries, merge_duplicates != 0)};
    });
}

sht_status sht_povm_tensor(const sht_povm *const *sites, size_t count, sht_povm **out) {
    if (sites == nullptr || out == nullptr || count == 0) {
        return invalid_argument("sht_povm_tensor: bad arguments");
    }
    return guarded([&] { *out = new sht_povm{sht::tensor_povm(collect_povms(sites, count))}; });
}

sht_status sht_povm_symmetry_coefficients(const sht_povm *povm, double *alpha, double *beta,
                                          double *gamma, double *a, double *b) {
    if (povm == nullptr) {
        return invalid_argument("sht_povm_symmetry_coefficients: null measurement");
    }
    return guarded([&] {
        sht::SymmetryCoefficients coeffs = sht::symmetry_coefficients(povm->value);
        if (alpha != nullptr) *alpha = coeffs.alpha;
        if (beta != nullptr) *beta = coeffs.beta;
        if (gamma != nullptr) *gamma = coeffs.gamma;
        if (a != nullptr) *a = coeffs.a;
        if (b != nullptr) *b = coeffs.b;
    });
}

/* ---- shadows -------------------------------------------------------------- */

sht_status sht_shadows_compute(const sht_povm *povm, sht_shadow_method method,
                               sht_shadows **out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_shadows_compute: bad arguments");
    }
    return guarded([&] {
        switch (method) {
            case SHT_SHADOW_GENERAL:
                *out = new sht_shadows{sht::classical_shadows(povm->value)};
                return;
            case SHT_SHADOW_SYMMETRIC:
                *out = new sht_shadows{sht::classical_shadows_symmetric(povm->value)};
                return;
            case SHT_SHADOW_BLOCH:
                *out = new sht_shadows{sht::classical_shadows_bloch(povm->value)};
                return;
        }
        sht::fail(sht::ErrorKind::Config, "unknown shadow method");
    });
}

void sht_shadows_free(sht_shadows *shadows) {
    delete shadows;
}

size_t sht_shadows_count(const sht_shadows *shadows) {
    return shadows == nullptr ? 0 : shadows->value->size();
}

sht_status sht_shadows_get(const sht_shadows *shadows, size_t index, sht_operator **out) {
    if (shadows == nullptr || out == nullptr) {
        return invalid_argument("sht_shadows_get: bad arguments");
    }
    return guarded([&] { *out = new sht_operator{shadows->value->shadow(index)}; });
}

sht_status sht_shadows_symmetric_ab(const sht_shadows *shadows, double *a, double *b) {
    if (shadows == nullptr) {
        return invalid_argument("sht_shadows_symmetric_ab: null shadows");
    }
    return guarded([&] {
        auto ab = shadows->value->symmetric_ab();
        sht::require(ab.has_value(), sht::ErrorKind::Config,
                     "shadow set was not produced by the symmetric method");
        if (a != nullptr) *a = ab->first;
        if (b != nullptr) *b = ab->second;
    });
}

sht_status sht_least_squares_estimate(const sht_povm *povm, const double *distribution,
                                      size_t count, sht_operator **out) {
    if (povm == nullptr || distribution == nullptr || out == nullptr) {
        return invalid_argument("sht_least_squares_estimate: bad arguments");
    }
    return guarded([&] {
        *out = new sht_operator{
            sht::least_squares_estimate(povm->value, std::span(distribution, count))};
    });
}

sht_status sht_bloch_least_squares(const sht_povm *povm, double h_out[9], double *columns_out) {
    if (povm == nullptr || h_out == nullptr) {
        return invalid_argument("sht_bloch_least_squares: bad arguments");
    }
    return guarded([&] {
        sht::BlochLeastSquares bls = sht::bloch_least_squares(povm->value);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                h_out[r * 3 + c] = bls.h(r, c);
            }
        }
        if (columns_out != nullptr) {
            for (std::size_t k = 0; k < bls.shadow_columns.size(); ++k) {
                columns_out[4 * k] = bls.shadow_columns[k].x0;
                for (std::size_t i = 0; i < 3; ++i) {
                    columns_out[4 * k + 1 + i] = bls.shadow_columns[k].r[i];
                }
            }
        }
    });
}

/* ---- norms ---------------------------------------------------------------- */

sht_status sht_squared_shadow_norm(const sht_povm *povm, const sht_operator *x, double *norm_out,
                                   sht_operator **worst_state_out) {
    if (povm == nullptr || x == nullptr || norm_out == nullptr) {
        return invalid_argument("sht_squared_shadow_norm: bad arguments");
    }
    return guarded([&] {
        sht::NormReport report = sht::squared_shadow_norm(povm->value, x->value);
        *norm_out = report.squared_norm;
        if (worst_state_out != nullptr) {
            *worst_state_out = new sht_operator{report.worst_state};
        }
    });
}

sht_status sht_estimator_variance(const sht_povm *povm, const sht_operator *x,
                                  const sht_operator *rho, double *out) {
    if (povm == nullptr || x == nullptr || rho == nullptr || out == nullptr) {
        return invalid_argument("sht_estimator_variance: bad arguments");
    }
    return guarded([&] { *out = sht::estimator_variance(povm->value, x->value, rho->value); });
}

sht_status sht_average_squared_norm(const sht_povm *povm, const sht_operator *x, double *out) {
    if (povm == nullptr || x == nullptr || out == nullptr) {
        return invalid_argument("sht_average_squared_norm: bad arguments");
    }
    return guarded([&] { *out = sht::average_squared_norm(povm->value, x->value); });
}

sht_status sht_factorized_squared_norm(const sht_povm *const *povms,
                                       const sht_operator *const *factors, size_t count,
                                       double *out) {
    if (povms == nullptr || factors == nullptr || out == nullptr || count == 0) {
        return invalid_argument("sht_factorized_squared_norm: bad arguments");
    }
    return guarded([&] {
        std::vector<sht::Povm> sites = collect_povms(povms, count);
        std::vector<sht::HermitianOperator> xs = collect_operators(factors, count);
        *out = sht::factorized_squared_norm(sites, xs);
    });
}

sht_status sht_octahedron_bound(const sht_povm *povm, double *out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_octahedron_bound: bad arguments");
    }
    return guarded([&] { *out = sht::octahedron_bound(povm->value); });
}

sht_status sht_max_projection_norm_grid(const sht_povm *povm, int32_t resolution, double *out) {
    if (povm == nullptr || out == nullptr) {
        return invalid_argument("sht_max_projection_norm_grid: bad arguments");
    }
    return guarded([&] { *out = sht::max_projection_norm_grid(povm->value, resolution); });
}

/* ---- sampling -------------------------------------------------------------- */

sht_status sht_sample_outcomes(const sht_povm *const *povms, const sht_operator *const *states,
                               size_t sites, uint64_t shots, uint64_t seed,
                               uint32_t *outcomes_out) {
    if (povms == nullptr || states == nullptr || outcomes_out == nullptr || sites == 0) {
        return invalid_argument("sht_sample_outcomes: bad arguments");
    }
    return guarded([&] {
        std::vector<sht::Povm> site_povms = collect_povms(povms, sites);
        std::vector<sht::HermitianOperator> site_states = collect_operators(states, sites);
        sht::EstimatorConfig config;
        config.shots = shots;
        config.seed = seed;
        std::vector<sht::OutcomeRecord> records =
            sht::sample_outcomes(site_povms, site_states, config);
        for (size_t shot = 0; shot < records.size(); ++shot) {
            for (size_t s = 0; s < sites; ++s) {
                outcomes_out[shot * sites + s] = records[shot].site_outcomes[s];
            }
        }
    });
}

sht_status sht_single_shot_estimate(const sht_shadows *const *shadow_sets,
                                    const uint32_t *outcomes, const sht_operator *const *factors,
                                    size_t sites, double *out) {
    if (shadow_sets == nullptr || outcomes == nullptr || factors == nullptr || out == nullptr ||
        sites == 0) {
        return invalid_argument("sht_single_shot_estimate: bad arguments");
    }
    return guarded([&] {
        std::vector<std::shared_ptr<const sht::ClassicalShadowSet>> sets;
        sets.reserve(sites);
        for (size_t s = 0; s < sites; ++s) {
            sht::require(shadow_sets[s] != nullptr, sht::ErrorKind::Internal,
                         "null shadow handle");
            sets.push_back(shadow_sets[s]->value);
        }
        sht::OutcomeRecord record;
        record.site_outcomes.assign(outcomes, outcomes + sites);
        std::vector<sht::HermitianOperator> xs = collect_operators(factors, sites);
        *out = sht::single_shot_estimate(sets, record, xs);
    });
}

sht_status sht_estimate_mean(const double *estimates, size_t count, uint32_t median_groups,
                             double *out) {
    if (estimates == nullptr || out == nullptr) {
        return invalid_argument("sht_estimate_mean: bad arguments");
    }
    return guarded([&] {
        sht::EstimatorConfig config;
        config.median_groups = median_groups;
        *out = sht::estimate_mean(std::span(estimates, count), config);
    });
}

sht_status sht_simulate_estimate(const sht_povm *const *povms, const sht_operator *const *states,
                                 const sht_operator *const *factors, size_t sites, uint64_t shots,
                                 uint32_t median_groups, uint64_t seed, double *estimate_out,
                                 double *variance_out) {
    if (povms == nullptr || states == nullptr || factors == nullptr || estimate_out == nullptr ||
        sites == 0) {
        return invalid_argument("sht_simulate_estimate: bad arguments");
    }
    return guarded([&] {
        std::vector<sht::Povm> site_povms = collect_povms(povms, sites);
        std::vector<sht::HermitianOperator> site_states = collect_operators(states, sites);
        std::vector<sht::HermitianOperator> site_factors = collect_operators(factors, sites);
        sht::EstimatorConfig config;
        config.shots = shots;
        config.median_groups = median_groups;
        config.seed = seed;
        sht::SimulationSummary summary =
            sht::simulate_estimate(site_povms, site_states, site_factors, config);
        *estimate_out = summary.estimate;
        if (variance_out != nullptr) {
            *variance_out = summary.empirical_variance;
        }
    });
}

/* ---- optimizer -------------------------------------------------------------- */

void sht_anneal_config_init(sht_anneal_config *config) {
    if (config == nullptr) {
        return;
    }
    sht::AnnealConfig defaults;
    config->outcomes = defaults.outcomes;
    config->iterations = defaults.iterations;
    config->initial_temperature = defaults.initial_temperature;
    config->cooling_ratio = defaults.cooling_ratio;
    config->move_scale = defaults.move_scale;
    config->restarts = defaults.restarts;
    config->seed = defaults.seed;
}

sht_status sht_objective(const sht_povm *povm, const sht_operator *const *observables,
                         size_t count, double *out) {
    if (povm == nullptr || observables == nullptr || out == nullptr || count == 0) {
        return invalid_argument("sht_objective: bad arguments");
    }
    return guarded([&] {
        std::vector<sht::HermitianOperator> xs = collect_operators(observables, count);
        *out = sht::objective(povm->value, xs);
    });
}

sht_status sht_anneal_single_qubit(const sht_operator *const *observables, size_t count,
                                   const sht_anneal_config *config, sht_anneal_result **out) {
    if (observables == nullptr || out == nullptr || count == 0) {
        return invalid_argument("sht_anneal_single_qubit: bad arguments");
    }
    return guarded([&] {
        std::vector<sht::HermitianOperator> xs = collect_operators(observables, count);
        *out = new sht_anneal_result{sht::anneal_single_qubit(xs, convert_config(config))};
    });
}

sht_status sht_anneal_factorized(size_t sites, const sht_operator *const *factors, size_t count,
                                 const sht_anneal_config *config, sht_anneal_result **out) {
    if (factors == nullptr || out == nullptr || count == 0 || sites == 0) {
        return invalid_argument("sht_anneal_factorized: bad arguments");
    }
    return guarded([&] {
        std::vector<std::vector<sht::HermitianOperator>> site_factors;
        site_factors.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            std::vector<sht::HermitianOperator> row;
            row.reserve(sites);
            for (size_t s = 0; s < sites; ++s) {
                const sht_operator *factor = factors[i * sites + s];
                sht::require(factor != nullptr, sht::ErrorKind::Internal,
                             "null operator handle");
                row.push_back(factor->value);
            }
            site_factors.push_back(std::move(row));
        }
        *out = new sht_anneal_result{
            sht::anneal_factorized(sites, site_factors, convert_config(config))};
    });
}

void sht_anneal_result_free(sht_anneal_result *result) {
    delete result;
}

double sht_anneal_result_best_objective(const sht_anneal_result *result) {
    return result == nullptr ? 0.0 : result->value.best_objective;
}

sht_status sht_anneal_result_best_povm(const sht_anneal_result *result, sht_povm **out) {
    if (result == nullptr || out == nullptr) {
        return invalid_argument("sht_anneal_result_best_povm: bad arguments");
    }
    return guarded([&] { *out = new sht_povm{result->value.best_povm}; });
}

int32_t sht_anneal_result_degenerate_targets(const sht_anneal_result *result) {
    return result != nullptr && result->value.degenerate_targets ? 1 : 0;
}

size_t sht_anneal_result_trace_count(const sht_anneal_result *result) {
    return result == nullptr ? 0 : result->value.objective_trace.size();
}

sht_status sht_anneal_result_trace(const sht_anneal_result *result, uint64_t *iterations_out,
                                   double *objectives_out) {
    if (result == nullptr) {
        return invalid_argument("sht_anneal_result_trace: null result");
    }
    return guarded([&] {
        for (std::size_t i = 0; i < result->value.objective_trace.size(); ++i) {
            if (iterations_out != nullptr) {
                iterations_out[i] = result->value.objective_trace[i].first;
            }
            if (objectives_out != nullptr) {
                objectives_out[i] = result->value.objective_trace[i].second;
            }
        }
    });
}

size_t sht_anneal_result_restart_count(const sht_anneal_result *result) {
    return result == nullptr ? 0 : result->value.restarts.size();
}

sht_status sht_anneal_result_restart(const sht_anneal_result *result, size_t index,
                                     double *objective_out, sht_povm **povm_out) {
    if (result == nullptr) {
        return invalid_argument("sht_anneal_result_restart: null result");
    }
    return guarded([&] {
        sht::require(index < result->value.restarts.size(), sht::ErrorKind::Range,
                     "restart index out of range");
        const sht::RestartSummary &summary = result->value.restarts[index];
        if (objective_out != nullptr) {
            *objective_out = summary.best_objective;
        }
        if (povm_out != nullptr) {
            *povm_out = new sht_povm{summary.best_povm};
        }
    });
}

}  // extern "C"
