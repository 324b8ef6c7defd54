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

#include "core/povm.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "core/tolerances.hpp"

namespace sht {

struct Povm::Impl {
    int dim = 0;
    std::vector<HermitianOperator> effects;
    std::vector<std::string> labels;

    mutable std::mutex cache_mutex;
    mutable std::shared_ptr<const ClassicalShadowSet> shadow_cache;
    mutable int ic_cache = -1;  // -1 unknown, 0 false, 1 true
};

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        labels.push_back("e" + std::to_string(k));
    }
    return labels;
}

}  // namespace

Povm Povm::validate(std::vector<HermitianOperator> effects, std::vector<std::string> labels) {
    require(!effects.empty(), ErrorKind::Normalization, "a measurement needs at least one effect");
    int dim = effects.front().dim();
    for (const auto &effect : effects) {
        require(effect.dim() == dim, ErrorKind::Dimension, "effects have mixed dimensions");
    }
    for (std::size_t k = 0; k < effects.size(); ++k) {
        double lo = min_eigenvalue(effects[k]);
        if (lo < tol::kPsdFloor) {
            fail(ErrorKind::Positivity, "effect " + std::to_string(k) +
                                            " has eigenvalue " + std::to_string(lo));
        }
    }
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto &effect : effects) {
        sum += effect.matrix();
    }
    double deviation = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (deviation > tol::kNormalization) {
        fail(ErrorKind::Normalization,
             "effects sum deviates from the identity by " + std::to_string(deviation));
    }
    if (labels.empty()) {
        labels = default_labels(effects.size());
    }
    require(labels.size() == effects.size(), ErrorKind::Config,
            "label count does not match effect count");

    auto impl = std::make_shared<Impl>();
    impl->dim = dim;
    impl->effects = std::move(effects);
    impl->labels = std::move(labels);
    return Povm(std::move(impl));
}

int Povm::dim() const {
    return impl_->dim;
}

std::size_t Povm::size() const {
    return impl_->effects.size();
}

const std::vector<HermitianOperator> &Povm::effects() const {
    return impl_->effects;
}

const HermitianOperator &Povm::effect(std::size_t k) const {
    require(k < impl_->effects.size(), ErrorKind::Range, "effect index out of range");
    return impl_->effects[k];
}

const std::vector<std::string> &Povm::labels() const {
    return impl_->labels;
}

const void *Povm::id() const {
    return impl_.get();
}

bool Povm::is_informationally_complete() const {
    {
        std::lock_guard<std::mutex> lock(impl_->cache_mutex);
        if (impl_->ic_cache >= 0) {
            return impl_->ic_cache == 1;
        }
    }
    OperatorBasis basis = OperatorBasis::standard(impl_->dim);
    Eigen::MatrixXd frame = frame_matrix(*this, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(frame, Eigen::EigenvaluesOnly);
    double largest = solver.eigenvalues().maxCoeff();
    double smallest = solver.eigenvalues().minCoeff();
    bool complete = largest > 0.0 && smallest > tol::kIcRelative * largest;
    {
        std::lock_guard<std::mutex> lock(impl_->cache_mutex);
        impl_->ic_cache = complete ? 1 : 0;
    }
    return complete;
}

bool Povm::is_uniform_trace() const {
    double first = impl_->effects.front().trace();
    for (const auto &effect : impl_->effects) {
        if (std::abs(effect.trace() - first) > tol::kUniformity) {
            return false;
        }
    }
    return true;
}

bool is_informationally_complete(const Povm &povm) {
    return povm.is_informationally_complete();
}

Eigen::MatrixXd frame_matrix(const Povm &povm, const OperatorBasis &basis) {
    Eigen::Index n = static_cast<Eigen::Index>(basis.elements().size());
    Eigen::MatrixXd columns(n, static_cast<Eigen::Index>(povm.size()));
    for (std::size_t k = 0; k < povm.size(); ++k) {
        columns.col(static_cast<Eigen::Index>(k)) = basis.vectorize(povm.effect(k));
    }
    Eigen::MatrixXd frame = columns * columns.transpose();
    return (frame + frame.transpose()) / 2.0;
}

Povm qubit_povm(const QubitPovmParams &params, std::vector<std::string> labels) {
    require(params.weights.size() == params.directions.size(), ErrorKind::Config,
            "weights and directions must have equal lengths");
    require(!params.weights.empty(), ErrorKind::Config, "empty parametrization");
    double weight_sum = 0.0;
    std::array<double, 3> resolution{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < params.weights.size(); ++k) {
        double w = params.weights[k];
        require(w >= -1e-12, ErrorKind::Positivity, "negative weight");
        const auto &v = params.directions[k];
        double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        require(len <= 1.0 + 1e-9, ErrorKind::Positivity, "direction outside the unit ball");
        weight_sum += w;
        for (int i = 0; i < 3; ++i) {
            resolution[static_cast<std::size_t>(i)] += w * v[static_cast<std::size_t>(i)];
        }
    }
    require(std::abs(weight_sum - 2.0) <= tol::kNormalization, ErrorKind::Normalization,
            "weights must sum to 2");
    double res_norm = std::sqrt(resolution[0] * resolution[0] + resolution[1] * resolution[1] +
                                resolution[2] * resolution[2]);
    require(res_norm <= tol::kNormalization, ErrorKind::Normalization,
            "weighted directions must sum to zero");

    std::vector<HermitianOperator> effects;
    effects.reserve(params.weights.size());
    for (std::size_t k = 0; k < params.weights.size(); ++k) {
        BlochVector b;
        b.x0 = params.weights[k];
        for (int i = 0; i < 3; ++i) {
            b.r[static_cast<std::size_t>(i)] =
                params.weights[k] * params.directions[k][static_cast<std::size_t>(i)];
        }
        effects.push_back(from_bloch(b));
    }
    return Povm::validate(std::move(effects), std::move(labels));
}

QubitPovmParams qubit_params(const Povm &povm) {
    require(povm.dim() == 2, ErrorKind::Dimension, "qubit parametrization requires dimension 2");
    QubitPovmParams params;
    params.weights.reserve(povm.size());
    params.directions.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        BlochVector b = to_bloch(effect);
        params.weights.push_back(b.x0);
        std::array<double, 3> v{0.0, 0.0, 0.0};
        if (b.x0 > 1e-14) {
            for (std::size_t i = 0; i < 3; ++i) {
                v[i] = b.r[i] / b.x0;
            }
        }
        params.directions.push_back(v);
    }
    return params;
}

Povm inverted(const Povm &povm) {
    QubitPovmParams params = qubit_params(povm);
    for (auto &v : params.directions) {
        for (auto &c : v) {
            c = -c;
        }
    }
    return qubit_povm(params, povm.labels());
}

Povm depolarize(const Povm &povm, double p) {
    require(p >= 0.0 && p <= 1.0, ErrorKind::Range, "noise parameter must lie in [0, 1]");
    int dim = povm.dim();
    HermitianOperator white = HermitianOperator::identity(dim) * (1.0 / dim);
    std::vector<HermitianOperator> effects;
    effects.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        effects.push_back(white * ((1.0 - p) * effect.trace()) + effect * p);
    }
    return Povm::validate(std::move(effects), povm.labels());
}

namespace {

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

// Best rational approximation with denominator <= cap, by continued
// fractions including the final semiconvergent.
Fraction best_approximant(double x, std::uint64_t cap) {
    Fraction prev{1, 0};  // h_{-1}/k_{-1}
    Fraction curr{static_cast<std::uint64_t>(std::floor(x)), 1};
    double frac = x - std::floor(x);
    for (int depth = 0; depth < 64 && frac > 1e-15; ++depth) {
        double inv = 1.0 / frac;
        double a_f = std::floor(inv);
        if (a_f > 1e18) {
            break;
        }
        std::uint64_t a = static_cast<std::uint64_t>(a_f);
        frac = inv - a_f;
        std::uint64_t next_den = prev.den + a * curr.den;
        if (next_den > cap) {
            // Semiconvergent: largest partial step that stays under the cap.
            std::uint64_t steps = (cap - prev.den) / curr.den;
            if (steps > 0) {
                Fraction semi{prev.num + steps * curr.num, prev.den + steps * curr.den};
                double err_semi = std::abs(x - static_cast<double>(semi.num) / semi.den);
                double err_curr = std::abs(x - static_cast<double>(curr.num) / curr.den);
                if (err_semi < err_curr) {
                    return semi;
                }
            }
            return curr;
        }
        Fraction next{prev.num + a * curr.num, next_den};
        prev = curr;
        curr = next;
    }
    return curr;
}

}  // namespace

Povm uniform_trace_split(const Povm &povm, std::uint64_t denominator_cap) {
    require(denominator_cap >= 1, ErrorKind::Range, "denominator cap must be positive");
    std::vector<double> traces;
    traces.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        double t = effect.trace();
        if (t < 1e-12) {
            fail(ErrorKind::Approximation, "zero-trace effect cannot be split");
        }
        traces.push_back(t);
    }

    // Common denominator q = lcm of per-trace best approximants.
    std::uint64_t q = 1;
    for (double t : traces) {
        Fraction f = best_approximant(t, denominator_cap);
        if (f.den == 0 ||
            std::abs(t - static_cast<double>(f.num) / f.den) > tol::kTraceApprox) {
            fail(ErrorKind::Approximation,
                 "no rational approximation of trace " + std::to_string(t) +
                     " with denominator up to " + std::to_string(denominator_cap));
        }
        std::uint64_t g = std::gcd(q, f.den);
        std::uint64_t other = f.den / g;
        if (other != 0 && q > denominator_cap / other) {
            fail(ErrorKind::Approximation,
                 "traces have no common denominator up to " + std::to_string(denominator_cap));
        }
        q *= other;
    }

    std::vector<std::uint64_t> numerators;
    numerators.reserve(traces.size());
    std::uint64_t common = 0;
    for (double t : traces) {
        double scaled = t * static_cast<double>(q);
        std::uint64_t m = static_cast<std::uint64_t>(std::llround(scaled));
        if (m == 0 || std::abs(t - static_cast<double>(m) / q) > tol::kTraceApprox) {
            fail(ErrorKind::Approximation,
                 "traces have no common denominator up to " + std::to_string(denominator_cap));
        }
        numerators.push_back(m);
        common = std::gcd(common, m);
    }

    bool unchanged = true;
    for (std::uint64_t m : numerators) {
        if (m != common) {
            unchanged = false;
            break;
        }
    }
    if (unchanged) {
        return povm;
    }

    std::vector<HermitianOperator> effects;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < povm.size(); ++k) {
        std::uint64_t copies = numerators[k] / common;
        HermitianOperator piece = povm.effect(k) * (1.0 / static_cast<double>(copies));
        for (std::uint64_t c = 0; c < copies; ++c) {
            effects.push_back(piece);
            labels.push_back(copies == 1 ? povm.labels()[k]
                                         : povm.labels()[k] + "#" + std::to_string(c));
        }
    }
    return Povm::validate(std::move(effects), std::move(labels));
}

Povm from_unitary_ensemble(const std::vector<Matrix> &unitaries, bool merge_duplicates) {
    require(!unitaries.empty(), ErrorKind::Config, "empty unitary ensemble");
    Eigen::Index dim = unitaries.front().rows();
    require(dim >= 2, ErrorKind::Dimension, "unitaries must have dimension at least 2");
    for (const auto &u : unitaries) {
        require(u.rows() == dim && u.cols() == dim, ErrorKind::Dimension,
                "unitaries have mixed dimensions");
        double dev = (u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
        if (dev > tol::kUnitarity) {
            fail(ErrorKind::NonUnitary,
                 "matrix deviates from unitarity by " + std::to_string(dev));
        }
    }

    double scale = 1.0 / static_cast<double>(unitaries.size());
    std::vector<HermitianOperator> effects;
    std::vector<std::string> labels;
    std::vector<double> merge_counts;
    for (std::size_t ui = 0; ui < unitaries.size(); ++ui) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            Eigen::VectorXcd state = unitaries[ui].adjoint().col(b);
            HermitianOperator effect = hermitian_unchecked(scale * (state * state.adjoint()));
            std::string label = "u" + std::to_string(ui) + ":b" + std::to_string(b);
            if (merge_duplicates) {
                bool merged = false;
                for (std::size_t j = 0; j < effects.size(); ++j) {
                    // Groups accumulate sums; compare against the group's
                    // per-occurrence average.
                    if (max_abs_diff(effects[j] * (1.0 / merge_counts[j]), effect) <=
                        tol::kEffectMerge) {
                        effects[j] = effects[j] + effect;
                        merge_counts[j] += 1.0;
                        merged = true;
                        break;
                    }
                }
                if (!merged) {
                    effects.push_back(effect);
                    labels.push_back(label);
                    merge_counts.push_back(1.0);
                }
            } else {
                effects.push_back(effect);
                labels.push_back(label);
            }
        }
    }
    return Povm::validate(std::move(effects), std::move(labels));
}

SymmetryCoefficients symmetry_coefficients(const Povm &povm) {
    std::size_t n = povm.size();
    std::vector<double> alphas(n), betas(n), gammas(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        alphas[k] = povm.effect(k).trace();
        betas[k] = trace_product(povm.effect(k), povm.effect(k));
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            double overlap = trace_product(povm.effect(k), povm.effect(l));
            gammas[k] += overlap * overlap;
        }
    }
    auto spread = [](const std::vector<double> &values) {
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        return *hi - *lo;
    };
    if (spread(alphas) > tol::kUniformity || spread(betas) > tol::kUniformity ||
        spread(gammas) > tol::kUniformity) {
        fail(ErrorKind::NotUniform, "trace moments differ across effects");
    }

    SymmetryCoefficients coeffs;
    double dim = povm.dim();
    coeffs.alpha = alphas.front();
    coeffs.beta = betas.front();
    coeffs.gamma = gammas.front();
    double denom = dim * coeffs.gamma - coeffs.alpha * coeffs.alpha * coeffs.alpha;
    if (std::abs(denom) < tol::kDegenerate) {
        fail(ErrorKind::Degenerate, "closed form is degenerate: D*gamma - alpha^3 ~ 0");
    }
    coeffs.a = (dim * coeffs.beta - coeffs.alpha * coeffs.alpha) / denom;
    coeffs.b = (coeffs.gamma - coeffs.alpha * coeffs.beta) / denom;
    return coeffs;
}

Povm tensor_povm(const std::vector<Povm> &sites, int dim_cap, std::size_t effect_cap) {
    require(!sites.empty(), ErrorKind::Config, "no sites given");
    std::vector<HermitianOperator> effects = sites.front().effects();
    std::vector<std::string> labels = sites.front().labels();
    for (std::size_t s = 1; s < sites.size(); ++s) {
        std::size_t grown = effects.size() * sites[s].size();
        require(grown <= effect_cap, ErrorKind::SizeLimit,
                "joint measurement would have " + std::to_string(grown) + " effects");
        std::vector<HermitianOperator> next;
        std::vector<std::string> next_labels;
        next.reserve(grown);
        next_labels.reserve(grown);
        for (std::size_t i = 0; i < effects.size(); ++i) {
            for (std::size_t k = 0; k < sites[s].size(); ++k) {
                next.push_back(tensor(effects[i], sites[s].effect(k), dim_cap));
                next_labels.push_back(labels[i] + "," + sites[s].labels()[k]);
            }
        }
        effects = std::move(next);
        labels = std::move(next_labels);
    }
    return Povm::validate(std::move(effects), std::move(labels));
}

std::shared_ptr<const ClassicalShadowSet> Povm::cached_shadows() const {
    std::lock_guard<std::mutex> lock(impl_->cache_mutex);
    return impl_->shadow_cache;
}

std::shared_ptr<const ClassicalShadowSet> Povm::store_shadows(
    std::shared_ptr<const ClassicalShadowSet> shadows) const {
    std::lock_guard<std::mutex> lock(impl_->cache_mutex);
    if (!impl_->shadow_cache) {
        impl_->shadow_cache = std::move(shadows);
    }
    return impl_->shadow_cache;
}

}  // namespace sht
