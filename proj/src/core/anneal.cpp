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

#include "core/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/rng.hpp"
#include "core/tolerances.hpp"

namespace sht {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec4 = Eigen::Vector4d;

Vec4 bloch4(const HermitianOperator &op) {
    BlochVector b = to_bloch(op);
    return Vec4(b.x0, b.r[0], b.r[1], b.r[2]);
}

struct Candidate {
    std::vector<double> weights;
    std::vector<std::array<double, 3>> dirs;
};

// Objective evaluation in Bloch coordinates. Effects have coordinates
// w_k (1, v_k); the frame matrix is (1/2) sum w_k^2 u_k u_k^T with
// u_k = (1, v_k), shadows are its inverse applied to the effect vectors, and
// a per-site norm is (m0 + |m|)/2 for the accumulated norm operator (m0, m).
class Evaluator {
   public:
    // factors[i][s] = Bloch coordinates of observable i's factor on site s.
    explicit Evaluator(std::vector<std::vector<Vec4>> factors)
        : factors_(std::move(factors)) {}

    double operator()(const Candidate &cand) const {
        std::size_t n = cand.weights.size();
        Eigen::Matrix4d frame = Eigen::Matrix4d::Zero();
        std::vector<Vec4> effects(n);
        for (std::size_t k = 0; k < n; ++k) {
            Vec4 u(1.0, cand.dirs[k][0], cand.dirs[k][1], cand.dirs[k][2]);
            effects[k] = cand.weights[k] * u;
            frame += 0.5 * cand.weights[k] * cand.weights[k] * (u * u.transpose());
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(frame);
        double largest = solver.eigenvalues().maxCoeff();
        if (!(largest > 0.0) ||
            solver.eigenvalues().minCoeff() <= tol::kIcRelative * largest) {
            return kInf;
        }
        Eigen::Matrix4d inverse = solver.eigenvectors() *
                                  solver.eigenvalues().cwiseInverse().asDiagonal() *
                                  solver.eigenvectors().transpose();
        std::vector<Vec4> shadows(n);
        for (std::size_t k = 0; k < n; ++k) {
            shadows[k] = inverse * effects[k];
        }

        double worst = 0.0;
        for (const auto &observable : factors_) {
            double product = 1.0;
            for (const Vec4 &x : observable) {
                Vec4 m = Vec4::Zero();
                for (std::size_t k = 0; k < n; ++k) {
                    double w = 0.5 * shadows[k].dot(x);
                    m += (w * w) * effects[k];
                }
                product *= 0.5 * (m(0) + m.tail<3>().norm());
            }
            worst = std::max(worst, product);
        }
        return worst;
    }

   private:
    std::vector<std::vector<Vec4>> factors_;
};

std::array<double, 3> random_unit(CounterRng &rng) {
    while (true) {
        double x = rng.next_gaussian();
        double y = rng.next_gaussian();
        double z = rng.next_gaussian();
        double len = std::sqrt(x * x + y * y + z * z);
        if (len > 1e-12) {
            return {x / len, y / len, z / len};
        }
    }
}

Candidate initial_candidate(std::uint32_t outcomes, CounterRng &rng) {
    Candidate cand;
    cand.weights.assign(outcomes, 2.0 / outcomes);
    cand.dirs.reserve(outcomes);
    for (std::uint32_t k = 0; k < outcomes; ++k) {
        cand.dirs.push_back(random_unit(rng));
    }
    // Shift the mean to zero, then contract everything back into the ball;
    // a uniform contraction keeps the weighted sum at zero.
    std::array<double, 3> mean{0, 0, 0};
    for (const auto &v : cand.dirs) {
        for (int i = 0; i < 3; ++i) mean[i] += v[i] / outcomes;
    }
    double max_len = 0.0;
    for (auto &v : cand.dirs) {
        for (int i = 0; i < 3; ++i) v[i] -= mean[i];
        max_len = std::max(max_len, std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
    }
    if (max_len > 1.0) {
        for (auto &v : cand.dirs) {
            for (auto &c : v) c /= max_len;
        }
    }
    return cand;
}

bool repair(Candidate &cand) {
    double weight_sum = 0.0;
    for (auto &w : cand.weights) {
        w = std::max(w, 0.0);
        weight_sum += w;
    }
    if (weight_sum <= 1e-12) {
        return false;
    }
    for (auto &v : cand.dirs) {
        double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (len > 1.0) {
            for (auto &c : v) c /= len;
        }
    }
    std::array<double, 3> shift{0, 0, 0};
    for (std::size_t k = 0; k < cand.weights.size(); ++k) {
        for (int i = 0; i < 3; ++i) {
            shift[i] += cand.weights[k] * cand.dirs[k][i] / weight_sum;
        }
    }
    for (auto &v : cand.dirs) {
        for (int i = 0; i < 3; ++i) v[i] -= shift[i];
    }
    double scale = 2.0 / weight_sum;
    for (auto &w : cand.weights) {
        w *= scale;
    }
    for (const auto &v : cand.dirs) {
        if (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] > 1.0 + 1e-12) {
            return false;
        }
    }
    return true;
}

bool propose(Candidate &cand, CounterRng &rng, double scale) {
    std::size_t k = static_cast<std::size_t>(rng.next_below(cand.weights.size()));
    if (rng.next_unit() < 0.5) {
        for (int i = 0; i < 3; ++i) {
            cand.dirs[k][i] += scale * rng.next_gaussian();
        }
    } else {
        cand.weights[k] += scale * (2.0 / cand.weights.size()) * rng.next_gaussian();
    }
    return repair(cand);
}

Povm to_povm(const Candidate &cand) {
    QubitPovmParams params;
    params.weights = cand.weights;
    params.directions = cand.dirs;
    return qubit_povm(params);
}

struct RestartOutcome {
    Candidate best;
    double best_objective;
    std::vector<std::pair<std::uint64_t, double>> trace;
};

RestartOutcome run_restart(const Evaluator &eval, const AnnealConfig &config,
                           std::uint64_t restart_key) {
    CounterRng init_rng(substream_key(restart_key, 0));
    CounterRng probe_rng(substream_key(restart_key, 1));
    CounterRng walk_rng(substream_key(restart_key, 2));

    Candidate current = initial_candidate(config.outcomes, init_rng);
    double current_value = eval(current);

    double t0 = config.initial_temperature;
    if (t0 <= 0.0) {
        // Self-scaling start: 90th percentile of |objective change| over 100
        // probe moves at full move scale.
        std::vector<double> deltas;
        for (int probe = 0; probe < 100; ++probe) {
            Candidate trial = current;
            if (!propose(trial, probe_rng, config.move_scale)) {
                continue;
            }
            double value = eval(trial);
            if (std::isfinite(value) && std::isfinite(current_value)) {
                deltas.push_back(std::abs(value - current_value));
            }
        }
        std::sort(deltas.begin(), deltas.end());
        if (!deltas.empty()) {
            std::size_t index = (deltas.size() * 9) / 10;
            index = std::min(index, deltas.size() - 1);
            t0 = deltas[index];
        }
        if (!(t0 > 0.0)) {
            t0 = 1.0;
        }
    }

    RestartOutcome out{current, current_value, {}};
    out.trace.emplace_back(0, current_value);

    double temperature = t0;
    for (std::uint64_t iter = 1; iter <= config.iterations; ++iter) {
        double factor = std::sqrt(std::max(temperature / t0, 4e-4));
        Candidate trial = current;
        if (propose(trial, walk_rng, config.move_scale * factor)) {
            double value = eval(trial);
            double delta = value - current_value;
            // Ties accept; both-infinite compares as NaN and rejects.
            bool accept = delta <= 0.0;
            if (!accept && std::isfinite(delta) && temperature > 0.0) {
                accept = walk_rng.next_unit() < std::exp(-delta / temperature);
            }
            if (accept) {
                current = std::move(trial);
                current_value = value;
                if (current_value < out.best_objective) {
                    out.best = current;
                    out.best_objective = current_value;
                    out.trace.emplace_back(iter, current_value);
                }
            }
        }
        temperature *= config.cooling_ratio;
    }
    return out;
}

void check_config(const AnnealConfig &config) {
    require(config.outcomes >= 4, ErrorKind::Config,
            "need at least 4 outcomes for an informationally complete qubit measurement");
    require(config.iterations >= 1, ErrorKind::Config, "need at least one iteration");
    require(config.cooling_ratio > 0.9 && config.cooling_ratio < 1.0, ErrorKind::Config,
            "cooling ratio must lie in (0.9, 1)");
    require(config.move_scale > 0.0, ErrorKind::Config, "move scale must be positive");
    require(config.restarts >= 1, ErrorKind::Config, "need at least one restart");
    require(config.initial_temperature >= 0.0, ErrorKind::Config,
            "initial temperature must be nonnegative (0 = auto)");
}

bool proportional_to_identity(const HermitianOperator &op) {
    double scale = op.trace() / op.dim();
    HermitianOperator ref = HermitianOperator::identity(op.dim()) * scale;
    return max_abs_diff(op, ref) <= 1e-12;
}

OptimizationResult anneal_impl(const std::vector<std::vector<HermitianOperator>> &site_factors,
                               const AnnealConfig &config) {
    check_config(config);
    require(!site_factors.empty(), ErrorKind::Config, "no target observables");

    bool degenerate = true;
    std::vector<std::vector<Vec4>> factor_blochs;
    factor_blochs.reserve(site_factors.size());
    for (const auto &observable : site_factors) {
        std::vector<Vec4> blochs;
        blochs.reserve(observable.size());
        for (const auto &factor : observable) {
            require(factor.dim() == 2, ErrorKind::NotFactorized,
                    "factorized targets must be qubit operators");
            degenerate = degenerate && proportional_to_identity(factor);
            blochs.push_back(bloch4(factor));
        }
        factor_blochs.push_back(std::move(blochs));
    }
    Evaluator eval(std::move(factor_blochs));

    if (degenerate) {
        // Constant objective: report the untouched initial measurement.
        CounterRng init_rng(substream_key(substream_key(config.seed, 0), 0));
        Candidate cand = initial_candidate(config.outcomes, init_rng);
        double value = eval(cand);
        Povm povm = to_povm(cand);
        return OptimizationResult{povm,
                                  value,
                                  {{0, value}},
                                  {RestartSummary{0, value, povm}},
                                  true};
    }

    OptimizationResult result{Povm::validate({HermitianOperator::identity(2) * 0.5,
                                              HermitianOperator::identity(2) * 0.5}),
                              kInf,
                              {},
                              {},
                              false};
    for (std::uint32_t r = 0; r < config.restarts; ++r) {
        RestartOutcome outcome = run_restart(eval, config, substream_key(config.seed, r));
        Povm povm = to_povm(outcome.best);
        result.restarts.push_back(RestartSummary{r, outcome.best_objective, povm});
        if (outcome.best_objective < result.best_objective) {
            result.best_objective = outcome.best_objective;
            result.best_povm = povm;
            result.objective_trace = std::move(outcome.trace);
        }
    }
    return result;
}

}  // namespace

double objective(const Povm &povm, std::span<const HermitianOperator> observables) {
    require(!observables.empty(), ErrorKind::EmptyData, "no target observables");
    double worst = 0.0;
    for (const auto &x : observables) {
        worst = std::max(worst, squared_shadow_norm(povm, x).squared_norm);
    }
    return worst;
}

OptimizationResult anneal_single_qubit(std::span<const HermitianOperator> observables,
                                       const AnnealConfig &config) {
    require(!observables.empty(), ErrorKind::Config, "no target observables");
    std::vector<std::vector<HermitianOperator>> wrapped;
    wrapped.reserve(observables.size());
    for (const auto &x : observables) {
        require(x.dim() == 2, ErrorKind::Dimension, "targets must be qubit operators");
        wrapped.push_back({x});
    }
    return anneal_impl(wrapped, config);
}

OptimizationResult anneal_factorized(
    std::size_t n_sites, const std::vector<std::vector<HermitianOperator>> &site_factors,
    const AnnealConfig &config) {
    require(n_sites >= 1, ErrorKind::Config, "need at least one site");
    for (const auto &observable : site_factors) {
        if (observable.size() != n_sites) {
            fail(ErrorKind::NotFactorized,
                 "every observable needs exactly one factor per site");
        }
    }
    return anneal_impl(site_factors, config);
}

namespace anneal_detail {

bool repair_candidate(QubitPovmParams &params) {
    Candidate cand{params.weights, params.directions};
    bool ok = repair(cand);
    if (ok) {
        params.weights = cand.weights;
        params.directions = cand.dirs;
    }
    return ok;
}

}  // namespace anneal_detail

}  // namespace sht
