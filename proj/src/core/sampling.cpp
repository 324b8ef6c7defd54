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

#include "core/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "core/rng.hpp"
#include "core/tolerances.hpp"

namespace sht {

namespace {

// Neumaier variant of Kahan summation.
class CompensatedSum {
   public:
    void add(double value) {
        double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + compensation_; }

   private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

double compensated_mean(std::span<const double> values) {
    CompensatedSum sum;
    for (double v : values) {
        sum.add(v);
    }
    return sum.value() / static_cast<double>(values.size());
}

std::vector<double> outcome_cdf(const Povm &povm, const HermitianOperator &state) {
    std::vector<double> probabilities;
    probabilities.reserve(povm.size());
    double total = 0.0;
    for (const auto &effect : povm.effects()) {
        double p = trace_product(state, effect);
        require(p >= tol::kProbabilityClamp, ErrorKind::InvalidState,
                "negative outcome probability " + std::to_string(p));
        p = std::max(p, 0.0);
        probabilities.push_back(p);
        total += p;
    }
    require(total > 0.0, ErrorKind::InvalidState, "outcome probabilities sum to zero");
    std::vector<double> cdf(probabilities.size());
    double running = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        running += probabilities[k] / total;
        cdf[k] = running;
    }
    cdf.back() = 1.0;
    return cdf;
}

std::uint32_t sample_index(const std::vector<double> &cdf, double u) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<std::uint32_t>(it - cdf.begin());
}

double median_of_means(std::span<const double> values, std::uint32_t groups) {
    std::size_t group_size = values.size() / groups;
    std::vector<double> means;
    means.reserve(groups);
    for (std::uint32_t g = 0; g < groups; ++g) {
        means.push_back(compensated_mean(values.subspan(g * group_size, group_size)));
    }
    std::sort(means.begin(), means.end());
    std::size_t mid = means.size() / 2;
    if (means.size() % 2 == 1) {
        return means[mid];
    }
    return (means[mid - 1] + means[mid]) / 2.0;
}

void check_density(const HermitianOperator &rho) {
    if (std::abs(rho.trace() - 1.0) > tol::kNormalization ||
        min_eigenvalue(rho) < tol::kPsdFloor) {
        fail(ErrorKind::InvalidState, "state is not a density operator");
    }
}

}  // namespace

std::vector<OutcomeRecord> sample_outcomes(std::span<const Povm> povms,
                                           std::span<const HermitianOperator> states,
                                           const EstimatorConfig &config) {
    require(povms.size() == states.size() && !povms.empty(), ErrorKind::Dimension,
            "need one state per site");
    require(config.shots >= 1, ErrorKind::Config, "shot count must be positive");
    std::vector<std::vector<double>> cdfs;
    cdfs.reserve(povms.size());
    for (std::size_t s = 0; s < povms.size(); ++s) {
        require(states[s].dim() == povms[s].dim(), ErrorKind::Dimension,
                "state dimension does not match its site's measurement");
        check_density(states[s]);
        cdfs.push_back(outcome_cdf(povms[s], states[s]));
    }

    std::vector<OutcomeRecord> records(config.shots);
    for (std::uint64_t shot = 0; shot < config.shots; ++shot) {
        std::uint64_t shot_key = substream_key(config.seed, shot);
        auto &outcomes = records[shot].site_outcomes;
        outcomes.resize(povms.size());
        for (std::size_t s = 0; s < povms.size(); ++s) {
            double u = unit_double(stream_value(shot_key, s));
            outcomes[s] = sample_index(cdfs[s], u);
        }
    }
    return records;
}

double single_shot_estimate(
    std::span<const std::shared_ptr<const ClassicalShadowSet>> shadow_sets,
    const OutcomeRecord &record, std::span<const HermitianOperator> factors) {
    require(shadow_sets.size() == factors.size() &&
                shadow_sets.size() == record.site_outcomes.size() && !shadow_sets.empty(),
            ErrorKind::Dimension, "sites, factors, and outcomes must align");
    double product = 1.0;
    for (std::size_t s = 0; s < shadow_sets.size(); ++s) {
        const auto &set = *shadow_sets[s];
        std::uint32_t k = record.site_outcomes[s];
        require(k < set.size(), ErrorKind::Range, "outcome index out of range");
        require(factors[s].dim() == set.povm().dim(), ErrorKind::Dimension,
                "factor dimension does not match its site");
        product *= trace_product(set.shadow(k), factors[s]);
    }
    return product;
}

std::vector<double> single_shot_estimates(std::span<const Povm> povms,
                                          std::span<const HermitianOperator> factors,
                                          std::span<const OutcomeRecord> records) {
    require(povms.size() == factors.size() && !povms.empty(), ErrorKind::Dimension,
            "need one factor per site");
    // tables[s][k] = tr(rho_k X_s)
    std::vector<std::vector<double>> tables;
    tables.reserve(povms.size());
    for (std::size_t s = 0; s < povms.size(); ++s) {
        auto shadows = classical_shadows(povms[s]);
        require(factors[s].dim() == povms[s].dim(), ErrorKind::Dimension,
                "factor dimension does not match its site");
        std::vector<double> table;
        table.reserve(shadows->size());
        for (std::size_t k = 0; k < shadows->size(); ++k) {
            table.push_back(trace_product(shadows->shadow(k), factors[s]));
        }
        tables.push_back(std::move(table));
    }

    std::vector<double> estimates;
    estimates.reserve(records.size());
    for (const auto &record : records) {
        require(record.site_outcomes.size() == povms.size(), ErrorKind::Dimension,
                "record length does not match site count");
        double product = 1.0;
        for (std::size_t s = 0; s < povms.size(); ++s) {
            std::uint32_t k = record.site_outcomes[s];
            require(k < tables[s].size(), ErrorKind::Range, "outcome index out of range");
            product *= tables[s][k];
        }
        estimates.push_back(product);
    }
    return estimates;
}

double estimate_mean(std::span<const double> estimates, const EstimatorConfig &config) {
    require(!estimates.empty(), ErrorKind::EmptyData, "no estimates to aggregate");
    std::uint32_t groups = std::max<std::uint32_t>(config.median_groups, 1);
    groups = std::min<std::uint32_t>(groups, static_cast<std::uint32_t>(std::min<std::size_t>(
                                                 estimates.size(), 0xffffffffu)));
    if (groups == 1) {
        return compensated_mean(estimates);
    }
    return median_of_means(estimates, groups);
}

double empirical_variance(std::span<const double> values) {
    require(!values.empty(), ErrorKind::EmptyData, "no values");
    double mean = compensated_mean(values);
    CompensatedSum sum;
    for (double v : values) {
        double d = v - mean;
        sum.add(d * d);
    }
    return sum.value() / static_cast<double>(values.size());
}

SimulationSummary simulate_estimate(std::span<const Povm> povms,
                                    std::span<const HermitianOperator> states,
                                    std::span<const HermitianOperator> factors,
                                    const EstimatorConfig &config) {
    std::vector<OutcomeRecord> records = sample_outcomes(povms, states, config);
    std::vector<double> estimates = single_shot_estimates(povms, factors, records);
    return SimulationSummary{estimate_mean(estimates, config), empirical_variance(estimates)};
}

}  // namespace sht
