/*
Copyright 2026 the gencode authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "gencode/payoffs.hpp"

#include <algorithm>
#include <cmath>

namespace gencode {

namespace detail {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw AlphaOutOfRange("alpha must lie in [0,1], got " +
                              std::to_string(alpha));
    }
}

void check_t(double t) {
    if (!(t > -1.0) || !std::isfinite(t)) {
        throw TOutOfRange("t must lie in (-1, inf), got " +
                          std::to_string(t));
    }
}

}  // namespace detail

namespace {

void check_sizes(const LengthVector& l, const SourceModel& m) {
    if (l.size() != m.size()) {
        throw InadmissibleInput("length vector does not match model size");
    }
}

// (1/t) * log_D sum_i p_i D^(t x_i), exponent-shifted so large t cannot
// overflow.
double exp_log_mean(std::span<const double> x, std::span<const double> p,
                    double t, double ln_base) {
    double shift = -1e300;
    for (std::size_t i = 0; i < x.size(); ++i) {
        shift = std::max(shift, t * x[i] * ln_base);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += p[i] * std::exp(t * x[i] * ln_base - shift);
    }
    return (shift + std::log(s)) / (t * ln_base);
}

}  // namespace

double payoff_max_avg(const LengthVector& l, const SourceModel& m,
                      double alpha) {
    detail::check_alpha(alpha);
    check_sizes(l, m);
    return alpha * max_length(l) + (1.0 - alpha) * average_length(l, m);
}

double payoff_max_avg_redundancy(const LengthVector& l, const SourceModel& m,
                                 double alpha) {
    detail::check_alpha(alpha);
    check_sizes(l, m);
    const double ln_base = std::log(static_cast<double>(m.base));
    double max_red = -1e300;
    for (int i = 0; i < m.size(); ++i) {
        max_red = std::max(max_red,
                           l.values[i] + std::log(m.probs[i]) / ln_base);
    }
    const double avg_red = average_length(l, m) - entropy(m);
    return alpha * max_red + (1.0 - alpha) * avg_red;
}

double payoff_exp_avg(const LengthVector& l, const SourceModel& m,
                      double alpha, double t) {
    detail::check_alpha(alpha);
    detail::check_t(t);
    check_sizes(l, m);
    const double avg = average_length(l, m);
    if (t == 0.0) {
        return avg;  // continuous extension: the exponential mean -> E[l]
    }
    const double ln_base = std::log(static_cast<double>(m.base));
    const double exp_term = exp_log_mean(l.values, m.probs, t, ln_base);
    return alpha * exp_term + (1.0 - alpha) * avg;
}

double payoff_exp_avg_redundancy(const LengthVector& l, const SourceModel& m,
                                 double alpha, double t) {
    detail::check_alpha(alpha);
    detail::check_t(t);
    check_sizes(l, m);
    const double avg_red = average_length(l, m) - entropy(m);
    if (t == 0.0) {
        return avg_red;
    }
    const double ln_base = std::log(static_cast<double>(m.base));
    std::vector<double> red(m.size());
    for (int i = 0; i < m.size(); ++i) {
        red[i] = l.values[i] + std::log(m.probs[i]) / ln_base;
    }
    const double exp_term = exp_log_mean(red, m.probs, t, ln_base);
    return alpha * exp_term + (1.0 - alpha) * avg_red;
}

}  // namespace gencode
