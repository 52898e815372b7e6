#include "rcskit/statfit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rcskit/errors.hpp"

namespace rcskit {

namespace {

void require_positive(std::span<const double> samples, const char* who) {
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (!(samples[i] > 0.0) || !std::isfinite(samples[i]))
            throw validation_error(std::string(who) + ": sample " + std::to_string(i) +
                                   " must be strictly positive");
}

} // namespace

LognormalFit fit_lognormal(std::span<const double> samples, kernels::Exec exec) {
    if (samples.size() < 2)
        throw validation_error("fit_lognormal: need at least two samples, got " +
                               std::to_string(samples.size()));
    require_positive(samples, "fit_lognormal");

    LognormalFit fit;
    fit.n = static_cast<std::int64_t>(samples.size());

    const auto [min_it, max_it] = std::minmax_element(samples.begin(), samples.end());
    if (*min_it == *max_it) {
        fit.mu = std::log(*min_it);
        fit.sigma = 0.0;
        fit.degenerate = true;
        return fit;
    }

    const kernels::Moments m = kernels::log_moments(samples, exec);
    fit.mu = m.mean;
    fit.sigma = m.stddev;
    if (fit.sigma == 0.0) {
        fit.degenerate = true;
        return fit;
    }
    fit.ks = ks_statistic(samples, fit.mu, fit.sigma);
    fit.mse = cdf_mse(samples, fit.mu, fit.sigma);
    return fit;
}

LognormalFit fit_lognormal(const RcsSampleSet& set, kernels::Exec exec) {
    auto violations = set.validate();
    if (!violations.empty())
        throw validation_error("fit_lognormal: invalid sample set: " + violations.front());
    return fit_lognormal(std::span<const double>(set.samples), exec);
}

double lognormal_pdf(double x, double mu, double sigma) {
    if (!(x > 0.0))
        throw validation_error("lognormal_pdf: x must be positive");
    if (!(sigma > 0.0))
        throw validation_error("lognormal_pdf: sigma must be positive");
    const double z = (std::log(x) - mu) / sigma;
    return std::exp(-0.5 * z * z) / (x * sigma * std::sqrt(2.0 * std::numbers::pi));
}

double lognormal_cdf(double x, double mu, double sigma) {
    if (!(x > 0.0))
        throw validation_error("lognormal_cdf: x must be positive");
    if (!(sigma > 0.0))
        throw validation_error("lognormal_cdf: sigma must be positive");
    const double z = (std::log(x) - mu) / sigma;
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

EmpiricalCdf::EmpiricalCdf(std::span<const double> samples)
    : sorted_(samples.begin(), samples.end()) {
    if (sorted_.empty())
        throw validation_error("empirical_cdf: empty sample set");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf empirical_cdf(std::span<const double> samples) {
    return EmpiricalCdf(samples);
}

double ks_statistic(std::span<const double> samples, double mu, double sigma) {
    if (samples.empty())
        throw validation_error("ks_statistic: empty sample set");
    require_positive(samples, "ks_statistic");
    if (!(sigma > 0.0))
        throw validation_error("ks_statistic: sigma must be positive");

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const std::int64_t n = static_cast<std::int64_t>(sorted.size());

    std::vector<double> model(sorted.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        model[i] = lognormal_cdf(sorted[i], mu, sigma);

    double d = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        d = std::max(d, std::max(std::abs(hi - model[i]), std::abs(lo - model[i])));
    }
    return d;
}

double cdf_mse(std::span<const double> samples, double mu, double sigma) {
    if (samples.empty())
        throw validation_error("cdf_mse: empty sample set");
    require_positive(samples, "cdf_mse");
    if (!(sigma > 0.0))
        throw validation_error("cdf_mse: sigma must be positive");

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const std::int64_t n = static_cast<std::int64_t>(sorted.size());

    std::vector<double> sq(sorted.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double gap = static_cast<double>(i + 1) / static_cast<double>(n) -
                           lognormal_cdf(sorted[i], mu, sigma);
        sq[i] = gap * gap;
    }
    return kernels::compensated_sum(sq) / static_cast<double>(n);
}

} // namespace rcskit
