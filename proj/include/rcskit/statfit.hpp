#ifndef RCSKIT_STATFIT_HPP
#define RCSKIT_STATFIT_HPP

#include <span>
#include <vector>

#include "rcskit/kernels.hpp"
#include "rcskit/types.hpp"

namespace rcskit {

// Maximum-likelihood log-normal fit (divisor n) with KS and CDF-MSE computed
// against the fitted distribution. Requires n >= 2 and strictly positive
// samples. A constant sample set gives sigma == 0 with the degenerate flag
// set and zero goodness-of-fit metrics.
LognormalFit fit_lognormal(std::span<const double> samples,
                           kernels::Exec exec = kernels::Exec::Parallel);
LognormalFit fit_lognormal(const RcsSampleSet& set,
                           kernels::Exec exec = kernels::Exec::Parallel);

double lognormal_pdf(double x, double mu, double sigma);

// Phi((ln x - mu)/sigma) via erfc.
double lognormal_cdf(double x, double mu, double sigma);

// Right-continuous empirical CDF: F(x) = (#samples <= x)/n.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::span<const double> samples);

    double operator()(double x) const;
    const std::vector<double>& sorted() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

EmpiricalCdf empirical_cdf(std::span<const double> samples);

// Two-sided sup distance between the empirical step CDF and the fitted
// log-normal CDF, evaluated at the order statistics:
// max_i max(|i/n - F(x_(i))|, |(i-1)/n - F(x_(i))|).
double ks_statistic(std::span<const double> samples, double mu, double sigma);

// (1/n) sum_i (i/n - F(x_(i)))^2 with the upper step convention F(x_(i)) = i/n.
double cdf_mse(std::span<const double> samples, double mu, double sigma);

} // namespace rcskit

#endif
