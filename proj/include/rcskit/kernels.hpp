#ifndef RCSKIT_KERNELS_HPP
#define RCSKIT_KERNELS_HPP

#include <complex>
#include <span>
#include <vector>

#include "rcskit/types.hpp"

namespace rcskit::kernels {

// Every kernel has a plain serial path (the reference implementation) and an
// OpenMP path. Both decompose the work as an elementwise map into an
// index-addressed buffer followed by an ordered reduction, so the two paths
// produce bit-identical results; the unit tests assert that and the bench
// target compares their throughput.
enum class Exec { Serial, Parallel };

int max_threads();

// Per-record CIR power: sum_n |taps[n]|^2, Neumaier-compensated in tap order.
double taps_power(std::span<const std::complex<double>> taps);

// taps_power over a batch of records, one result per record in input order.
std::vector<double> snapshot_powers(std::span<const CirRecord> records, Exec exec);

// Ordered Neumaier sum; the reduction used by every kernel.
double compensated_sum(std::span<const double> values);

struct Moments {
    double mean = 0.0;
    double stddev = 0.0; // divisor n
};

// Mean and standard deviation of ln(x) over strictly positive samples.
Moments log_moments(std::span<const double> samples, Exec exec);

// Circular cross-correlation recovery: out[d] = (1/L) sum_m rx[m]*conj(code[(m-d) mod L])
// for d in [0, n_out). Parallel over output delays.
std::vector<std::complex<double>> recover_taps(std::span<const std::complex<double>> rx,
                                               std::span<const std::complex<double>> code,
                                               int n_out, Exec exec);

} // namespace rcskit::kernels

#endif
