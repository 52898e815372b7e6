#include "rcskit/kernels.hpp"
#include "rcskit/errors.hpp"

#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rcskit::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double compensated_sum(std::span<const double> values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double taps_power(std::span<const std::complex<double>> taps) {
    double sum = 0.0, comp = 0.0;
    for (const auto& t : taps) {
        const double v = t.real() * t.real() + t.imag() * t.imag();
        const double s = sum + v;
        if (sum >= v)
            comp += (sum - s) + v;
        else
            comp += (v - s) + sum;
        sum = s;
    }
    return sum + comp;
}

std::vector<double> snapshot_powers(std::span<const CirRecord> records, Exec exec) {
    std::vector<double> out(records.size());
    const std::int64_t n = static_cast<std::int64_t>(records.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            out[i] = taps_power(records[i].taps);
    } else {
        for (std::int64_t i = 0; i < n; ++i)
            out[i] = taps_power(records[i].taps);
    }
    return out;
}

Moments log_moments(std::span<const double> samples, Exec exec) {
    const std::int64_t n = static_cast<std::int64_t>(samples.size());
    if (n < 1)
        throw validation_error("log_moments: empty sample set");

    std::vector<double> logs(samples.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            logs[i] = std::log(samples[i]);
    } else {
        for (std::int64_t i = 0; i < n; ++i)
            logs[i] = std::log(samples[i]);
    }
    for (std::int64_t i = 0; i < n; ++i) {
        if (!std::isfinite(logs[i]))
            throw validation_error("log_moments: sample " + std::to_string(i) +
                                   " is not strictly positive");
    }

    Moments m;
    m.mean = compensated_sum(logs) / static_cast<double>(n);

    std::vector<double> sq(samples.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const double d = logs[i] - m.mean;
            sq[i] = d * d;
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            const double d = logs[i] - m.mean;
            sq[i] = d * d;
        }
    }
    m.stddev = std::sqrt(compensated_sum(sq) / static_cast<double>(n));
    return m;
}

namespace {

std::complex<double> correlate_delay(std::span<const std::complex<double>> rx,
                                     std::span<const std::complex<double>> code, int d) {
    const int L = static_cast<int>(code.size());
    std::complex<double> acc{0.0, 0.0};
    for (int m = 0; m < L; ++m) {
        int k = m - d;
        if (k < 0)
            k += L;
        acc += rx[m] * std::conj(code[k]);
    }
    return acc / static_cast<double>(L);
}

} // namespace

std::vector<std::complex<double>> recover_taps(std::span<const std::complex<double>> rx,
                                               std::span<const std::complex<double>> code,
                                               int n_out, Exec exec) {
    if (rx.size() != code.size())
        throw validation_error("recover_taps: received and code lengths differ");
    if (n_out < 1 || static_cast<std::size_t>(n_out) > code.size())
        throw validation_error("recover_taps: n_out out of range");

    std::vector<std::complex<double>> out(n_out);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int d = 0; d < n_out; ++d)
            out[d] = correlate_delay(rx, code, d);
    } else {
        for (int d = 0; d < n_out; ++d)
            out[d] = correlate_delay(rx, code, d);
    }
    return out;
}

} // namespace rcskit::kernels
