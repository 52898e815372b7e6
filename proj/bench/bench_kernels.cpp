// Compares the serial reference kernels against the OpenMP paths and checks
// that both produce identical results.
//
// Usage: rcskit_bench [scale]   (scale >= 1 multiplies the workload sizes)

#include <chrono>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "rcskit/kernels.hpp"
#include "rcskit/rng.hpp"
#include "rcskit/synth.hpp"

using namespace rcskit;
using kernels::Exec;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void print_row(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-24s %10.1f ms %10.1f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const int scale = argc > 1 ? std::max(1, std::atoi(argv[1])) : 1;
    std::printf("threads available: %d, scale: %d\n\n", kernels::max_threads(), scale);
    std::printf("%-24s %13s %13s %9s   %s\n", "kernel", "serial", "openmp", "speedup",
                "results");

    Rng rng(42);

    // Batch CIR power over synthetic records.
    {
        const int n_records = 20000 * scale;
        std::vector<CirRecord> records(n_records);
        for (auto& r : records) {
            r.freq = Frequency{26.0};
            r.taps.resize(128);
            for (auto& t : r.taps)
                t = {rng.normal(), rng.normal()};
        }
        std::vector<double> a, b;
        const double ts = time_ms([&] { a = kernels::snapshot_powers(records, Exec::Serial); });
        const double tp = time_ms([&] { b = kernels::snapshot_powers(records, Exec::Parallel); });
        print_row("snapshot_powers", ts, tp, a == b);
    }

    // Log moments over a large sample vector.
    {
        const std::size_t n = 4000000u * static_cast<std::size_t>(scale);
        std::vector<double> samples(n);
        for (auto& s : samples)
            s = std::exp(-3.5 + 1.2 * rng.normal());
        kernels::Moments ms{}, mp{};
        const double ts = time_ms([&] { ms = kernels::log_moments(samples, Exec::Serial); });
        const double tp = time_ms([&] { mp = kernels::log_moments(samples, Exec::Parallel); });
        print_row("log_moments", ts, tp, ms.mean == mp.mean && ms.stddev == mp.stddev);
    }

    // Correlation recovery of a long code.
    {
        const int L = 2048;
        const auto code = zc_sequence(L, 5);
        std::vector<std::complex<double>> rx(L);
        for (auto& v : rx)
            v = {rng.normal(), rng.normal()};
        std::vector<std::complex<double>> a, b;
        const int reps = 20 * scale;
        const double ts = time_ms([&] {
            for (int i = 0; i < reps; ++i)
                a = kernels::recover_taps(rx, code, L, Exec::Serial);
        });
        const double tp = time_ms([&] {
            for (int i = 0; i < reps; ++i)
                b = kernels::recover_taps(rx, code, L, Exec::Parallel);
        });
        print_row("recover_taps", ts, tp, a == b);
    }

    // Full campaign generation (sound + recover per snapshot).
    {
        CampaignScenario sc = default_campaign_scenario();
        sc.snapshots_per_freq = 1000 * scale;
        Campaign cs, cp;
        const double ts = time_ms([&] { cs = generate_campaign(sc, 7, Exec::Serial); });
        const double tp = time_ms([&] { cp = generate_campaign(sc, 7, Exec::Parallel); });
        print_row("generate_campaign", ts, tp, cs.dataset == cp.dataset);
    }

    return 0;
}
