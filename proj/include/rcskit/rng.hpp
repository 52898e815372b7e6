#ifndef RCSKIT_RNG_HPP
#define RCSKIT_RNG_HPP

#include <cstdint>
#include <random>

namespace rcskit {

// Quantile function of the standard normal distribution (Acklam's rational
// approximation refined by one Halley step), |error| ~ 1e-15 for p in (0,1).
double normal_quantile(double p);

// Deterministic generator. The draw algorithms are part of the output
// contract: mt19937_64 (bit-exact sequence fixed by the C++ standard),
// uniforms from the top 53 bits, normals via the inverse CDF, one engine
// output per variate. Changing any of these breaks pinned golden fixtures.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream for (seed, stream); used for per-snapshot
    // parallel generation with a deterministic result.
    static Rng substream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0,1): ((x >> 11) + 0.5) * 2^-53, never exactly 0 or 1.
    double uniform01();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Standard normal draw; consumes exactly one engine output.
    double normal();

private:
    std::mt19937_64 engine_;
};

} // namespace rcskit

#endif
